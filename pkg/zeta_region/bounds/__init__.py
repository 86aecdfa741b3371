"""
Explicit bounds: digamma estimates, zero counting, positivity and the remainder cubic.
"""
