"""
Utility modules for the zero-free region engine.
"""
