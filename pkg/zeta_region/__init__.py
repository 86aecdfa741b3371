"""
__init__.py file for the zeta_region package.

Explicit zero-free region computations for the Riemann zeta function.
"""

__version__ = "0.1.0"
