"""
Quadrature, root finding and minimisation.
"""

from .quadrature import (
    DEFAULT_TOLERANCES,
    QuadratureResult,
    ToleranceConfig,
    integrate,
    integrate_improper_upper,
)
from .solvers import bisect_bracket, find_root, minimize_scalar

__all__ = [
    "DEFAULT_TOLERANCES",
    "QuadratureResult",
    "ToleranceConfig",
    "bisect_bracket",
    "find_root",
    "integrate",
    "integrate_improper_upper",
    "minimize_scalar",
]
