"""
Trigonometric polynomials, the R -> R0 iteration and theta optimisation.
"""

from .iteration import (
    IterationRecord,
    K_omega,
    R0_step,
    R0_value,
    iterate,
    omega_of,
    optimize_theta,
    optimize_theta_schedule,
)
from .trig_poly import (
    TrigPolynomial,
    polynomial_for,
    trig_poly_custom,
    trig_poly_default,
    trig_poly_rosser_schoenfeld,
)

__all__ = [
    "IterationRecord",
    "K_omega",
    "R0_step",
    "R0_value",
    "TrigPolynomial",
    "iterate",
    "omega_of",
    "optimize_theta",
    "optimize_theta_schedule",
    "polynomial_for",
    "trig_poly_custom",
    "trig_poly_default",
    "trig_poly_rosser_schoenfeld",
]
