"""
The smoothing kernel h_theta and its constants.
"""

from .kernel_factory import KernelFactory
from .smoothing_kernel import (
    M1_SANDWICH,
    M_SANDWICH,
    H_direct,
    H_remainder_bound,
    M_integral,
    SmoothingKernel,
    check_theta,
    g_constants,
    h,
    h_deriv,
    kernel_constants,
    laplace_F_tilde,
    monotonicity_epsilons,
    monotonicity_thresholds,
    support_end,
)

__all__ = [
    "KernelFactory",
    "M1_SANDWICH",
    "M_SANDWICH",
    "H_direct",
    "H_remainder_bound",
    "M_integral",
    "SmoothingKernel",
    "check_theta",
    "g_constants",
    "h",
    "h_deriv",
    "kernel_constants",
    "laplace_F_tilde",
    "monotonicity_epsilons",
    "monotonicity_thresholds",
    "support_end",
]
