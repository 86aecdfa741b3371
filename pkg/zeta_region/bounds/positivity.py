"""
The kappa-delta positivity machinery.

kappa2 and kappa3 bound the admissible discount kappa from the real-axis
and pole contributions; their crossing fixes (delta0, kappa0). kappa1 is the
bound coming from zeros on the contour at height y0.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from .. import config
from ..exceptions import ParameterError, WindowViolation
from ..kernel import SmoothingKernel, laplace_F_tilde
from ..numerics import DEFAULT_TOLERANCES, find_root

logger = logging.getLogger("zeta_region.positivity")

INV_SQRT5 = 1 / math.sqrt(5)


@dataclass(frozen=True)
class PositivityParams:
    """eta0, sigma0 and the contour height y0, with the kernel whose constants enter kappa1..kappa3."""

    eta0: float
    sigma0: float
    kernel: SmoothingKernel
    y0: float = config.CONTOUR_HEIGHT

    def __post_init__(self):
        if not 0 <= self.eta0 <= config.ETA0_CEILING:
            raise ParameterError(f"eta0 must lie in [0, {config.ETA0_CEILING}], got {self.eta0}")
        if not config.SIGMA0_FLOOR <= self.sigma0 < 1:
            raise ParameterError(f"sigma0 must lie in [{config.SIGMA0_FLOOR}, 1), got {self.sigma0}")
        if self.y0 < config.CONTOUR_HEIGHT:
            raise ParameterError(f"y0 must be at least {config.CONTOUR_HEIGHT}, got {self.y0}")

    @property
    def theta(self):
        return self.kernel.theta


def _check_delta(delta):
    if not 0.07 <= delta <= 1:
        raise ParameterError(f"delta must lie in [0.07, 1], got {delta}")


def _shared_numerator(p):
    eta, g1, m = p.eta0, p.kernel.g1, p.kernel.m
    return g1 * (1 - 2 * eta) - m * eta * eta / (1 - 2 * eta)


def kappa2(delta, p):
    """
    kappa2(delta) = [g1 (1 - 2 eta) - m eta^2 / (1 - 2 eta)]
                    / [(1 + 2 delta) g1 + (1/delta + 1/(1 + delta - 2 eta)) m eta^2].

    Tends to 1/(1 + 2 delta) as eta0 -> 0.
    """
    _check_delta(delta)
    eta, g1, m = p.eta0, p.kernel.g1, p.kernel.m
    denominator = (1 + 2 * delta) * g1 + (1 / delta + 1 / (1 + delta - 2 * eta)) * m * eta * eta
    return _shared_numerator(p) / denominator


def kappa3(delta, p):
    """
    kappa3(delta): same numerator as kappa2 over
    (1/delta + (1 + delta)/(1 + delta - 2 eta)^2) g1 + (1/delta^3 + 1/(1 + delta - 2 eta)^3) m eta^2.

    Tends to 1/(1/delta + 1/(1 + delta)) as eta0 -> 0.
    """
    _check_delta(delta)
    eta, g1, m = p.eta0, p.kernel.g1, p.kernel.m
    shifted = 1 + delta - 2 * eta
    denominator = (
        (1 / delta + (1 + delta) / shifted**2) * g1
        + (1 / delta**3 + 1 / shifted**3) * m * eta * eta
    )
    return _shared_numerator(p) / denominator


def kappa_window(delta):
    """
    Admissible kappa range for a given delta.

    Returns:
        tuple: ((delta^-3 + (1 + delta)^-3)^-1, (delta^-1 + (0.99 + delta)^-1)^-1)
    """
    lower = 1 / (delta**-3 + (1 + delta) ** -3)
    upper = 1 / (1 / delta + 1 / (config.SIGMA0_FLOOR + delta))
    return lower, upper


def solve_delta_kappa(p, tol=config.ROOT_TOL):
    """
    Solve kappa2(delta) = kappa3(delta) on [0.5, 0.75].

    kappa2 decreases and kappa3 increases in delta, so the crossing
    maximises min(kappa2, kappa3).

    Args:
        p (PositivityParams): eta0, sigma0 and kernel
        tol (float, optional): Bracket width for delta

    Returns:
        tuple: (delta0, kappa0) with kappa0 = kappa2(delta0)

    Raises:
        WindowViolation: If kappa0 falls outside kappa_window(delta0)
    """
    delta = find_root(lambda d: kappa2(d, p) - kappa3(d, p), *config.DELTA_BRACKET, tol)
    kappa = kappa2(delta, p)
    lower, upper = kappa_window(delta)
    if not lower <= kappa <= upper:
        logger.error(f"kappa0 = {kappa:.6f} outside [{lower:.6f}, {upper:.6f}] at delta0 = {delta:.6f}")
        raise WindowViolation(
            f"kappa0 = {kappa:.6f} outside the admissible window [{lower:.6f}, {upper:.6f}]",
            delta=delta, kappa=kappa,
        )
    logger.debug(f"eta0 = {p.eta0:.8f}: delta0 = {delta:.8f}, kappa0 = {kappa:.8f}")
    return delta, kappa


def kappa1(delta, p):
    """
    Contour-side bound kappa1(y0, delta).

    Numerator:   g1 (2 sigma0 - 1) y0^2/(y0^2 + 1) - [(3m + 3m eta + M1(0)) eta^2 + m1 eta^3/(1/2 - eta)] / y0
    Denominator: g1 (2 sigma0 + 2 delta - 1) + [6 m eta^2 + 2 m1 eta^3 / delta] / y0
    """
    _check_delta(delta)
    k = p.kernel
    eta, sigma, y0 = p.eta0, p.sigma0, p.y0
    numerator = (
        k.g1 * (2 * sigma - 1) * y0 * y0 / (y0 * y0 + 1)
        - ((3 * k.m + 3 * k.m * eta + k.M1_0) * eta * eta + k.m1 * eta**3 / (0.5 - eta)) / y0
    )
    denominator = k.g1 * (2 * sigma + 2 * delta - 1) + (6 * k.m * eta * eta + 2 * k.m1 * eta**3 / delta) / y0
    return numerator / denominator


def stechkin_value(beta, y, sigma):
    """
    Re(1/(sigma - beta + iy) - 5^-1/2/(tau - beta + iy)) + the same at 1 - beta,
    with tau = (1 + sqrt(1 + 4 sigma^2)) / 2.
    """
    tau = (1 + math.sqrt(1 + 4 * sigma * sigma)) / 2
    total = 0.0
    for b in (beta, 1 - beta):
        total += (1 / complex(sigma - b, y)).real - INV_SQRT5 * (1 / complex(tau - b, y)).real
    return total


def stechkin_inequality_check(beta, y, sigma):
    """
    Whether the Stechkin pair of zero contributions is nonnegative.

    Args:
        beta (float): Zero abscissa in [1/2, 1]
        y (float): Height, strictly positive
        sigma (float): Evaluation abscissa, greater than 1

    Returns:
        bool: True if the pair is >= -1e-12
    """
    if not 0.5 <= beta <= 1 or not y > 0 or not sigma > 1:
        raise ParameterError(f"Need beta in [1/2, 1], y > 0, sigma > 1; got ({beta}, {y}, {sigma})")
    return stechkin_value(beta, y, sigma) >= -1e-12


def D_value(x, y, params, tolerances=DEFAULT_TOLERANCES):
    """D(x + iy) = F~(x, y) - kappa F~(x + delta, y) at scale eta0."""
    theta, eta = params.theta, params.eta0
    return (
        laplace_F_tilde(theta, eta, x, y, tolerances)
        - params.kappa * laplace_F_tilde(theta, eta, x + params.delta, y, tolerances)
    )


def D_pair_value(beta, y, params, tolerances=DEFAULT_TOLERANCES):
    """D(sigma0 - beta + iy) + D(sigma0 - 1 + beta + iy)."""
    sigma = params.sigma0
    return D_value(sigma - beta, y, params, tolerances) + D_value(sigma - 1 + beta, y, params, tolerances)


def D_pair_positivity_sample(beta, y, params, tolerances=DEFAULT_TOLERANCES):
    """
    Whether the paired D-contribution of a zero at beta + iy is nonnegative.

    Args:
        beta (float): Zero abscissa in [1/2, sigma0]
        y (float): Height, strictly positive
        params (RegionParams): Supplies theta, eta0, sigma0, kappa, delta

    Returns:
        bool: True if the pair is >= -1e-10
    """
    if not 0.5 <= beta <= params.sigma0 or not y > 0:
        raise ParameterError(f"Need beta in [1/2, sigma0] and y > 0, got ({beta}, {y})")
    return D_pair_value(beta, y, params, tolerances) >= -1e-10


def D_pair_grid(params, n_beta=10, n_y=20, tolerances=DEFAULT_TOLERANCES):
    """
    Sample the D-pair on an n_beta x n_y grid of [1/2, sigma0] x [0.1, 20].

    Returns:
        list: (beta, y, value) for every failing grid point, in grid order
    """
    failures = []
    for beta in np.linspace(0.5, params.sigma0, n_beta):
        for y in np.linspace(0.1, 20.0, n_y):
            value = D_pair_value(float(beta), float(y), params, tolerances)
            if value < -1e-10:
                failures.append((float(beta), float(y), value))
    if failures:
        logger.warning(f"D-pair positivity fails at {len(failures)} of {n_beta * n_y} grid points")
    return failures
