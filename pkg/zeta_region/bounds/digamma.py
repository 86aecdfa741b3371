"""
Real part of the digamma function and explicit upper bounds on it.

The reference value uses McCurley's identity

    Re psi(x/2 + iy/2) = 1/2 log(x^2/4 + y^2/4) - x / (x^2 + y^2)
                         + Re integral_0^inf ({u} - 1/2) / (u + (x + iy)/2)^2 du

with the sawtooth integral summed one unit interval at a time in closed form.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from ..exceptions import NonpositiveRealPart, ParameterError

logger = logging.getLogger("zeta_region.digamma")

EULER_GAMMA = 0.57721566490153286061
# |psi(1/4)| = gamma + pi/2 + 3 log 2
PSI_QUARTER_ABS = EULER_GAMMA + math.pi / 2 + 3 * math.log(2)

_SERIES_RADIUS = 8.0
_SERIES_TERMS = 24
# coefficient of w^-j in the per-interval integral, j = 3.._SERIES_TERMS
_SERIES_POWERS = np.arange(3, _SERIES_TERMS + 1)
_SERIES_COEFFS = (-1.0) ** (_SERIES_POWERS + 1) * (2 - _SERIES_POWERS) / (2 * _SERIES_POWERS)
_MAX_INTERVALS = 2_000_000


def _interval_count(x, y, tol):
    """Unit intervals needed before the sawtooth tail drops below tol."""
    counts = [math.sqrt(1 / (8 * tol)) - x]
    if y != 0:
        counts.append(1 / (4 * abs(y) * tol) - x)
    return int(min(max(1, math.ceil(min(counts))), _MAX_INTERVALS))


def sawtooth_integral(x, y, tol=1e-10):
    """
    integral_0^inf ({u} - 1/2) / (u + x + iy)^2 du for x > 0.

    Over [n, n+1] the integral equals log(1 + 1/w) - (w + 1/2) / (w (w + 1))
    with w = n + x + iy; for |w| >= 8 the Laurent series of that expression is
    summed instead to avoid cancellation.

    Args:
        x (float): Real part, strictly positive
        y (float): Imaginary part
        tol (float, optional): Absolute truncation tolerance

    Returns:
        complex: The integral

    Raises:
        NonpositiveRealPart: If x <= 0
    """
    if not x > 0:
        raise NonpositiveRealPart(f"sawtooth integral needs a positive real part, got {x}")
    n = np.arange(_interval_count(x, y, tol), dtype=float)
    w = n + complex(x, y)
    far = np.abs(w) >= _SERIES_RADIUS

    terms = np.empty_like(w)
    near = w[~far]
    terms[~far] = np.log(1 + 1 / near) - (near + 0.5) / (near * (near + 1))
    inv = 1 / w[far]
    terms[far] = np.power.outer(inv, _SERIES_POWERS) @ _SERIES_COEFFS
    return complex(np.sum(terms))


def sawtooth_bound(x, y):
    """(1/y) arctan(y/x), bounding |sawtooth_integral(x/2, y/2)| in the doubled arguments of re_digamma."""
    if y == 0:
        return 1 / x
    return math.atan(abs(y) / x) / abs(y)


def re_digamma(x, y, tol=1e-10):
    """
    Re psi(x/2 + iy/2) via McCurley's identity.

    Args:
        x (float): Twice the real part, strictly positive
        y (float): Twice the imaginary part
        tol (float, optional): Tolerance on the sawtooth sum

    Returns:
        float: The real part of the digamma function

    Raises:
        NonpositiveRealPart: If x <= 0
    """
    if not x > 0:
        raise NonpositiveRealPart(f"re_digamma needs x > 0, got {x}")
    main = 0.5 * math.log(x * x / 4 + y * y / 4) - x / (x * x + y * y)
    return main + sawtooth_integral(x / 2, y / 2, tol).real


def psi_kappa_delta(x, y, kappa, delta, tol=1e-10):
    """psi_{kappa,delta}(x, y) = Re psi(x/2 + iy/2) - kappa Re psi((x + delta)/2 + iy/2)."""
    return re_digamma(x, y, tol) - kappa * re_digamma(x + delta, y, tol)


@dataclass(frozen=True)
class DigammaBoundParams:
    """Box 0 < x0 <= x <= x1 < y0 and the (kappa, delta) pair of psi_{kappa,delta}."""

    x0: float
    x1: float
    y0: float
    kappa: float
    delta: float

    def __post_init__(self):
        if not 0 < self.x0 <= self.x1 < self.y0:
            raise ParameterError(f"Need 0 < x0 <= x1 < y0, got ({self.x0}, {self.x1}, {self.y0})")
        if not 0 <= self.delta <= 1:
            raise ParameterError(f"delta must lie in [0, 1], got {self.delta}")
        if not 0 <= self.kappa <= self.x0 / (self.x0 + self.delta):
            raise ParameterError(f"kappa must lie in [0, x0/(x0 + delta)], got {self.kappa}")


def _pole_terms(x, y, kappa, delta):
    return x / (x * x + y * y) - kappa * (x + delta) / ((x + delta) ** 2 + y * y)


def R1(x, y, kappa, delta):
    """Pointwise bound on psi_{kappa,delta}(x, y) from McCurley's identity."""
    return (
        0.5 * math.log(x * x / 4 + y * y / 4)
        - kappa / 2 * math.log((x + delta) ** 2 / 4 + y * y / 4)
        - _pole_terms(x, y, kappa, delta)
        + sawtooth_bound(x, y) + kappa * sawtooth_bound(x + delta, y)
    )


def R2(x, y, kappa, delta):
    """R1(x, y) - (1 - kappa) log(|y|/2)."""
    return (
        0.5 * math.log(x * x / (y * y) + 1)
        - kappa / 2 * math.log((x + delta) ** 2 / (y * y) + 1)
        - _pole_terms(x, y, kappa, delta)
        + sawtooth_bound(x, y) + kappa * sawtooth_bound(x + delta, y)
    )


def R3(x, y, kappa, delta):
    """Pointwise bound on psi_{kappa,delta}(x, y) - (1 - kappa) log(|y|/2) from the asymptotic expansion."""
    y = abs(y)
    return (
        -_pole_terms(x, y, kappa, delta)
        + (1 / x + kappa / (x + delta)) / (3 * y)
        + (x * x + kappa * (x + delta) ** 2) / (2 * y * y)
    )


def r1(x0, x1, y0, kappa, delta):
    """Supremum of R1 over x0 <= x <= x1, 0 < |y| < y0."""
    return (
        (1 - kappa) / 2 * math.log((x1 + delta) ** 2 / 4 + y0 * y0 / 4)
        - x0 / (x1 * x1 + y0 * y0)
        + 1 / x0
        + 2 * kappa / (x0 + delta)
    )


def r2(x0, x1, y0, kappa, delta):
    """Supremum of R2 over x0 <= x <= x1, |y| >= y0."""
    return (
        (1 - kappa) / 2 * math.log((x1 + delta) ** 2 / (y0 * y0) + 1)
        + (math.atan(y0 / x1) + kappa * math.atan(y0 / (x1 + delta))) / y0
    )


def r3(x0, x1, y0, kappa, delta):
    """Supremum of R3 over x0 <= x <= x1, |y| >= y0."""
    return (
        (1 / x0 + kappa / (x0 + delta)) / (3 * y0)
        + (x1 * x1 + kappa * (x1 + delta) ** 2) / (2 * y0 * y0)
    )


def psi_diff_bound(p, regime):
    """
    Upper bound on psi_{kappa,delta} over the box described by p.

    Args:
        p (DigammaBoundParams): Box and (kappa, delta)
        regime (str): "small_y" for 0 < |y| < y0, "large_y" for |y| >= y0

    Returns:
        float: r1 for small_y; min(r2, r3) for large_y, to be added to (1 - kappa) log(|y|/2)

    Raises:
        ParameterError: On an unknown regime
    """
    args = (p.x0, p.x1, p.y0, p.kappa, p.delta)
    if regime == "small_y":
        return r1(*args)
    if regime == "large_y":
        return min(r2(*args), r3(*args))
    raise ParameterError(f"regime must be 'small_y' or 'large_y', got {regime!r}")


def U0(T):
    """
    Two-branch bound on |Re psi(1/4 + iT/2)| as printed.

    For |T| < 1/2 this branch is below the true value, see U0_majorant.
    """
    T = abs(T)
    q = 1 + 4 * T * T
    if T < 0.5:
        return 0.5 * math.log(16 / q) + 2 / q - math.pi / 2
    return abs(math.log(T / 2) - 2 / q) + 2 / (3 * T) + 1 / (8 * T * T)


def U0_majorant(T):
    """
    A true majorant of |Re psi(1/4 + iT/2)|.

    Equals U0 for |T| >= 1/2 and the constant |psi(1/4)| below, where
    |Re psi(1/4 + iT/2)| is largest at T = 0.
    """
    if abs(T) >= 0.5:
        return U0(T)
    return PSI_QUARTER_ABS


def U0_array(T, majorant=True):
    """Vectorised U0 / U0_majorant for quadrature integrands."""
    T = np.abs(np.asarray(T, dtype=float))
    q = 1 + 4 * T * T
    with np.errstate(divide="ignore", invalid="ignore"):
        large = np.abs(np.log(T / 2) - 2 / q) + 2 / (3 * T) + 1 / (8 * T * T)
    small = np.full_like(T, PSI_QUARTER_ABS) if majorant else 0.5 * np.log(16 / q) + 2 / q - math.pi / 2
    return np.where(T >= 0.5, large, small)
