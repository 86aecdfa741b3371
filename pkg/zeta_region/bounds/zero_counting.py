"""
Envelopes of the zero-counting function N(u) and the sums over zeros they bound.

N(u) counts zeros with ordinate in [0, u]. Backlund's estimate brackets it
between N2 and N1 for u >= t1, and integration by parts turns
sums of 1/(gamma - t)^2 over zeros into integrals of N1 and N2.
"""

import functools
import logging
import math
from dataclasses import dataclass

import numpy as np

from .. import config
from ..exceptions import DomainBelowT1, DomainTooSmall
from ..numerics import DEFAULT_TOLERANCES, integrate, integrate_improper_upper

logger = logging.getLogger("zeta_region.zero_counting")

LOG_2PI_E = math.log(2 * math.pi * math.e)
C30_TOL = 1e-9
# Published ordinates of the first ten zeros, the first one shared with the envelopes
FIRST_ZERO_ORDINATES = (
    config.FIRST_ZERO_ORDINATE, 21.022039639, 25.010857580, 30.424876126, 32.935061588,
    37.586178159, 40.918719012, 43.327073281, 48.005150881, 49.773832478,
)


def main_term(u):
    """(u / 2 pi) log(u / (2 pi e)), the smooth part of N(u)."""
    return u / (2 * math.pi) * (np.log(u) - LOG_2PI_E)


@dataclass(frozen=True)
class BacklundBounds:
    """N2(u) <= N(u) <= N1(u) for u >= t1, with N1 - N2 = 2 (c_log log u + c_const)."""

    t1: float = config.FIRST_ZERO_ORDINATE
    c_log: float = config.BACKLUND_LOG
    c_const: float = config.BACKLUND_CONST

    def envelope(self, u):
        return self.c_log * np.log(u) + self.c_const

    def N1(self, u):
        return main_term(u) + self.envelope(u)

    def N2(self, u):
        return main_term(u) - self.envelope(u)


DEFAULT_BOUNDS = BacklundBounds()


def backlund_envelope(u):
    """The original error bound 0.137 log u + 0.443 log log u + 5.225."""
    log_u = np.log(u)
    return config.BACKLUND_ORIGINAL_LOG * log_u + config.BACKLUND_ORIGINAL_LOGLOG * np.log(log_u) + config.BACKLUND_CONST


def N_bound(u, side, bounds=DEFAULT_BOUNDS):
    """
    Upper (N1) or lower (N2) envelope of N(u).

    Args:
        u (float or numpy.ndarray): Height(s), at least t1
        side (str): "upper" or "lower"
        bounds (BacklundBounds, optional): Envelope constants

    Returns:
        float or numpy.ndarray: Envelope value(s)

    Raises:
        DomainBelowT1: If any u is below t1
    """
    if np.min(u) < bounds.t1:
        raise DomainBelowT1(f"Zero-counting envelopes need u >= {bounds.t1}, got {np.min(u)}")
    if side == "upper":
        value = bounds.N1(u)
    elif side == "lower":
        value = bounds.N2(u)
    else:
        raise ValueError(f"side must be 'upper' or 'lower', got {side!r}")
    return float(value) if np.ndim(u) == 0 else value


def _log_growth_tail(V, lam, c_log, c_const, factor):
    """
    factor * integral_V^inf [(lam v / 2 pi) log(lam v) + c_log log(lam v) + c_const] / v^3 dv.
    """
    log_lv = math.log(lam * V)
    return factor * (
        lam / (2 * math.pi) * (log_lv + 1) / V
        + c_log * (2 * log_lv + 1) / (4 * V * V)
        + c_const / (2 * V * V)
    )


def sum_inverse_gamma_sq_at_zero(envelope="backlund", side="upper", tol=C30_TOL, tolerances=DEFAULT_TOLERANCES):
    """
    4 integral_{t1}^inf N(u) / u^3 du with N replaced by an envelope.

    This majorises the sum of 1/gamma^2 over all zeros. The original
    Backlund error term keeps it below 0.098178; the simplified 0.29992
    form gives about 0.098274.

    Args:
        envelope (str, optional): "backlund" or "simplified"
        side (str, optional): "upper" for the bound, "lower" for the N2 companion
        tol (float, optional): Absolute tolerance on the integral

    Returns:
        float: The integral value
    """
    if envelope == "backlund":
        error_term, c_log = backlund_envelope, config.BACKLUND_ORIGINAL_LOG + config.BACKLUND_ORIGINAL_LOGLOG
    elif envelope == "simplified":
        error_term, c_log = DEFAULT_BOUNDS.envelope, config.BACKLUND_LOG
    else:
        raise ValueError(f"envelope must be 'backlund' or 'simplified', got {envelope!r}")
    sign = 1.0 if side == "upper" else -1.0

    def integrand(u):
        return 4 * (main_term(u) + sign * error_term(u)) / u**3

    result = integrate_improper_upper(
        integrand, config.FIRST_ZERO_ORDINATE,
        lambda V: _log_growth_tail(V, 1.0, c_log, config.BACKLUND_CONST, 4.0),
        tol / 4, tolerances=tolerances,
    )
    logger.debug(f"4 int N/u^3 ({envelope}, {side}) = {result.value:.10f} +- {result.error_estimate:.1e}")
    return result.value


def _paired_difference(t, v, bounds):
    """N1(t + v) - N2(t - v), with the main-term difference computed without cancellation."""
    ratio = v / t
    delta_main = (
        2 * t * np.arctanh(ratio) + v * (2 * np.log(t) + np.log1p(-ratio * ratio)) - 2 * v * LOG_2PI_E
    ) / (2 * math.pi)
    return delta_main + bounds.envelope(t + v) + bounds.envelope(t - v)


def c30(t, bounds=DEFAULT_BOUNDS, counting=None, boundary_terms=False, tol=C30_TOL,
        truncation_factor=1.0, tolerances=DEFAULT_TOLERANCES):
    """
    Majorant of the sum of 1/(gamma - t)^2 over zeros with |gamma - t| >= 1.

    c30(t) = 2 int_{t1}^inf N1(u)/(u + t)^3 du - 2 int_{t1}^{t-1} N2(u)/(t - u)^3 du
             + 2 int_{t+1}^inf N1(u)/(u - t)^3 du.

    The last two integrals are paired through u = t -+ v so that the large
    main terms cancel analytically.

    Args:
        t (float): Height, t > t1 + 1
        bounds (BacklundBounds, optional): Envelope constants
        counting (tuple, optional): (upper, lower) vectorised counting functions
            replacing N1 and N2; they must stay below (u/2 pi) log u + c_log log u + c_const
        boundary_terms (bool, optional): Add back the integration-by-parts boundary terms
            N(t-1) - N(t+1) - N(t1)/(t - t1)^2 - N(t1)/(t + t1)^2
        tol (float, optional): Absolute tolerance per integral
        truncation_factor (float, optional): Scales every truncation point of the improper integrals

    Returns:
        float: c30(t)

    Raises:
        DomainTooSmall: If t <= t1 + 1
    """
    t1 = bounds.t1
    if not t > t1 + 1:
        raise DomainTooSmall(f"c30 needs t > t1 + 1 = {t1 + 1}, got {t}")
    if counting is None:
        upper, lower = bounds.N1, bounds.N2

        def difference(v):
            return _paired_difference(t, v, bounds)
    else:
        upper, lower = counting

        def difference(v):
            return upper(t + v) - lower(t - v)

    split = t - t1
    powers = [2.0**k for k in range(1, int(math.log2(split)) + 1)]

    # J2 + J3 over 1 <= v <= t - t1, where both sides contribute
    paired = integrate(lambda v: 2 * difference(v) / v**3, 1.0, split, tol, breakpoints=powers,
                       tolerances=tolerances)
    # J3 beyond v = t - t1
    far = integrate_improper_upper(
        lambda v: 2 * upper(t + v) / v**3, split,
        lambda V: _log_growth_tail(V, 1 + t / V, bounds.c_log, bounds.c_const, 2.0),
        tol, scale=truncation_factor * split, tolerances=tolerances,
    )
    # J1, the zeros below the real axis
    mirror = integrate_improper_upper(
        lambda u: 2 * upper(u) / (u + t) ** 3, t1,
        lambda V: _log_growth_tail(V, 1.0, bounds.c_log, bounds.c_const, 2.0),
        tol, scale=truncation_factor * t1, tolerances=tolerances,
    )
    value = mirror.value + paired.value + far.value
    if boundary_terms:
        value += (
            float(upper(t - 1)) - float(lower(t + 1))
            - float(lower(t1)) / (t - t1) ** 2 - float(lower(t1)) / (t + t1) ** 2
        )
    logger.debug(
        f"c30({t:.6g}) = {value:.9f} (J1 {mirror.value:.3e}, paired {paired.value:.6f}, far {far.value:.3e})"
    )
    return value


@functools.lru_cache(maxsize=64)
def _cached_c30(t, tol):
    return c30(t, tol=tol)


def zero_sum_bound(k, T0=config.T0, tol=C30_TOL):
    """
    Bound on the sum of 1/(gamma - k T0)^2: the t = 0 integral for k = 0, c30(k T0) otherwise.
    """
    if k == 0:
        return _cached_sum_at_zero(tol)
    return _cached_c30(k * T0, tol)


@functools.lru_cache(maxsize=8)
def _cached_sum_at_zero(tol):
    return sum_inverse_gamma_sq_at_zero(tol=tol)


def weighted_zero_sum(poly, T0=config.T0, tol=C30_TOL):
    """
    sum_k a_k zero_sum_bound(k) for k = 0..4.

    Args:
        poly (TrigPolynomial): Supplies the coefficients a_0..a_4
        T0 (float, optional): Height of the verified region

    Returns:
        float: The weighted sum, added in increasing k
    """
    return float(sum(a_k * zero_sum_bound(k, T0, tol) for k, a_k in enumerate(poly.a)))


def c30_asymptotic(t, bounds=DEFAULT_BOUNDS):
    """Leading behaviour 2 (c_log log t + c_const) + (2/pi) log(t / 2 pi) of c30(t)."""
    return 2 * float(bounds.envelope(t)) + 2 / math.pi * math.log(t / (2 * math.pi))
