"""
Bracketing root finder and golden-section minimiser.
"""

import logging
import math

from ..exceptions import NoSignChange, ParameterError

logger = logging.getLogger("zeta_region.numerics")

INV_PHI = (math.sqrt(5) - 1) / 2  # 1 / phi
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2  # 1 / phi^2


def bisect_bracket(f, lo, hi, tol):
    """
    Shrink [lo, hi] around a sign change of f until it is narrower than tol.

    The sign at the left endpoint is carried along, so f(lo) keeps the sign
    of the original f(lo) throughout.

    Args:
        f (callable): Continuous scalar function
        lo (float): Left end of the bracket
        hi (float): Right end of the bracket
        tol (float): Target bracket width

    Returns:
        tuple: (lo, hi) with hi - lo <= tol, or a degenerate (x, x) at an exact zero

    Raises:
        ParameterError: If the bracket is empty or tol is not positive
        NoSignChange: If f(lo) and f(hi) have the same strict sign
    """
    if not lo < hi:
        raise ParameterError(f"Empty bracket [{lo}, {hi}]")
    if not tol > 0:
        raise ParameterError(f"Root tolerance must be positive, got {tol}")

    f_lo = f(lo)
    if f_lo == 0:
        return lo, lo
    f_hi = f(hi)
    if f_hi == 0:
        return hi, hi
    if (f_lo < 0) == (f_hi < 0):
        raise NoSignChange(f"f({lo}) = {f_lo:.6g} and f({hi}) = {f_hi:.6g} have the same sign")

    while hi - lo > tol:
        mid = lo + (hi - lo) / 2
        if not lo < mid < hi:
            break
        f_mid = f(mid)
        if f_mid == 0:
            return mid, mid
        if (f_mid < 0) == (f_lo < 0):
            lo = mid
        else:
            hi = mid
    return lo, hi


def find_root(f, lo, hi, tol):
    """
    Locate a root of f in [lo, hi] by bisection.

    Args:
        f (callable): Continuous scalar function with f(lo) * f(hi) <= 0
        lo (float): Left end of the bracket
        hi (float): Right end of the bracket
        tol (float): Final bracket width

    Returns:
        float: Midpoint of the final bracket

    Raises:
        NoSignChange: If the bracket holds no sign change
    """
    lo, hi = bisect_bracket(f, lo, hi, tol)
    return lo + (hi - lo) / 2


def minimize_scalar(f, lo, hi, tol):
    """
    Golden-section search for the minimiser of a unimodal f.

    f may return +inf at infeasible points; they simply lose every
    comparison against finite values.

    Args:
        f (callable): Scalar objective, unimodal on [lo, hi]
        lo (float): Left end of the search interval
        hi (float): Right end of the search interval
        tol (float): Final interval width

    Returns:
        float: Midpoint of the final interval

    Raises:
        ParameterError: If the interval is empty or tol is not positive
    """
    if not lo < hi:
        raise ParameterError(f"Empty search interval [{lo}, {hi}]")
    if not tol > 0:
        raise ParameterError(f"Minimisation tolerance must be positive, got {tol}")

    a, b = lo, hi
    h = b - a
    if h <= tol:
        return a + h / 2

    # Required steps to achieve tolerance
    n = int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))

    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = f(c)
    yd = f(d)

    for _ in range(n - 1):
        if yc < yd:
            b = d
            d = c
            yd = yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARE * h
            yc = f(c)
        else:
            a = c
            c = d
            yc = yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = f(d)

    if yc < yd:
        b = d
    else:
        a = c
    logger.debug(f"Golden-section search finished on [{a:.10g}, {b:.10g}]")
    return a + (b - a) / 2
