"""
Adaptive Gauss-Kronrod quadrature with explicit error control.

Every round evaluates the 7/15 pair on all pending intervals in one
vectorised call, so integrands must accept a NumPy array of nodes.
"""

import logging
from dataclasses import dataclass

import numpy as np

from .. import config
from ..exceptions import NumericalError, ParameterError, SubdivisionLimit, TailDivergence

logger = logging.getLogger("zeta_region.numerics")

_EPS = np.finfo(float).eps
# Intervals whose estimate is within this many ulps of sum |f| are at round-off
_ROUNDOFF_ULPS = 50.0
_MAX_DOUBLINGS = 200

# Kronrod abscissae on [0, 1]; the odd-indexed ones are the Gauss nodes
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.0,
    0.129484966168869693270611432679082,
    0.0,
    0.279705391489276667901467771423780,
    0.0,
    0.381830050505118944950369775488975,
    0.0,
    0.417959183673469387755102040816327,
])

# Full 15-point rule in ascending node order
_NODES = np.concatenate((-_XGK[:7], _XGK[7::-1]))
_KRONROD_WEIGHTS = np.concatenate((_WGK[:7], _WGK[7::-1]))
_GAUSS_WEIGHTS = np.concatenate((_WG[:7], _WG[7::-1]))


@dataclass(frozen=True)
class QuadratureResult:
    """Integral value with its absolute error estimate."""

    value: float
    error_estimate: float

    def __post_init__(self):
        if not self.error_estimate >= 0:
            raise ParameterError(f"error_estimate must be nonnegative, got {self.error_estimate}")

    def __add__(self, other):
        return QuadratureResult(self.value + other.value, self.error_estimate + other.error_estimate)

    def scaled(self, factor):
        """Multiply value and error estimate by a constant factor."""
        return QuadratureResult(factor * self.value, abs(factor) * self.error_estimate)


@dataclass(frozen=True)
class ToleranceConfig:
    """
    Numerical tolerances shared by every module.

    Defaults target at least 1e-11 absolute on elementary integrals, which
    leaves ample headroom for constants printed to 1e-5.
    """

    quad_abs_tol: float = config.QUAD_ABS_TOL
    quad_rel_tol: float = config.QUAD_REL_TOL
    root_tol: float = config.ROOT_TOL
    minimize_tol: float = config.MINIMIZE_TOL
    max_subdivisions: int = config.MAX_SUBDIVISIONS

    def __post_init__(self):
        for name in ("quad_abs_tol", "root_tol", "minimize_tol"):
            if not getattr(self, name) > 0:
                raise ParameterError(f"{name} must be strictly positive, got {getattr(self, name)}")
        if self.quad_rel_tol < 0:
            raise ParameterError(f"quad_rel_tol cannot be negative, got {self.quad_rel_tol}")
        if self.max_subdivisions < 1:
            raise ParameterError(f"max_subdivisions must be positive, got {self.max_subdivisions}")


DEFAULT_TOLERANCES = ToleranceConfig()


def _gauss_kronrod(f, lo, hi):
    """
    Apply the 7/15 pair to every interval [lo[i], hi[i]] at once.

    Returns:
        tuple: (Kronrod values, |K15 - G7| estimates, Kronrod integrals of |f|)
    """
    centre = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    nodes = centre[:, None] + half[:, None] * _NODES[None, :]
    values = np.broadcast_to(np.asarray(f(nodes), dtype=float), nodes.shape)
    if not np.all(np.isfinite(values)):
        bad = nodes[~np.isfinite(values)][0]
        raise NumericalError(f"Integrand is not finite at x = {bad!r}")
    kronrod = half * (values @ _KRONROD_WEIGHTS)
    gauss = half * (values @ _GAUSS_WEIGHTS)
    resabs = half * (np.abs(values) @ _KRONROD_WEIGHTS)
    return kronrod, np.abs(kronrod - gauss), resabs


def integrate(f, a, b, tol=None, *, rel_tol=None, breakpoints=(), tolerances=DEFAULT_TOLERANCES):
    """
    Integrate f over [a, b] to an absolute tolerance.

    Each round bisects every interval whose error estimate exceeds its fair
    share of the target, so the work concentrates where f is rough. The
    result is summed in left-endpoint order and is bit-reproducible.

    Args:
        f (callable): Vectorised integrand, receives a NumPy array of nodes
        a (float): Lower limit
        b (float): Upper limit, b >= a
        tol (float, optional): Absolute tolerance. Defaults to tolerances.quad_abs_tol.
        rel_tol (float, optional): Relative tolerance. Defaults to tolerances.quad_rel_tol.
        breakpoints (iterable, optional): Interior points where f has kinks or jumps
        tolerances (ToleranceConfig, optional): Shared tolerance settings

    Returns:
        QuadratureResult: value and summed error estimate

    Raises:
        ParameterError: If b < a or a tolerance is not positive
        SubdivisionLimit: If the target is not reached within max_subdivisions
    """
    tol = tolerances.quad_abs_tol if tol is None else tol
    rel_tol = tolerances.quad_rel_tol if rel_tol is None else rel_tol
    if not tol > 0:
        raise ParameterError(f"Quadrature tolerance must be positive, got {tol}")
    if not a <= b:
        raise ParameterError(f"Integration limits out of order: [{a}, {b}]")
    if a == b:
        return QuadratureResult(0.0, 0.0)

    inner = [p for p in breakpoints if a < p < b]
    edges = np.unique(np.array([a, *inner, b], dtype=float))
    lo, hi = edges[:-1], edges[1:]
    values, errors, resabs = _gauss_kronrod(f, lo, hi)
    subdivisions = 0

    while True:
        value = float(np.sum(values))
        total = float(np.sum(errors))
        target = max(tol, rel_tol * abs(value))
        floor = _ROUNDOFF_ULPS * _EPS * float(np.sum(resabs))
        if total <= max(target, floor):
            break

        share = target / len(values)
        too_narrow = (hi - lo) <= 4 * _EPS * np.maximum(np.abs(lo), np.abs(hi))
        split = (errors > share) & (errors > _ROUNDOFF_ULPS * _EPS * resabs) & ~too_narrow
        n_split = int(np.count_nonzero(split))
        if n_split == 0:
            if total > target + floor:
                logger.error(f"Quadrature on [{a}, {b}] stalled at error {total:.3e}")
                raise SubdivisionLimit(
                    f"Quadrature on [{a}, {b}] cannot be refined below {total:.3e}",
                    value=value, error_estimate=total,
                )
            break
        if subdivisions + n_split > tolerances.max_subdivisions:
            logger.error(f"Quadrature on [{a}, {b}] hit {tolerances.max_subdivisions} subdivisions")
            raise SubdivisionLimit(
                f"Quadrature on [{a}, {b}] exceeded {tolerances.max_subdivisions} subdivisions "
                f"(error {total:.3e}, target {target:.3e})",
                value=value, error_estimate=total,
            )
        subdivisions += n_split

        mid = 0.5 * (lo[split] + hi[split])
        new_lo = np.concatenate((lo[split], mid))
        new_hi = np.concatenate((mid, hi[split]))
        new_values, new_errors, new_resabs = _gauss_kronrod(f, new_lo, new_hi)

        keep = ~split
        lo = np.concatenate((lo[keep], new_lo))
        hi = np.concatenate((hi[keep], new_hi))
        values = np.concatenate((values[keep], new_values))
        errors = np.concatenate((errors[keep], new_errors))
        resabs = np.concatenate((resabs[keep], new_resabs))
        order = np.argsort(lo, kind="stable")
        lo, hi, values, errors, resabs = lo[order], hi[order], values[order], errors[order], resabs[order]

    logger.debug(f"integrate [{a:.6g}, {b:.6g}]: {len(values)} intervals, error {total:.3e}")
    return QuadratureResult(value, total)


def integrate_improper_upper(f, a, tail_bound, tol=None, *, scale=None, tolerances=DEFAULT_TOLERANCES):
    """
    Integrate f over [a, infinity) using a caller-supplied tail bound.

    The truncation point walks a + s * 2^k until tail_bound drops below
    tol/2; the finite part is integrated to tol/2 with breakpoints at every
    visited truncation point. The tail bound is folded into the returned
    error estimate.

    Args:
        f (callable): Vectorised integrand
        a (float): Lower limit
        tail_bound (callable): Proven bound on |integral of f over [T, infinity)|
        tol (float, optional): Absolute tolerance. Defaults to tolerances.quad_abs_tol.
        scale (float, optional): First step s. Defaults to max(1, |a|).
        tolerances (ToleranceConfig, optional): Shared tolerance settings

    Returns:
        QuadratureResult: value and error estimate including the tail

    Raises:
        TailDivergence: If the tail bound stays above tol/2 after 200 doublings
    """
    tol = tolerances.quad_abs_tol if tol is None else tol
    if not tol > 0:
        raise ParameterError(f"Quadrature tolerance must be positive, got {tol}")
    step = max(1.0, abs(a)) if scale is None else scale
    points = []
    upper = a + step
    for _ in range(_MAX_DOUBLINGS):
        tail = tail_bound(upper)
        if tail <= tol / 2:
            break
        points.append(upper)
        step *= 2
        upper = a + step
    else:
        logger.error(f"Tail bound from {a} still {tail:.3e} at T = {upper:.3e}")
        raise TailDivergence(f"Tail bound never dropped below {tol / 2:.3e} (last {tail:.3e} at T = {upper:.3e})")

    logger.debug(f"Improper integral from {a:.6g} truncated at {upper:.6g}, tail {tail:.3e}")
    finite = integrate(f, a, upper, tol / 2, breakpoints=points, tolerances=tolerances)
    return QuadratureResult(finite.value, finite.error_estimate + tail)
