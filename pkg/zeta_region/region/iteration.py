"""
The (r, R) fixed-point iteration and the theta optimiser.

Each step turns a region constant R into a smaller R0 through

    R0 = (A/2) g1(theta) (1 - kappa) / K(omega),

and is accepted only when the remainder cubic is negative at eta0.
"""

import logging
import math
from dataclasses import asdict, dataclass

import numpy as np

from .. import config
from ..bounds.remainder import RegionParams, assemble_C
from ..exceptions import NonContraction, OmegaOutOfRange, ParameterError, ZetaRegionError
from ..kernel import KernelFactory, h, support_end
from ..numerics import DEFAULT_TOLERANCES, bisect_bracket, integrate, minimize_scalar
from .trig_poly import trig_poly_default

logger = logging.getLogger("zeta_region.region")

THETA_SCAN_POINTS = 32


@dataclass(frozen=True)
class IterationRecord:
    """One row of an iteration table."""

    step: int
    R_in: float
    r_in: float
    eta0: float
    kappa: float
    delta: float
    alpha1: float
    alpha2: float
    alpha3: float
    C_at_eta0: float
    R0_out: float
    theta: float
    omega: float

    def to_dict(self):
        return asdict(self)


def K_omega(theta, omega, poly, tolerances=DEFAULT_TOLERANCES):
    """
    K(omega) = integral over [0, d1] of (a1 e^-t - a0) h(t) e^(omega t).

    Args:
        theta (float): Kernel parameter
        omega (float): Exponent rate in [0, 1]
        poly (TrigPolynomial): Supplies a0 and a1

    Returns:
        float: K(omega)

    Raises:
        OmegaOutOfRange: If omega lies outside [0, 1]
    """
    if not 0 <= omega <= 1:
        raise OmegaOutOfRange(f"omega must lie in [0, 1], got {omega}")
    a0, a1 = poly.a[0], poly.a[1]
    if a0 == 0 and a1 == 0:
        return 0.0

    def integrand(t):
        return (a1 * np.exp(-t) - a0) * h(theta, t) * np.exp(omega * t)

    return integrate(integrand, 0.0, support_end(theta), tolerances.quad_abs_tol, tolerances=tolerances).value


def omega_of(p, mode="log"):
    """
    omega = r log T0 / (R log(4 T0 + t0)), or r/R in "ratio" mode.

    Raises:
        OmegaOutOfRange: If the result leaves [0, 1]
    """
    if mode == "log":
        omega = p.r * math.log(p.T0) / (p.R * math.log(4 * p.T0 + p.t0))
    elif mode == "ratio":
        omega = p.r / p.R
    else:
        raise ParameterError(f"Unknown omega mode: {mode}")
    if not 0 <= omega <= 1:
        raise OmegaOutOfRange(f"omega = {omega} outside [0, 1] for R = {p.R}, r = {p.r}")
    return omega


def R0_value(p, poly, omega_mode="log", tolerances=DEFAULT_TOLERANCES):
    """
    (A/2) g1 (1 - kappa) / K(omega) without the remainder certificate.

    Returns +inf when K(omega) <= 0, since no region follows then.
    """
    K = K_omega(p.theta, omega_of(p, omega_mode), poly, tolerances)
    if K <= 0:
        return math.inf
    return poly.A / 2 * p.kernel.g1 * (1 - p.kappa) / K


def R0_step(p, poly, omega_mode="log", certify=True, step=1, tolerances=DEFAULT_TOLERANCES):
    """
    Run one certified step of the iteration.

    Args:
        p (RegionParams): Step parameters with solved (delta, kappa)
        poly (TrigPolynomial): Trigonometric polynomial
        omega_mode (str, optional): "log" (default) or the "ratio" diagnostic
        certify (bool, optional): Assemble the remainder cubic and require C(eta0) < 0
        step (int, optional): Row number for the record

    Returns:
        IterationRecord: All intermediates of the step

    Raises:
        CertificateFailure: If the remainder cubic is not negative at eta0
    """
    omega = omega_of(p, omega_mode)
    R0 = R0_value(p, poly, omega_mode, tolerances)
    if math.isinf(R0):
        raise ParameterError(f"K(omega) <= 0 at theta = {p.theta}, omega = {omega}")
    alphas, C_value = (math.nan,) * 3, math.nan
    if certify:
        cubic = assemble_C(p, poly, tolerances=tolerances)
        alphas, C_value = (cubic.alpha1, cubic.alpha2, cubic.alpha3), cubic.value_at_eta0
    record = IterationRecord(
        step=step, R_in=p.R, r_in=p.r, eta0=p.eta0, kappa=p.kappa, delta=p.delta,
        alpha1=alphas[0], alpha2=alphas[1], alpha3=alphas[2], C_at_eta0=C_value,
        R0_out=R0, theta=p.theta, omega=omega,
    )
    logger.info(f"Step {step}: R = {p.R:.9f}, r = {p.r:.5f}, theta = {p.theta:.5f} -> R0 = {R0:.9f}")
    return record


def _auto_r(R, kernel, poly, T0, t0, omega_mode, tolerances):
    """r in [5, R] just below the crossing of R0(r) and r, so that r <= R0(r)."""

    def gap(r):
        return R0_value(RegionParams.build(R, r, kernel, T0, t0, root_tol=tolerances.root_tol),
                        poly, omega_mode, tolerances) - r

    if gap(R) >= 0:
        return R
    lo, _ = bisect_bracket(gap, config.R_FLOOR, R, config.ITERATION_PRECISION / 10)
    return lo


def iterate(R_init=config.R_INIT, r_schedule=config.PUBLISHED_SCHEDULE, theta=config.DEFAULT_THETA, poly=None, *,
            T0=config.T0, t0=config.T_ZERO_SHIFT, omega_mode="log", kernel=None,
            max_steps=config.MAX_AUTO_STEPS, tolerances=DEFAULT_TOLERANCES):
    """
    Iterate R -> R0, replacing R by R0 after every step.

    Args:
        R_init (float, optional): Starting constant. Defaults to 9.645908801.
        r_schedule (tuple or str, optional): Explicit r values, config.PUBLISHED_SCHEDULE or "auto"
        theta (float, optional): Kernel parameter
        poly (TrigPolynomial, optional): Defaults to the 0.91/0.265 polynomial
        kernel (SmoothingKernel, optional): Kernel to use instead of KernelFactory's

    Returns:
        list: IterationRecord per step

    Raises:
        NonContraction: If R0 exceeds R in auto mode
    """
    poly = poly or trig_poly_default()
    kernel = kernel or KernelFactory.create(theta, tolerances=tolerances)
    if r_schedule == config.PUBLISHED_SCHEDULE:
        r_schedule = config.PUBLISHED_R_SCHEDULE

    records = []
    R = R_init
    if r_schedule != "auto":
        for step, r in enumerate(r_schedule, start=1):
            p = RegionParams.build(R, r, kernel, T0, t0, root_tol=tolerances.root_tol)
            records.append(R0_step(p, poly, omega_mode, step=step, tolerances=tolerances))
            R = records[-1].R0_out
        return records

    for step in range(1, max_steps + 1):
        r = _auto_r(R, kernel, poly, T0, t0, omega_mode, tolerances)
        p = RegionParams.build(R, r, kernel, T0, t0, root_tol=tolerances.root_tol)
        record = R0_step(p, poly, omega_mode, step=step, tolerances=tolerances)
        records.append(record)
        if record.R0_out > R:
            logger.error(f"R0 = {record.R0_out:.9f} exceeds R = {R:.9f} at step {step}")
            raise NonContraction(f"Step {step} does not contract: R0 = {record.R0_out:.9f} > R = {R:.9f}")
        if R - record.R0_out < config.ITERATION_PRECISION:
            logger.info(f"Converged after {step} steps: R0 = {record.R0_out:.9f}")
            break
        R = record.R0_out
    else:
        logger.warning(f"Auto iteration stopped after {max_steps} steps without converging")
    return records


def _theta_objective(R, r, poly, T0, t0, omega_mode, tolerances, use_cache):
    def objective(theta):
        try:
            kernel = KernelFactory.create(theta, use_cache=use_cache, tolerances=tolerances)
            p = RegionParams.build(R, r, kernel, T0, t0, root_tol=tolerances.root_tol)
            return R0_value(p, poly, omega_mode, tolerances)
        except ZetaRegionError as e:
            logger.debug(f"theta = {theta:.6f} infeasible: {str(e)}")
            return math.inf

    return objective


def optimize_theta(R, r, poly=None, *, T0=config.T0, t0=config.T_ZERO_SHIFT, omega_mode="log",
                   step=1, use_cache=False, tolerances=DEFAULT_TOLERANCES):
    """
    Minimise R0 over theta in [pi/2 + 0.05, pi - 0.05].

    A coarse scan locates the best feasible cell, golden-section search
    refines it, and the winner is rerun as a certified step.

    Returns:
        tuple: (theta_star, IterationRecord at theta_star)
    """
    poly = poly or trig_poly_default()
    objective = _theta_objective(R, r, poly, T0, t0, omega_mode, tolerances, use_cache)
    lo, hi = math.pi / 2 + config.THETA_MARGIN, math.pi - config.THETA_MARGIN
    grid = np.linspace(lo, hi, THETA_SCAN_POINTS)
    scores = [objective(float(theta)) for theta in grid]
    best = int(np.argmin(scores))
    if math.isinf(scores[best]):
        raise ParameterError(f"No feasible theta for R = {R}, r = {r}")
    left = float(grid[max(best - 1, 0)])
    right = float(grid[min(best + 1, THETA_SCAN_POINTS - 1)])
    theta_star = minimize_scalar(objective, left, right, tolerances.minimize_tol)

    kernel = KernelFactory.create(theta_star, use_cache=use_cache, tolerances=tolerances)
    p = RegionParams.build(R, r, kernel, T0, t0, root_tol=tolerances.root_tol)
    record = R0_step(p, poly, omega_mode, step=step, tolerances=tolerances)
    logger.info(f"theta* = {theta_star:.6f} for R = {R:.6f}, r = {r:.5f}: R0 = {record.R0_out:.6f}")
    return theta_star, record


def optimize_theta_schedule(R_init=config.R_INIT, r_schedule=config.THETA_R_SCHEDULE, poly=None, *,
                            single_step=False, **kwargs):
    """
    Alternate theta optimisation and R -> R0 over a schedule of r values.

    Returns:
        list: IterationRecord per step, each carrying its theta_star
    """
    records = []
    R = R_init
    for step, r in enumerate(r_schedule, start=1):
        _, record = optimize_theta(R, min(r, R), poly, step=step, **kwargs)
        records.append(record)
        if single_step:
            break
        R = record.R0_out
    return records
