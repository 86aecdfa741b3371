"""
Property suites behind the ``verify`` command.

Each check returns a PropertyResult; failing checks carry witnesses, the
sampled points where the property broke.
"""

import logging
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import digamma

from . import config, golden
from .bounds.digamma import re_digamma
from .bounds.positivity import D_pair_grid, kappa_window, stechkin_value
from .bounds.remainder import assemble_C
from .bounds.zero_counting import sum_inverse_gamma_sq_at_zero
from .exceptions import CertificateFailure
from .kernel import M1_SANDWICH, M_SANDWICH, H_direct, H_remainder_bound, M_integral, h, h_deriv, laplace_F_tilde
from .numerics import DEFAULT_TOLERANCES

logger = logging.getLogger("zeta_region.verify")

PASS, FAIL, SKIP = "pass", "fail", "skip"
MAX_WITNESSES = 10


@dataclass
class PropertyResult:
    name: str
    status: str
    checked: int = 0
    witnesses: list = field(default_factory=list)
    detail: str = ""

    @property
    def passed(self):
        return self.status != FAIL

    def to_row(self):
        return {
            "property": self.name,
            "status": self.status,
            "checked": self.checked,
            "failures": len(self.witnesses),
            "detail": self.detail,
        }


def _result(name, checked, witnesses, detail=""):
    status = FAIL if witnesses else PASS
    if witnesses:
        logger.warning(f"{name}: {len(witnesses)} of {checked} samples fail, first at {witnesses[0]}")
    else:
        logger.info(f"{name}: {checked} samples pass")
    return PropertyResult(name, status, checked, witnesses[:MAX_WITNESSES], detail)


def check_endpoint_conditions(kernel, tol=1e-8):
    """h(d1) = h'(0) = h'(d1) = h''(d1) = 0."""
    theta, d1 = kernel.theta, kernel.d1
    values = {
        "h(d1)": h(theta, d1),
        "h'(0)": h_deriv(theta, 0.0, 1),
        "h'(d1)": h_deriv(theta, d1, 1),
        "h''(d1)": h_deriv(theta, d1, 2),
    }
    witnesses = [(name, value) for name, value in values.items() if abs(value) > tol]
    return _result("endpoint conditions", len(values), witnesses)


def check_laplace_nonnegativity(kernel, etas=(1e-3, 8e-3, 1e-2), tolerances=DEFAULT_TOLERANCES):
    """F~(x, y) >= -1e-12 for x in {0, 0.1, .., 2}, y in {0, 0.5, .., 10}."""
    witnesses, checked = [], 0
    for eta in etas:
        for x in np.linspace(0.0, 2.0, 21):
            for y in np.linspace(0.0, 10.0, 21):
                value = laplace_F_tilde(kernel.theta, eta, float(x), float(y), tolerances)
                checked += 1
                if value < -1e-12:
                    witnesses.append((eta, float(x), float(y), value))
    return _result("Laplace transform nonnegativity", checked, witnesses)


def check_M_sandwich(kernel, points=11, reference_theta=config.DEFAULT_THETA, tolerances=DEFAULT_TOLERANCES):
    """Linear lower and quadratic upper bounds on M(z) and M1(z) for 0 <= z <= 1/d1."""
    if kernel.theta != reference_theta:
        return PropertyResult("M(z) sandwich", SKIP, detail="bounds are published for theta = 1.848 only")
    witnesses = []
    for order, sandwich in ((0, M_SANDWICH), (1, M1_SANDWICH)):
        lower_c, lower_s, upper_c, upper_s, upper_q = sandwich
        for z in np.linspace(0.0, 1 / kernel.d1, points):
            value = M_integral(kernel.theta, float(z), order, tolerances)
            if not lower_c - lower_s * z <= value <= upper_c - upper_s * z + upper_q * z * z:
                witnesses.append((order, float(z), value))
    return _result("M(z) sandwich", 2 * points, witnesses)


def check_H_bound(kernel, eta=8e-3, samples=100, seed=0, tolerances=DEFAULT_TOLERANCES):
    """|H(x, y)| <= M(x/eta) eta^2 / (x^2 + y^2) at random (x, y) in [0.01, 2] x [0.5, 10]."""
    rng = np.random.default_rng(seed)
    witnesses = []
    for x, y in zip(rng.uniform(0.01, 2.0, samples), rng.uniform(0.5, 10.0, samples)):
        x, y = float(x), float(y)
        remainder = abs(H_direct(kernel, eta, x, y, tolerances))
        bound = H_remainder_bound(kernel, eta, x, y, tolerances=tolerances)
        if remainder > bound + 1e-10:
            witnesses.append((x, y, remainder, bound))
    return _result("remainder bound dominance", samples, witnesses)


def check_stechkin(samples=1000, seed=0):
    """The Stechkin pair is nonnegative for beta in [1/2, 1], y in (0, 50], sigma in (1, 2]."""
    rng = np.random.default_rng(seed)
    betas = rng.uniform(0.5, 1.0, samples)
    heights = rng.uniform(1e-3, 50.0, samples)
    sigmas = 1 + rng.uniform(1e-6, 1.0, samples)
    witnesses = []
    for beta, y, sigma in zip(betas, heights, sigmas):
        value = stechkin_value(float(beta), float(y), float(sigma))
        if value < -1e-12:
            witnesses.append((float(beta), float(y), float(sigma), value))
    return _result("Stechkin inequality", samples, witnesses)


def check_D_pair(params, n_beta=10, n_y=20, tolerances=DEFAULT_TOLERANCES):
    """D-pair positivity on the n_beta x n_y grid at the step's (kappa, delta)."""
    failures = D_pair_grid(params, n_beta, n_y, tolerances)
    detail = f"kappa = {params.kappa:.6f}, delta = {params.delta:.6f}"
    return _result("D-pair positivity", n_beta * n_y, failures, detail)


def check_kappa_window(params):
    lower, upper = kappa_window(params.delta)
    witnesses = [] if lower <= params.kappa <= upper else [(params.delta, params.kappa, lower, upper)]
    return _result("kappa window", 1, witnesses, f"[{lower:.6f}, {upper:.6f}]")


def check_certificate(params, poly, tolerances=DEFAULT_TOLERANCES):
    """C(eta0) < 0 with alpha1 < 0 < alpha2, alpha3."""
    try:
        cubic = assemble_C(params, poly, tolerances=tolerances)
    except CertificateFailure as e:
        witness = (e.cubic.alpha1, e.cubic.alpha2, e.cubic.alpha3, e.cubic.value_at_eta0) if e.cubic else str(e)
        return _result("remainder certificate", 1, [witness], str(e))
    return _result("remainder certificate", 1, [], f"C(eta0) = {cubic.value_at_eta0:.6f}")


def check_trig_polynomial(poly):
    checks = poly.check()
    witnesses = []
    if checks["min_value"] < -1e-12:
        witnesses.append(("min_value", checks["min_value"]))
    if checks["factor_error"] is not None and checks["factor_error"] > 1e-9:
        witnesses.append(("factor_error", checks["factor_error"]))
    return _result("trigonometric polynomial", 2, witnesses)


def check_determinism(kernel, tolerances=DEFAULT_TOLERANCES):
    """Repeated quadratures return bit-identical values."""
    evaluations = {
        "M(0.5)": lambda: M_integral(kernel.theta, 0.5, 0, tolerances),
        "F~(0.3, 4)": lambda: laplace_F_tilde(kernel.theta, 8e-3, 0.3, 4.0, tolerances),
    }
    witnesses = []
    for name, evaluate in evaluations.items():
        first, second = evaluate(), evaluate()
        if first != second:
            witnesses.append((name, first, second))
    return _result("quadrature determinism", len(evaluations), witnesses)


def check_zero_sum(upper=golden.SUM_INVERSE_GAMMA_SQ.value, lower=golden.SUM_INVERSE_GAMMA_SQ_FLOOR):
    """4 int N1/u^3 from t1 lands between the floor and the published bound."""
    value = sum_inverse_gamma_sq_at_zero()
    witnesses = [] if lower <= value <= upper else [value]
    return _result("sum over zeros of 1/gamma^2", 1, witnesses, f"{value:.7f}")


def check_digamma(points=((0.3, 0.0), (1.7, 2.5), (0.25, 40.0), (3.0, 1e4)), tol=1e-9):
    """Re psi(x/2 + iy/2) against scipy's complex digamma."""
    witnesses = []
    for x, y in points:
        ours = re_digamma(x, y)
        reference = float(np.real(digamma(complex(x / 2, y / 2))))
        if not math.isclose(ours, reference, rel_tol=tol, abs_tol=tol):
            witnesses.append((x, y, ours, reference))
    return _result("digamma oracle", len(points), witnesses)


def run_all(params, poly, tolerances=DEFAULT_TOLERANCES):
    """
    Run every property suite at one step's parameters.

    Args:
        params (RegionParams): Step parameters, possibly with injected kappa or delta
        poly (TrigPolynomial): Polynomial of the certificate

    Returns:
        list: PropertyResult per suite, in a fixed order
    """
    kernel = params.kernel
    return [
        check_endpoint_conditions(kernel),
        check_laplace_nonnegativity(kernel, tolerances=tolerances),
        check_M_sandwich(kernel, tolerances=tolerances),
        check_H_bound(kernel, tolerances=tolerances),
        check_stechkin(),
        check_D_pair(params, tolerances=tolerances),
        check_kappa_window(params),
        check_certificate(params, poly, tolerances),
        check_trig_polynomial(poly),
        check_determinism(kernel, tolerances),
        check_zero_sum(),
        check_digamma(),
    ]
