"""
The remainder cubic C(eta) = alpha1 eta + alpha2 eta^2 + alpha3 eta^3.

C collects four explicit error terms: C1 from the Gamma factors, C2 from
D(s - 1), C3 from zeros close to the real axis and C4 from the remainder
integral Delta2. A step of the iteration is certified when C(eta0) < 0.
"""

import functools
import logging
import math
from dataclasses import dataclass, field

import numpy as np

from .. import config
from ..exceptions import CertificateFailure, ParameterError
from ..kernel import SmoothingKernel
from ..numerics import DEFAULT_TOLERANCES, find_root, integrate
from .digamma import U0_array, r2, r3, re_digamma
from .positivity import PositivityParams, solve_delta_kappa
from .zero_counting import weighted_zero_sum

logger = logging.getLogger("zeta_region.remainder")

C40_TOL = 1e-9
C40_HEIGHTS = ("kT0", "kt1")
C40_U0 = ("majorant", "printed")


@dataclass(frozen=True)
class RegionParams:
    """
    Parameter bundle of one iteration step.

    eta0 = 1/(r log T0) and sigma0 = 1 - 1/(R log(4 T0 + t0)); (kappa, delta)
    normally come from solve_delta_kappa.
    """

    T0: float
    t0: float
    R: float
    r: float
    eta0: float
    sigma0: float
    kappa: float
    delta: float
    kernel: SmoothingKernel = field(repr=False, compare=False)
    y0: float = config.CONTOUR_HEIGHT

    def __post_init__(self):
        if not config.R_FLOOR <= self.r <= self.R:
            raise ParameterError(f"Need {config.R_FLOOR} <= r <= R, got r = {self.r}, R = {self.R}")
        if not 0 <= self.kappa < 1:
            raise ParameterError(f"kappa must lie in [0, 1), got {self.kappa}")
        if not 0 < self.delta <= 1:
            raise ParameterError(f"delta must lie in (0, 1], got {self.delta}")

    @property
    def theta(self):
        return self.kernel.theta

    @staticmethod
    def eta_sigma(R, r, T0=config.T0, t0=config.T_ZERO_SHIFT):
        """(eta0, sigma0) for the pair (R, r)."""
        return 1 / (r * math.log(T0)), 1 - 1 / (R * math.log(4 * T0 + t0))

    @classmethod
    def build(cls, R, r, kernel, T0=config.T0, t0=config.T_ZERO_SHIFT, kappa=None, delta=None,
              y0=config.CONTOUR_HEIGHT, root_tol=config.ROOT_TOL):
        """
        Compute eta0 and sigma0 and solve for (delta, kappa).

        Args:
            R (float): Current zero-free region constant
            r (float): Working strength, 5 <= r <= R
            kernel (SmoothingKernel): Kernel constants at theta
            T0 (float, optional): Verified height
            t0 (float, optional): Shift in log(4 T0 + t0)
            kappa (float, optional): Use this kappa instead of the solved one
            delta (float, optional): Use this delta instead of the solved one

        Returns:
            RegionParams: The parameter bundle

        Raises:
            WindowViolation: If the solved kappa0 is inadmissible
        """
        if not config.R_FLOOR <= r <= R:
            raise ParameterError(f"Need {config.R_FLOOR} <= r <= R, got r = {r}, R = {R}")
        eta0, sigma0 = cls.eta_sigma(R, r, T0, t0)
        if kappa is None or delta is None:
            solved_delta, solved_kappa = solve_delta_kappa(PositivityParams(eta0, sigma0, kernel, y0), root_tol)
            delta = solved_delta if delta is None else delta
            kappa = solved_kappa if kappa is None else kappa
        return cls(T0=T0, t0=t0, R=R, r=r, eta0=eta0, sigma0=sigma0, kappa=kappa, delta=delta,
                   kernel=kernel, y0=y0)

    def positivity(self):
        return PositivityParams(self.eta0, self.sigma0, self.kernel, self.y0)


@dataclass(frozen=True)
class RemainderCubic:
    """Coefficients of C(eta) together with the pieces they were assembled from."""

    alpha1: float
    alpha2: float
    alpha3: float
    eta0: float
    parts: dict = field(default_factory=dict, compare=False)

    def value(self, eta):
        return ((self.alpha3 * eta + self.alpha2) * eta + self.alpha1) * eta

    @property
    def value_at_eta0(self):
        return self.value(self.eta0)

    def positive_root(self):
        """The positive root of C(eta)/eta; C < 0 on (0, root) when alpha1 < 0 < alpha3."""
        discriminant = self.alpha2**2 - 4 * self.alpha3 * self.alpha1
        return (-self.alpha2 + math.sqrt(discriminant)) / (2 * self.alpha3)


def c1_k(k, p):
    """
    Constant c1(k) of the Gamma-factor bound.

    c1(0) = -((1 - kappa)/2) log pi + psi(3/2)/2 - (kappa/2) psi((sigma0 + delta)/2 + 1);
    c1(k) = -((1 - kappa)/2) log(2 pi / k) + min(r2, r3)(sigma0 + 2, 3, k T0)/2 for k >= 1.
    """
    if k == 0:
        return (
            -(1 - p.kappa) / 2 * math.log(math.pi)
            + 0.5 * re_digamma(3.0, 0.0)
            - p.kappa / 2 * re_digamma(p.sigma0 + p.delta + 2, 0.0)
        )
    if not 1 <= k <= 4:
        raise ParameterError(f"k must lie in 0..4, got {k}")
    box = (p.sigma0 + 2, 3.0, k * p.T0, p.kappa, p.delta)
    return -(1 - p.kappa) / 2 * math.log(2 * math.pi / k) + 0.5 * min(r2(*box), r3(*box))


def C1_coefficient(p, poly):
    """Slope of C1(eta) = g1 sum_k a_k c1(k) eta."""
    return p.kernel.g1 * sum(a_k * c1_k(k, p) for k, a_k in enumerate(poly.a))


def _inverse_square_heights(p, poly):
    return sum(poly.a[k] / (k * p.T0) ** 2 for k in range(1, 5))


def C2_coefficients(p, poly):
    """
    Coefficients (q1, q2, q3) of C2(eta).

    q1 = -kappa (a0 g1/delta + (delta g1/2) S), q2 = (M(-1) + kappa m) S,
    q3 = a0 m kappa / delta^3, with S = sum_{k>=1} a_k/(k T0)^2.
    """
    k = p.kernel
    a0 = poly.a[0]
    S = _inverse_square_heights(p, poly)
    q1 = -p.kappa * (a0 * k.g1 / p.delta + p.delta * k.g1 / 2 * S)
    q2 = (k.M_neg1 + p.kappa * k.m) * S
    q3 = a0 * k.m * p.kappa / p.delta**3
    return q1, q2, q3


def C3_coefficients(p, poly, zero_sum=None):
    """
    Coefficients (p1, p2, p3) of C3(eta).

    With S = sum_k a_k c30(k T0) (the k = 0 term uses the t = 0 sum),
    s = sigma0 - eta0 + delta and s1 = 1 - eta0 + delta:
    p1 = a1 g1 ((1/delta + 1/s) kappa - 1),
    p2 = M(0) S / 2,
    p3 = (1 + 2 kappa) m S / (2 sigma0 - 1) + a1 m1 ((1/delta^3 + 1/s1^3) kappa - 1).

    The cubic term of the k = 1 piece is bounded through h_theta''', so it
    carries m1 rather than m.

    Args:
        p (RegionParams): Step parameters
        poly (TrigPolynomial): Coefficients a_0..a_4
        zero_sum (float, optional): Precomputed S

    Returns:
        tuple: (p1, p2, p3)
    """
    k = p.kernel
    a1 = poly.a[1]
    S = weighted_zero_sum(poly, p.T0) if zero_sum is None else zero_sum
    shifted = p.sigma0 - p.eta0 + p.delta
    unit_shifted = 1 - p.eta0 + p.delta
    p1 = a1 * k.g1 * ((1 / p.delta + 1 / shifted) * p.kappa - 1)
    p2 = k.M0 / 2 * S
    p3 = (
        (1 + 2 * p.kappa) * k.m * S / (2 * p.sigma0 - 1)
        + a1 * k.m1 * ((1 / p.delta**3 + 1 / unit_shifted**3) * p.kappa - 1)
    )
    return p1, p2, p3


@functools.lru_cache(maxsize=1)
def U0_kink():
    """The point T > 1/2 where log(T/2) = 2/(1 + 4T^2), a kink of U0."""
    return find_root(lambda T: math.log(T / 2) - 2 / (1 + 4 * T * T), 0.5, 10.0, 1e-15)


def C40_integral(x, y, u0="majorant", half_width=None, tol=C40_TOL, tolerances=DEFAULT_TOLERANCES):
    """
    integral of U(T) / (x^2 + (T - y)^2) dT over the whole line, or over |T - y| <= half_width.

    T = y + x tan(phi) maps the line onto (-pi/2, pi/2) with integrand U(T)/x.
    """
    if u0 not in C40_U0:
        raise ParameterError(f"u0 must be one of {C40_U0}, got {u0!r}")
    majorant = u0 == "majorant"
    limit = math.pi / 2 if half_width is None else math.atan(half_width / x)
    kinks = (0.0, 0.5, -0.5, U0_kink(), -U0_kink())
    breakpoints = sorted(
        phi for phi in (math.atan((T - y) / x) for T in kinks) if abs(abs(phi) - math.pi / 2) > 1e-9
    )

    def integrand(phi):
        return U0_array(y + x * np.tan(phi), majorant) / x

    return integrate(integrand, -limit, limit, tol, breakpoints=breakpoints, tolerances=tolerances).value


def C40(x, y, kernel, u0="majorant", tolerances=DEFAULT_TOLERANCES):
    """eta^3 coefficient of C40(eta, x, y) = (m eta^3 / (2 pi x)) integral of U(T)/(x^2 + (T - y)^2) dT."""
    return kernel.m / (2 * math.pi * x) * C40_integral(x, y, u0, tolerances=tolerances)


def C41(k, p, height="kT0", u0="majorant", tolerances=DEFAULT_TOLERANCES):
    """eta^3 coefficient of C40(sigma0 - 1/2, y_k) + kappa C40(sigma0 - 1/2 + delta, y_k)."""
    if height not in C40_HEIGHTS:
        raise ParameterError(f"height must be one of {C40_HEIGHTS}, got {height!r}")
    y = k * (p.T0 if height == "kT0" else config.FIRST_ZERO_ORDINATE)
    x = p.sigma0 - 0.5
    return C40(x, y, p.kernel, u0, tolerances) + p.kappa * C40(x + p.delta, y, p.kernel, u0, tolerances)


def C42(k, p):
    """eta^3 coefficient of C42(eta, k)."""
    m, sigma = p.kernel.m, p.sigma0
    if k == 0:
        return (1 / sigma**3 + p.kappa / (sigma + p.delta) ** 3) * m
    return (1 / sigma + p.kappa / (sigma + p.delta)) * m / (k * p.T0) ** 2


def C4_bound(p, poly, height="kT0", u0="majorant", tolerances=DEFAULT_TOLERANCES):
    """
    eta^3 coefficient of C4: sum_k a_k (C41(k) + C42(k)).

    Args:
        p (RegionParams): Step parameters
        poly (TrigPolynomial): Coefficients a_0..a_4
        height (str, optional): "kT0" evaluates C41 at k T0, "kt1" at k t1
        u0 (str, optional): "majorant" or the "printed" two-branch U0

    Returns:
        float: The coefficient
    """
    total = 0.0
    for k, a_k in enumerate(poly.a):
        c41, c42 = C41(k, p, height, u0, tolerances), C42(k, p)
        logger.debug(f"C4 term k = {k}: C41 = {c41:.4f}, C42 = {c42:.6g}")
        total += a_k * (c41 + c42)
    return total


def assemble_C(p, poly, height="kT0", u0="majorant", zero_sum=None, tolerances=DEFAULT_TOLERANCES):
    """
    Assemble C(eta) and check its negativity at eta0.

    alpha1 = C1 + q1 + p1, alpha2 = q2 + p2, alpha3 = q3 + p3 + C4.

    Args:
        p (RegionParams): Step parameters
        poly (TrigPolynomial): Coefficients a_0..a_4
        height (str, optional): C41 height convention
        u0 (str, optional): U0 variant inside C40
        zero_sum (float, optional): Precomputed sum_k a_k c30(k T0)

    Returns:
        RemainderCubic: The certified cubic

    Raises:
        CertificateFailure: If the sign pattern alpha1 < 0 < alpha2, alpha3 fails or C(eta0) >= 0
    """
    c1 = C1_coefficient(p, poly)
    q1, q2, q3 = C2_coefficients(p, poly)
    p1, p2, p3 = C3_coefficients(p, poly, zero_sum)
    c4 = C4_bound(p, poly, height, u0, tolerances)
    cubic = RemainderCubic(
        alpha1=c1 + q1 + p1,
        alpha2=q2 + p2,
        alpha3=q3 + p3 + c4,
        eta0=p.eta0,
        parts={"C1": c1, "q1": q1, "q2": q2, "q3": q3, "p1": p1, "p2": p2, "p3": p3, "C4": c4},
    )
    if not cubic.alpha1 < 0 < min(cubic.alpha2, cubic.alpha3):
        logger.error(f"Remainder sign pattern broken: {cubic.alpha1}, {cubic.alpha2}, {cubic.alpha3}")
        raise CertificateFailure(
            f"Expected alpha1 < 0 < alpha2, alpha3; got ({cubic.alpha1:.6g}, {cubic.alpha2:.6g}, {cubic.alpha3:.6g})",
            cubic=cubic,
        )
    if not cubic.value_at_eta0 < 0:
        logger.error(f"C(eta0) = {cubic.value_at_eta0:.6g} >= 0 at R = {p.R}, r = {p.r}")
        raise CertificateFailure(f"C(eta0) = {cubic.value_at_eta0:.6g} is not negative", cubic=cubic)
    return cubic


def remainder_diagnostics(p):
    """
    Intermediate constants of the bounds on D(sigma - 1 + it).

    For t = 0 the eta and eta^3 coefficients are g1/delta and m/delta^3;
    for t >= T0 they are kappa g1 (sigma0 - 1 + delta)/2 and M(-1) + kappa m.

    Returns:
        dict: name -> (computed, printed at the first step)
    """
    k = p.kernel
    return {
        "g1_over_delta": (k.g1 / p.delta, 238.212),
        "m_over_delta_cubed": (k.m / p.delta**3, 5533.813),
        "far_linear": (p.kappa * k.g1 * (p.sigma0 - 1 + p.delta) / 2, 20.991),
        "far_quadratic": (k.M_neg1 + p.kappa * k.m, 1403.284),
    }
