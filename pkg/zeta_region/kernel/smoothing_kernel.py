"""
The smoothing kernel h_theta and the constants derived from it.

h_theta is supported on [0, d1] with d1 = -2 theta / tan(theta) and is
C2 there, so h, h' and h'' vanish at d1 and h'(0) = 0. Everything in this
module is a pure function of theta.
"""

import functools
import logging
import math
from dataclasses import dataclass

import numpy as np

from .. import config
from ..exceptions import OrderUnsupported, ParameterError
from ..numerics import DEFAULT_TOLERANCES, find_root, integrate, minimize_scalar

logger = logging.getLogger("zeta_region.kernel")

# Bounds on M(z) for 0 <= z <= 1/d1 at theta = 1.848:
# lower_const - lower_slope z <= M(z) <= upper_const - upper_slope z + upper_quad z^2
M_SANDWICH = (521.632, 212.574, 521.633, 212.573, 68.114)
M1_SANDWICH = (2526.445, 1087.743, 2526.446, 1087.742, 348.808)


def check_theta(theta):
    """
    Validate theta and return it as a float.

    Raises:
        ParameterError: If theta is not strictly inside (pi/2, pi)
    """
    theta = float(theta)
    if not math.pi / 2 < theta < math.pi:
        raise ParameterError(f"theta must lie in (pi/2, pi), got {theta}")
    return theta


@dataclass(frozen=True)
class _Trig:
    theta: float
    T: float
    c: float
    a: float
    d1: float
    sin_theta: float
    sin_2theta: float

    @classmethod
    def of(cls, theta):
        T = math.tan(theta)
        return cls(
            theta=theta,
            T=T,
            c=1 + T * T,
            a=-theta / T,
            d1=-2 * theta / T,
            sin_theta=math.sin(theta),
            sin_2theta=math.sin(2 * theta),
        )


def _as_output(values, u):
    return float(values) if np.ndim(u) == 0 else values


def _on_support(k, u):
    return (u >= 0) & (u <= k.d1)


def h(theta, u):
    """
    Evaluate h_theta(u); zero outside [0, d1].

    Args:
        theta (float): Kernel parameter in (pi/2, pi)
        u (float or numpy.ndarray): Evaluation point(s)

    Returns:
        float or numpy.ndarray: Kernel values, same shape as u
    """
    k = _Trig.of(check_theta(theta))
    u = np.asarray(u, dtype=float)
    uT = u * k.T
    inner = (
        k.c * (k.a - u / 2) * np.cos(uT)
        + k.d1
        - u
        - np.sin(2 * k.theta + uT) / k.sin_2theta
        + 2 * (1 + np.sin(k.theta + uT) / k.sin_theta)
    )
    return _as_output(np.where(_on_support(k, u), k.c * inner, 0.0), u)


def h_deriv(theta, u, order):
    """
    Closed-form derivative of h_theta of order 1, 2 or 3.

    Args:
        theta (float): Kernel parameter in (pi/2, pi)
        u (float or numpy.ndarray): Evaluation point(s); zero is returned off [0, d1]
        order (int): Derivative order

    Returns:
        float or numpy.ndarray: Derivative values, same shape as u

    Raises:
        OrderUnsupported: If order is not 1, 2 or 3
    """
    if order not in (1, 2, 3):
        raise OrderUnsupported(f"h_theta derivatives exist in closed form for orders 1, 2, 3; got {order}")
    k = _Trig.of(check_theta(theta))
    u = np.asarray(u, dtype=float)
    T, uT = k.T, u * k.T
    slope = k.a - u / 2
    if order == 1:
        inner = (
            k.c * (-0.5 * np.cos(uT) - slope * T * np.sin(uT))
            - 1
            - T * np.cos(2 * k.theta + uT) / k.sin_2theta
            + 2 * T * np.cos(k.theta + uT) / k.sin_theta
        )
    elif order == 2:
        inner = (
            k.c * (T * np.sin(uT) - slope * T**2 * np.cos(uT))
            + T**2 * np.sin(2 * k.theta + uT) / k.sin_2theta
            - 2 * T**2 * np.sin(k.theta + uT) / k.sin_theta
        )
    else:
        inner = (
            k.c * (1.5 * T**2 * np.cos(uT) + slope * T**3 * np.sin(uT))
            + T**3 * np.cos(2 * k.theta + uT) / k.sin_2theta
            - 2 * T**3 * np.cos(k.theta + uT) / k.sin_theta
        )
    return _as_output(np.where(_on_support(k, u), k.c * inner, 0.0), u)


def support_end(theta):
    """d1(theta) = -2 theta / tan(theta)."""
    return -2 * check_theta(theta) / math.tan(theta)


def g_constants(theta):
    """
    Closed forms of g1 = h(0), g2 = integral of h and g3.

    Returns:
        tuple: (g1, g2, g3)
    """
    theta = check_theta(theta)
    T = math.tan(theta)
    c = 1 + T * T
    g1 = c * (3 - theta * T - 3 * theta / T)
    g2 = 2 * c * (1 - theta / T) ** 2
    g3 = 2 * T * T + 3 - 3 * theta * T - 3 * theta / T
    return g1, g2, g3


def _supremum(func, lo, hi, grid_points, tol):
    """sup |func| on [lo, hi]: grid scan, then golden-section on the best cell."""
    grid = np.linspace(lo, hi, grid_points)
    values = np.abs(func(grid))
    best = int(np.argmax(values))
    left = grid[max(best - 1, 0)]
    right = grid[min(best + 1, grid_points - 1)]
    x_star = minimize_scalar(lambda x: -abs(float(func(x))), left, right, tol)
    return max(float(values[best]), abs(float(func(x_star))))


@functools.lru_cache(maxsize=256)
def sign_changes(theta, order, grid_points=config.SUPREMUM_GRID_POINTS):
    """
    Interior zeros of h_theta^(order) on (0, d1), located by bisection.

    These are the kinks of |h''| and |h'''| and serve as quadrature breakpoints.

    Returns:
        tuple: Sorted zeros
    """
    d1 = support_end(theta)
    grid = np.linspace(0.0, d1, grid_points)
    values = h_deriv(theta, grid, order)
    roots = []
    for i in np.flatnonzero(np.sign(values[:-1]) * np.sign(values[1:]) < 0):
        roots.append(find_root(lambda u: h_deriv(theta, u, order), grid[i], grid[i + 1], 1e-15))
    return tuple(roots)


def M_integral(theta, z, order=0, tolerances=DEFAULT_TOLERANCES):
    """
    Exponentially weighted L1 norms of the kernel derivatives.

    order 0 gives M(z) = integral of |h''(u)| e^(-zu), order 1 gives M1(z)
    with |h'''| and order 2 gives M2(z) with u |h''(u)|, all over [0, d1].

    Args:
        theta (float): Kernel parameter
        z (float): Exponential rate; may be negative
        order (int): 0, 1 or 2
        tolerances (ToleranceConfig, optional): Quadrature settings

    Returns:
        float: The weighted integral

    Raises:
        OrderUnsupported: If order is not 0, 1 or 2
    """
    if order not in (0, 1, 2):
        raise OrderUnsupported(f"M_integral order must be 0, 1 or 2, got {order}")
    theta = check_theta(theta)
    d1 = support_end(theta)
    deriv = 3 if order == 1 else 2
    weight_power = 1 if order == 2 else 0

    def integrand(u):
        return np.abs(h_deriv(theta, u, deriv)) * u**weight_power * np.exp(-z * u)

    result = integrate(integrand, 0.0, d1, breakpoints=sign_changes(theta, deriv), tolerances=tolerances)
    return result.value


@dataclass(frozen=True)
class SmoothingKernel:
    """
    h_theta together with its derived constants.

    m, m1 and uh2_sup are suprema of |h''|, |h'''| and |u h''| on [0, d1];
    M0, M_neg1 and M1_0 are M(0), M(-1) and M1(0). M0 is also ||h''||_1.
    """

    theta: float
    d1: float
    g1: float
    g2: float
    g3: float
    m: float
    m1: float
    uh2_sup: float
    M0: float
    M_neg1: float
    M1_0: float

    @property
    def h2_l1(self):
        return self.M0

    def __post_init__(self):
        check_theta(self.theta)
        positive = ("d1", "g1", "g2", "g3", "m", "m1", "uh2_sup")
        for name in positive:
            if not getattr(self, name) > 0:
                raise ParameterError(f"{name} must be positive at theta = {self.theta}, got {getattr(self, name)}")

    def h(self, u):
        return h(self.theta, u)

    def h_deriv(self, u, order):
        return h_deriv(self.theta, u, order)

    def M(self, z, order=0, tolerances=DEFAULT_TOLERANCES):
        """M(z), M1(z) or M2(z) for this kernel; M(0), M(-1), M1(0) are served from the stored values."""
        if order == 0 and z == 0:
            return self.M0
        if order == 0 and z == -1:
            return self.M_neg1
        if order == 1 and z == 0:
            return self.M1_0
        return M_integral(self.theta, z, order, tolerances)

    def to_dict(self):
        return {
            "theta": self.theta, "d1": self.d1, "g1": self.g1, "g2": self.g2, "g3": self.g3,
            "m": self.m, "m1": self.m1, "uh2_sup": self.uh2_sup,
            "M0": self.M0, "M_neg1": self.M_neg1, "M1_0": self.M1_0,
        }


def kernel_constants(theta, tolerances=DEFAULT_TOLERANCES, grid_points=config.SUPREMUM_GRID_POINTS):
    """
    Build the SmoothingKernel for theta.

    g1, g2, g3 and d1 come from closed forms; the suprema use a uniform grid
    refined by golden-section search on the best cell.

    Args:
        theta (float): Kernel parameter in (pi/2, pi)
        tolerances (ToleranceConfig, optional): Quadrature and minimisation settings
        grid_points (int, optional): Supremum grid size

    Returns:
        SmoothingKernel: Immutable kernel constants
    """
    theta = check_theta(theta)
    d1 = support_end(theta)
    g1, g2, g3 = g_constants(theta)
    tol = tolerances.minimize_tol * 1e-3

    m = _supremum(lambda u: h_deriv(theta, u, 2), 0.0, d1, grid_points, tol)
    m1 = _supremum(lambda u: h_deriv(theta, u, 3), 0.0, d1, grid_points, tol)
    uh2_sup = _supremum(lambda u: u * h_deriv(theta, u, 2), 0.0, d1, grid_points, tol)

    kernel = SmoothingKernel(
        theta=theta, d1=d1, g1=g1, g2=g2, g3=g3, m=m, m1=m1, uh2_sup=uh2_sup,
        M0=M_integral(theta, 0.0, 0, tolerances),
        M_neg1=M_integral(theta, -1.0, 0, tolerances),
        M1_0=M_integral(theta, 0.0, 1, tolerances),
    )
    logger.debug(f"Kernel constants at theta = {theta}: g1 = {g1:.8f}, m = {m:.8f}, M(0) = {kernel.M0:.8f}")
    return kernel


def laplace_F_tilde(theta, eta, x, y, tolerances=DEFAULT_TOLERANCES):
    """
    F~(x, y) = integral over [0, d1] of exp(-x t / eta) cos(y t / eta) h(t).

    Args:
        theta (float): Kernel parameter
        eta (float): Scale, strictly positive
        x (float): Real part of the Laplace variable (scaled by eta)
        y (float): Imaginary part of the Laplace variable (scaled by eta)
        tolerances (ToleranceConfig, optional): Quadrature settings

    Returns:
        float: The transform value

    Raises:
        ParameterError: If eta <= 0
    """
    if not eta > 0:
        raise ParameterError(f"eta must be positive, got {eta}")
    theta = check_theta(theta)
    d1 = support_end(theta)
    rate, freq = x / eta, y / eta

    def integrand(t):
        return np.exp(-rate * t) * np.cos(freq * t) * h(theta, t)

    # one breakpoint per period keeps the first round well resolved
    periods = int(d1 * abs(freq) / (2 * math.pi))
    breakpoints = np.linspace(0.0, d1, min(periods, 4000) + 2)[1:-1] if periods > 1 else ()
    return integrate(integrand, 0.0, d1, breakpoints=breakpoints, tolerances=tolerances).value


def H_direct(kernel, eta, x, y, tolerances=DEFAULT_TOLERANCES):
    """The remainder H(x, y) = F~(x, y) - eta g1 x / (x^2 + y^2)."""
    return laplace_F_tilde(kernel.theta, eta, x, y, tolerances) - eta * kernel.g1 * x / (x * x + y * y)


def H_remainder_bound(kernel, eta, x, y, fine=False, tolerances=DEFAULT_TOLERANCES):
    """
    Upper bound on |H(x, y)|.

    The coarse bound is M(x/eta) eta^2 / (x^2 + y^2). The fine bound
    integrates by parts once more and decays faster in y:
    m eta^3 |x| |x^2 - 3y^2| / (x^2 + y^2)^3 + M1(x/eta) eta^3 / (x^2 + y^2)^(3/2).

    Args:
        kernel (SmoothingKernel): Kernel constants
        eta (float): Scale, strictly positive
        x (float): Real part
        y (float): Imaginary part
        fine (bool, optional): Use the second-order bound

    Returns:
        float: The bound

    Raises:
        ParameterError: If (x, y) = (0, 0) or eta <= 0
    """
    if not eta > 0:
        raise ParameterError(f"eta must be positive, got {eta}")
    r2 = x * x + y * y
    if r2 == 0:
        raise ParameterError("H_remainder_bound is undefined at the origin")
    z = x / eta
    if not fine:
        return kernel.M(z, 0, tolerances) * eta**2 / r2
    return (
        kernel.m * eta**3 * abs(x) * abs(x * x - 3 * y * y) / r2**3
        + kernel.M(z, 1, tolerances) * eta**3 / r2**1.5
    )


def monotonicity_epsilons(kernel=None):
    """
    Per-unit-eta thresholds (eps1, eps2, eps3) behind monotonicity_thresholds.

    The printed constants are used at theta = 1.848; for any other kernel
    they are recomputed from ||u h''||_inf, ||h''||_1 and g1.
    """
    if kernel is None or kernel.theta == config.DEFAULT_THETA:
        return config.MONOTONICITY_EPS
    root2_l1 = math.sqrt(2) * kernel.h2_l1
    return (
        root2_l1 / kernel.g1,
        2 * kernel.uh2_sup / kernel.g1,
        (kernel.uh2_sup + root2_l1) / kernel.g1,
    )


def monotonicity_thresholds(eta, y, kernel=None):
    """
    Abscissae bounding the monotone stretches of x -> F~(x, y).

    F~(., y) decreases on [x2, infinity) with x2 = eps3 + sqrt(y^2 + eps3^2),
    and increases on [0, x1] with x1 = y/2 - eps1 + sqrt((y/2 - eps1)^2 - eps2)
    whenever the radicand is nonnegative.

    Args:
        eta (float): Scale, strictly positive
        y (float): Imaginary part, strictly positive
        kernel (SmoothingKernel, optional): Kernel whose constants set the thresholds

    Returns:
        tuple: (x1 or None, x2)
    """
    if not eta > 0 or not y > 0:
        raise ParameterError(f"monotonicity thresholds need eta > 0 and y > 0, got eta = {eta}, y = {y}")
    eps1, eps2, eps3 = (e * eta for e in monotonicity_epsilons(kernel))
    x2 = eps3 + math.sqrt(y * y + eps3 * eps3)
    radicand = (y / 2 - eps1) ** 2 - eps2
    x1 = y / 2 - eps1 + math.sqrt(radicand) if radicand >= 0 else None
    return x1, x2
