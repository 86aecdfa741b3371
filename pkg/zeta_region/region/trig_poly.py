"""
Nonnegative trigonometric polynomials sum_k a_k cos(k y), k = 0..4.
"""

import logging
from dataclasses import dataclass

import numpy as np

from .. import config
from ..exceptions import ParameterError

logger = logging.getLogger("zeta_region.region")

GRID_POINTS = 10_000


@dataclass(frozen=True)
class TrigPolynomial:
    """
    Coefficients a_0..a_4, optionally declared equal to 8 (c + cos y)^2 (c' + cos y)^2.
    """

    a: tuple
    factored_roots: tuple = None
    name: str = "custom"

    def __post_init__(self):
        if len(self.a) != 5:
            raise ParameterError(f"Expected five coefficients a_0..a_4, got {len(self.a)}")
        if any(a_k < 0 for a_k in self.a):
            raise ParameterError(f"Coefficients must be nonnegative, got {self.a}")
        object.__setattr__(self, "a", tuple(float(a_k) for a_k in self.a))
        checks = self.check()
        if checks["min_value"] < -1e-12:
            raise ParameterError(f"Polynomial takes the negative value {checks['min_value']:.3e}")
        if checks["factor_error"] is not None and checks["factor_error"] > 1e-9:
            raise ParameterError(f"Coefficients differ from the factored form by {checks['factor_error']:.3e}")

    @property
    def A(self):
        """sum_{k >= 1} a_k."""
        return sum(self.a[1:])

    @classmethod
    def from_factored(cls, c, c2, name="custom"):
        """
        Expand 8 (c + cos y)^2 (c2 + cos y)^2 into cosine coefficients.

        With s = c + c2 and q = c c2: a4 = 1, a3 = 4s, a2 = 4 + 4(s^2 + 2q),
        a1 = 12s + 16sq, a0 = 3 + 4(s^2 + 2q) + 8q^2.
        """
        s, q = c + c2, c * c2
        middle = 4 * (s * s + 2 * q)
        a = (3 + middle + 8 * q * q, 12 * s + 16 * s * q, 4 + middle, 4 * s, 1.0)
        return cls(a=a, factored_roots=(c, c2), name=name)

    def value(self, y):
        y = np.asarray(y, dtype=float)
        return sum(a_k * np.cos(k * y) for k, a_k in enumerate(self.a))

    def factored_value(self, y):
        if self.factored_roots is None:
            raise ParameterError("This polynomial declares no factored form")
        c, c2 = self.factored_roots
        x = np.cos(np.asarray(y, dtype=float))
        return 8 * (c + x) ** 2 * (c2 + x) ** 2

    def check(self, grid_points=GRID_POINTS):
        """
        Grid checks of nonnegativity and of the declared factorisation.

        Returns:
            dict: minimum value on the grid and max-norm factorisation error (None if undeclared)
        """
        grid = np.linspace(0.0, 2 * np.pi, grid_points)
        values = self.value(grid)
        factor_error = None
        if self.factored_roots is not None:
            factor_error = float(np.max(np.abs(values - self.factored_value(grid))))
        return {"min_value": float(np.min(values)), "factor_error": factor_error}


def trig_poly_default():
    """8 (0.91 + cos y)^2 (0.265 + cos y)^2."""
    return TrigPolynomial.from_factored(*config.DEFAULT_ROOTS, name=config.DEFAULT_POLYNOMIAL)


def trig_poly_rosser_schoenfeld():
    """8 (0.9126 + cos y)^2 (0.2766 + cos y)^2."""
    return TrigPolynomial.from_factored(*config.ROSSER_SCHOENFELD_ROOTS, name="rosser_schoenfeld")


def trig_poly_custom(c, c2):
    return TrigPolynomial.from_factored(c, c2, name="custom")


def polynomial_for(name, roots=None):
    """Polynomial selected by a RunConfig name, one of config.POLYNOMIALS."""
    if name == config.DEFAULT_POLYNOMIAL:
        return trig_poly_default()
    if name == "rosser_schoenfeld":
        return trig_poly_rosser_schoenfeld()
    if name == "custom":
        return trig_poly_custom(*roots)
    raise ParameterError(f"Unknown polynomial: {name}")
