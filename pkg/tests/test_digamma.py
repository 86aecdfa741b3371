"""
Tests for the digamma evaluations and bounds.
"""

import math

import numpy as np
import pytest
from scipy.special import digamma

from zeta_region.bounds.digamma import (
    EULER_GAMMA,
    PSI_QUARTER_ABS,
    R1,
    U0,
    DigammaBoundParams,
    U0_array,
    U0_majorant,
    psi_diff_bound,
    psi_kappa_delta,
    r1,
    r2,
    r3,
    re_digamma,
    sawtooth_bound,
    sawtooth_integral,
)
from zeta_region.exceptions import NonpositiveRealPart, ParameterError

KAPPA, DELTA = 0.4389, 0.62063


class TestReDigamma:
    """Test suite for re_digamma."""

    def test_psi_one(self):
        assert re_digamma(2.0, 0.0) == pytest.approx(-EULER_GAMMA, abs=1e-8)

    def test_psi_three_halves(self):
        assert re_digamma(3.0, 0.0) == pytest.approx(2 - EULER_GAMMA - 2 * math.log(2), abs=1e-8)

    @pytest.mark.parametrize("x, y", [(0.5, 0.0), (1.0, 3.0), (0.5, 40.0), (2.6, 1000.0), (7.0, -12.0)])
    def test_matches_scipy(self, x, y):
        expected = float(np.real(digamma(complex(x / 2, y / 2))))

        assert re_digamma(x, y) == pytest.approx(expected, rel=1e-9, abs=1e-9)

    @pytest.mark.parametrize("z", [0.5, 1.5, 2.5])
    def test_recurrence(self, z):
        assert re_digamma(2 * (z + 1), 0.0) == pytest.approx(re_digamma(2 * z, 0.0) + 1 / z, abs=1e-9)

    def test_asymptotic_remainder(self):
        T = 100.0

        difference = re_digamma(0.5, T) - math.log(T / 2)

        assert abs(difference) <= 2 / (1 + 4 * T * T) + 2 / (3 * T) + 1 / (8 * T * T)

    @pytest.mark.parametrize("x", [0.0, -1.0])
    def test_nonpositive_real_part(self, x):
        with pytest.raises(NonpositiveRealPart):
            re_digamma(x, 1.0)


class TestSawtooth:
    """Test suite for the sawtooth integral and its bound."""

    @pytest.mark.parametrize("x, y", [(0.25, 0.0), (0.5, 2.0), (1.3, 25.0), (0.3, 400.0)])
    def test_bound_dominates(self, x, y):
        assert abs(sawtooth_integral(x / 2, y / 2)) <= sawtooth_bound(x, y) + 1e-10

    def test_real_axis_bound(self):
        assert sawtooth_bound(0.5, 0.0) == 2.0


class TestDigammaBounds:
    """Test suite for psi_diff_bound and its ingredients."""

    @pytest.fixture
    def large_box(self):
        return DigammaBoundParams(x0=1.0, x1=3.0, y0=50.0, kappa=KAPPA, delta=DELTA)

    def test_large_y_bound_holds(self, large_box):
        # Arrange
        rng = np.random.default_rng(1)
        xs = rng.uniform(large_box.x0, large_box.x1, 100)
        ys = rng.uniform(large_box.y0, 5000.0, 100)
        bound = psi_diff_bound(large_box, "large_y")

        # Act & Assert
        for x, y in zip(xs, ys):
            value = psi_kappa_delta(float(x), float(y), KAPPA, DELTA)
            assert value <= (1 - KAPPA) * math.log(y / 2) + bound + 1e-9

    def test_small_y_bound_holds(self):
        p = DigammaBoundParams(x0=1.0, x1=3.0, y0=10.0, kappa=KAPPA, delta=DELTA)
        bound = psi_diff_bound(p, "small_y")

        for x in np.linspace(p.x0, p.x1, 5):
            for y in np.linspace(0.1, 9.9, 9):
                value = psi_kappa_delta(float(x), float(y), KAPPA, DELTA)
                assert value <= R1(float(x), float(y), KAPPA, DELTA) + 1e-9
                assert R1(float(x), float(y), KAPPA, DELTA) <= bound + 1e-12

    def test_r3_formula(self):
        T0, sigma0 = 3330657430.697, 0.99555
        x0 = sigma0 + 2

        expected = (1 / x0 + KAPPA / (x0 + DELTA)) / (3 * T0) + (9 + KAPPA * (3 + DELTA) ** 2) / (2 * T0**2)

        assert r3(x0, 3.0, T0, KAPPA, DELTA) == pytest.approx(expected, rel=1e-14)

    def test_kappa_zero_collapse(self):
        assert r2(1.0, 2.0, 10.0, 0.0, DELTA) == pytest.approx(
            0.5 * math.log((2 + DELTA) ** 2 / 100 + 1) + math.atan(10 / 2) / 10
        )

    def test_large_regime_takes_minimum(self, large_box):
        args = (large_box.x0, large_box.x1, large_box.y0, KAPPA, DELTA)

        assert psi_diff_bound(large_box, "large_y") == min(r2(*args), r3(*args))
        assert psi_diff_bound(large_box, "small_y") == r1(*args)

    def test_unknown_regime(self, large_box):
        with pytest.raises(ParameterError):
            psi_diff_bound(large_box, "medium_y")

    @pytest.mark.parametrize("values", [
        dict(x0=2.0, x1=1.0, y0=10.0, kappa=0.1, delta=0.5),
        dict(x0=1.0, x1=2.0, y0=10.0, kappa=0.9, delta=0.5),
        dict(x0=1.0, x1=2.0, y0=10.0, kappa=0.1, delta=1.5),
    ])
    def test_invalid_box(self, values):
        with pytest.raises(ParameterError):
            DigammaBoundParams(**values)


class TestU0:
    """Test suite for the bounds on |Re psi(1/4 + iT/2)|."""

    def test_printed_values(self):
        assert U0(0.0) == pytest.approx(2 * math.log(2) + 2 - math.pi / 2, abs=1e-12)
        assert U0(0.0) == pytest.approx(1.81550, abs=1e-5)
        assert U0(1.0) == pytest.approx(1.88481, abs=1e-5)

    @pytest.mark.parametrize("T", [0.1, 0.4, 0.5, 1.0, 5.0, 50.0])
    def test_majorant_property(self, T):
        assert abs(re_digamma(0.5, T)) <= U0_majorant(T) + 1e-9

    def test_majorant_on_random_heights(self):
        heights = np.random.default_rng(2).uniform(0.0, 100.0, 500)

        for T in heights:
            assert abs(re_digamma(0.5, float(T))) <= U0_majorant(float(T)) + 1e-9

    def test_printed_branch_is_not_a_majorant_near_zero(self):
        """The first printed branch sits below |psi(1/4)|."""
        assert abs(re_digamma(0.5, 0.0)) == pytest.approx(PSI_QUARTER_ABS, abs=1e-8)
        assert U0(0.0) < PSI_QUARTER_ABS
        assert U0_majorant(0.0) == PSI_QUARTER_ABS

    def test_array_version_matches_scalar(self):
        heights = np.array([0.0, 0.3, 0.5, 2.0, 80.0])

        expected = [U0_majorant(float(T)) for T in heights]

        assert U0_array(heights) == pytest.approx(expected)
        assert U0_array(heights, majorant=False) == pytest.approx([U0(float(T)) for T in heights])
