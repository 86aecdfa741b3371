"""
Tests for the kappa-delta positivity machinery.
"""

import dataclasses
from unittest.mock import patch

import numpy as np
import pytest

from zeta_region.bounds.positivity import (
    D_pair_grid,
    D_pair_positivity_sample,
    PositivityParams,
    kappa1,
    kappa2,
    kappa3,
    kappa_window,
    solve_delta_kappa,
    stechkin_inequality_check,
)
from zeta_region.bounds.remainder import RegionParams
from zeta_region.exceptions import ParameterError, WindowViolation


class TestSolveDeltaKappa:
    """Test suite for solve_delta_kappa."""

    def test_first_step(self, step1_params):
        assert step1_params.delta == pytest.approx(0.620626, abs=1e-5)
        assert step1_params.kappa == pytest.approx(0.438904, abs=1e-5)

    def test_last_step(self, step6_params):
        assert step6_params.delta == pytest.approx(0.620763, abs=1e-5)
        assert step6_params.kappa == pytest.approx(0.438478, abs=1e-5)

    def test_crossing_balances_both_bounds(self, step1_params):
        p = step1_params.positivity()

        delta, kappa = solve_delta_kappa(p)

        assert kappa2(delta, p) == pytest.approx(kappa3(delta, p), abs=1e-10)
        assert kappa == kappa2(delta, p)

    def test_small_eta_limits(self, kernel):
        p = PositivityParams(eta0=0.0, sigma0=0.999, kernel=kernel)

        assert kappa2(0.6, p) == pytest.approx(1 / (1 + 2 * 0.6))
        assert kappa3(0.6, p) == pytest.approx(1 / (1 / 0.6 + 1 / 1.6))

    def test_window_violation(self, step1_params):
        # Arrange
        p = step1_params.positivity()

        # Act & Assert
        with patch("zeta_region.bounds.positivity.kappa_window", return_value=(0.5, 0.6)):
            with pytest.raises(WindowViolation) as excinfo:
                solve_delta_kappa(p)
        assert excinfo.value.kappa == pytest.approx(0.438904, abs=1e-5)

    def test_delta_outside_range(self, step1_params):
        with pytest.raises(ParameterError):
            kappa2(0.05, step1_params.positivity())

    def test_kappa1_is_a_fraction(self, step1_params):
        value = kappa1(step1_params.delta, step1_params.positivity())

        assert 0 < value < 1

    @pytest.mark.parametrize("params_name", ["step1_params", "step6_params"])
    def test_contour_side_dominates_kappa2(self, request, params_name):
        params = request.getfixturevalue(params_name)
        positivity = params.positivity()

        assert kappa2(params.delta, positivity) <= kappa1(params.delta, positivity)


class TestKappaWindow:
    """Test suite for kappa_window."""

    def test_solved_kappa_inside(self, step1_params):
        lower, upper = kappa_window(step1_params.delta)

        assert lower <= step1_params.kappa <= upper

    def test_bounds(self):
        lower, upper = kappa_window(0.6)

        assert lower == pytest.approx(1 / (0.6**-3 + 1.6**-3))
        assert upper == pytest.approx(1 / (1 / 0.6 + 1 / 1.59))


class TestPositivityParams:
    """Test suite for PositivityParams validation."""

    @pytest.mark.parametrize("eta0, sigma0", [(-1e-3, 0.995), (0.02, 0.995), (5e-3, 0.98), (5e-3, 1.0)])
    def test_out_of_range(self, kernel, eta0, sigma0):
        with pytest.raises(ParameterError):
            PositivityParams(eta0=eta0, sigma0=sigma0, kernel=kernel)

    def test_low_contour_rejected(self, kernel):
        with pytest.raises(ParameterError):
            PositivityParams(eta0=5e-3, sigma0=0.995, kernel=kernel, y0=5.0)


class TestStechkin:
    """Test suite for the Stechkin inequality check."""

    def test_random_samples(self):
        rng = np.random.default_rng(0)

        for beta, y, sigma in zip(rng.uniform(0.5, 1.0, 500), rng.uniform(1e-3, 50.0, 500),
                                  1 + rng.uniform(1e-6, 1.0, 500)):
            assert stechkin_inequality_check(float(beta), float(y), float(sigma))

    @pytest.mark.parametrize("beta, y, sigma", [(0.4, 1.0, 1.5), (0.7, 0.0, 1.5), (0.7, 1.0, 1.0)])
    def test_invalid_arguments(self, beta, y, sigma):
        with pytest.raises(ParameterError):
            stechkin_inequality_check(beta, y, sigma)


class TestDPair:
    """Test suite for D-pair positivity."""

    def test_small_grid_passes_at_solved_values(self, step1_params):
        assert D_pair_grid(step1_params, n_beta=3, n_y=5) == []

    def test_single_sample(self, step1_params):
        assert D_pair_positivity_sample(0.75, 2.0, step1_params)

    def test_beta_beyond_sigma0_rejected(self, step1_params):
        with pytest.raises(ParameterError):
            D_pair_positivity_sample(0.9999, 2.0, step1_params)

    def test_failures_are_reported_as_witnesses(self, step1_params):
        # Arrange
        params = dataclasses.replace(step1_params, kappa=0.6)

        # Act
        with patch("zeta_region.bounds.positivity.D_pair_value", side_effect=lambda beta, y, *args: -1.0 if y > 10 else 1.0):
            failures = D_pair_grid(params, n_beta=2, n_y=4)

        # Assert
        assert len(failures) == 4
        assert all(y > 10 and value == -1.0 for _, y, value in failures)

    def test_injected_kappa_survives_build(self, kernel):
        params = RegionParams.build(9.645908801, 5.97484, kernel, kappa=0.3)

        assert params.kappa == 0.3
        assert params.delta == pytest.approx(0.620626, abs=1e-5)
