"""
Tests for root finding and golden-section minimisation.
"""

import math

import pytest

from zeta_region.exceptions import NoSignChange, ParameterError
from zeta_region.numerics import bisect_bracket, find_root, minimize_scalar


class TestFindRoot:
    """Test suite for bisection."""

    def test_square_root_of_two(self):
        root = find_root(lambda x: x * x - 2, 0.0, 2.0, 1e-12)

        assert root == pytest.approx(math.sqrt(2), abs=1e-12)

    def test_decreasing_function(self):
        root = find_root(lambda x: math.cos(x), 0.0, 3.0, 1e-12)

        assert root == pytest.approx(math.pi / 2, abs=1e-12)

    def test_exact_zero_at_endpoint(self):
        assert find_root(lambda x: x - 1, 1.0, 2.0, 1e-9) == 1.0

    def test_no_sign_change(self):
        with pytest.raises(NoSignChange):
            find_root(lambda x: x * x + 1, -1.0, 1.0, 1e-9)

    def test_empty_bracket(self):
        with pytest.raises(ParameterError):
            find_root(lambda x: x, 1.0, 1.0, 1e-9)

    def test_bracket_keeps_left_sign(self):
        # Arrange
        def f(x):
            return 0.5 - x

        # Act
        lo, hi = bisect_bracket(f, 0.0, 1.3, 1e-6)

        # Assert
        assert hi - lo <= 1e-6
        assert f(lo) >= 0
        assert lo <= 0.5 <= hi


class TestMinimizeScalar:
    """Test suite for golden-section search."""

    def test_quadratic(self):
        x_star = minimize_scalar(lambda x: (x - 0.7) ** 2, 0.0, 2.0, 1e-9)

        assert x_star == pytest.approx(0.7, abs=1e-8)

    def test_infeasible_region_loses(self):
        """Points scored +inf never win against finite values."""
        # Arrange
        def f(x):
            return math.inf if x > 1.5 else (x - 1.2) ** 2

        # Act
        x_star = minimize_scalar(f, 0.0, 2.0, 1e-9)

        # Assert
        assert x_star == pytest.approx(1.2, abs=1e-8)

    def test_tiny_interval_returns_midpoint(self):
        assert minimize_scalar(lambda x: x, 1.0, 1.0 + 1e-12, 1e-9) == pytest.approx(1.0 + 5e-13)

    def test_bad_tolerance(self):
        with pytest.raises(ParameterError):
            minimize_scalar(lambda x: x, 0.0, 1.0, -1.0)
