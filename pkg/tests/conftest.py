"""
Shared fixtures for the test suite.
"""

import pytest

from zeta_region.bounds.remainder import RegionParams
from zeta_region.config import DEFAULT_THETA, PUBLISHED_R_SCHEDULE, R_INIT
from zeta_region.kernel import KernelFactory
from zeta_region.region import trig_poly_default


@pytest.fixture(scope="session")
def kernel():
    """Kernel at theta = 1.848, computed once without touching the disk cache."""
    return KernelFactory.create(DEFAULT_THETA, use_cache=False)


@pytest.fixture(scope="session")
def poly():
    return trig_poly_default()


@pytest.fixture(scope="session")
def step1_params(kernel):
    """First published step: R = 9.645908801, r = 5.97484."""
    return RegionParams.build(R_INIT, PUBLISHED_R_SCHEDULE[0], kernel)


@pytest.fixture(scope="session")
def step6_params(kernel):
    """Last published step: R = 5.701785245, r = 5.70174."""
    return RegionParams.build(5.701785245, PUBLISHED_R_SCHEDULE[-1], kernel)
