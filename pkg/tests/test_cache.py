"""
Tests for the kernel constants cache.
"""

import json
import os
import time
from unittest.mock import patch

import pytest

from zeta_region.utils.cache import ConstantsCache

CONSTANTS = {"theta": 1.848, "g1": 147.84112, "m": 1322.86625}


class TestConstantsCache:
    """Test suite for ConstantsCache."""

    @pytest.fixture
    def cache(self, tmp_path):
        return ConstantsCache(cache_dir=str(tmp_path / "cache"), ttl=60)

    def test_creates_directory(self, cache):
        assert os.path.isdir(cache.cache_dir)

    def test_miss_then_hit(self, cache):
        # Arrange
        assert cache.get(1.848, 10000, 1e-11) is None

        # Act
        cache.set(1.848, 10000, 1e-11, CONSTANTS)

        # Assert
        assert cache.get(1.848, 10000, 1e-11) == CONSTANTS

    def test_key_depends_on_every_parameter(self, cache):
        cache.set(1.848, 10000, 1e-11, CONSTANTS)

        assert cache.get(1.849, 10000, 1e-11) is None
        assert cache.get(1.848, 5000, 1e-11) is None
        assert cache.get(1.848, 10000, 1e-10) is None

    def test_expired_entry_is_ignored(self, cache):
        cache.set(1.848, 10000, 1e-11, CONSTANTS)

        with patch("zeta_region.utils.cache.time.time", return_value=time.time() + 120):
            assert cache.get(1.848, 10000, 1e-11) is None

    def test_corrupt_file_is_a_miss(self, cache):
        key = cache._get_cache_key(1.848, 10000, 1e-11)
        with open(cache._get_cache_file(key), "w") as f:
            f.write("{not json")

        assert cache.get(1.848, 10000, 1e-11) is None

    def test_stored_file_records_inputs(self, cache):
        cache.set(1.848, 10000, 1e-11, CONSTANTS)

        key = cache._get_cache_key(1.848, 10000, 1e-11)
        with open(cache._get_cache_file(key)) as f:
            data = json.load(f)

        assert data["theta"] == 1.848
        assert data["grid_points"] == 10000
        assert data["constants"] == CONSTANTS

    def test_clear_everything(self, cache):
        cache.set(1.848, 10000, 1e-11, CONSTANTS)
        cache.set(1.9, 10000, 1e-11, CONSTANTS)

        assert cache.clear(max_age=0) == 2
        assert cache.get(1.848, 10000, 1e-11) is None

    def test_clear_keeps_fresh_entries(self, cache):
        cache.set(1.848, 10000, 1e-11, CONSTANTS)

        assert cache.clear() == 0
        assert cache.get(1.848, 10000, 1e-11) == CONSTANTS
