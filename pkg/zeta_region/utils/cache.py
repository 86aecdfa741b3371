"""
Disk cache for theta-dependent kernel constants.
"""

import hashlib
import json
import logging
import os
import time
from pathlib import Path

from .. import config

logger = logging.getLogger("zeta_region.cache")


class ConstantsCache:
    """
    Cache of SmoothingKernel constants so repeated theta values skip the
    supremum searches and the M-integrals.
    """

    def __init__(self, cache_dir=None, ttl=config.CACHE_TTL):
        """
        Initialize constants cache.

        Args:
            cache_dir (str, optional): Directory for cache files.
                                      Defaults to <app dir>/cache
            ttl (int, optional): Time-to-live for cache entries in seconds.
                                Defaults to 30 days.
        """
        if cache_dir is None:
            cache_dir = os.path.join(config.app_dir(), "cache")

        self.cache_dir = cache_dir
        self.ttl = ttl

        # Ensure cache directory exists
        os.makedirs(self.cache_dir, exist_ok=True)

        logger.debug(f"Constants cache initialized with directory: {cache_dir}, TTL: {ttl}s")

    def _get_cache_key(self, theta, grid_points, quad_tol):
        """
        Generate a cache key from the parameters the constants depend on.

        Args:
            theta (float): Kernel parameter
            grid_points (int): Supremum grid size
            quad_tol (float): Absolute quadrature tolerance

        Returns:
            str: Cache key
        """
        request_str = f"{theta!r}|{grid_points}|{quad_tol!r}"
        return hashlib.md5(request_str.encode()).hexdigest()

    def _get_cache_file(self, cache_key):
        return os.path.join(self.cache_dir, f"{cache_key}.json")

    def get(self, theta, grid_points, quad_tol):
        """
        Get cached constants if available and not expired.

        Args:
            theta (float): Kernel parameter
            grid_points (int): Supremum grid size
            quad_tol (float): Absolute quadrature tolerance

        Returns:
            dict or None: Cached constants if available, None otherwise
        """
        cache_key = self._get_cache_key(theta, grid_points, quad_tol)
        cache_file = self._get_cache_file(cache_key)

        if not os.path.exists(cache_file):
            logger.debug(f"Cache miss: {cache_key}")
            return None

        try:
            with open(cache_file, "r") as f:
                cache_data = json.load(f)

            if time.time() - cache_data.get("timestamp", 0) > self.ttl:
                logger.debug(f"Cache expired: {cache_key}")
                return None

            logger.debug(f"Cache hit: {cache_key} (theta = {theta!r})")
            return cache_data.get("constants")

        except Exception as e:
            logger.error(f"Error reading cache: {str(e)}")
            return None

    def set(self, theta, grid_points, quad_tol, constants):
        """
        Cache a constants record.

        Args:
            theta (float): Kernel parameter
            grid_points (int): Supremum grid size
            quad_tol (float): Absolute quadrature tolerance
            constants (dict): Values to store, as produced by SmoothingKernel.to_dict
        """
        cache_key = self._get_cache_key(theta, grid_points, quad_tol)
        cache_file = self._get_cache_file(cache_key)

        try:
            cache_data = {
                "timestamp": time.time(),
                "theta": theta,
                "grid_points": grid_points,
                "quad_tol": quad_tol,
                "constants": constants,
            }

            with open(cache_file, "w") as f:
                json.dump(cache_data, f, indent=2)

            logger.debug(f"Cached constants: {cache_key}")

        except Exception as e:
            logger.error(f"Error caching constants: {str(e)}")

    def clear(self, max_age=None):
        """
        Clear expired cache entries.

        Args:
            max_age (int, optional): Maximum age of cache entries to keep in seconds.
                                    If None, uses the instance TTL; 0 removes everything.

        Returns:
            int: Number of cache entries cleared
        """
        if max_age is None:
            max_age = self.ttl

        cleared_count = 0
        current_time = time.time()

        try:
            for cache_file in Path(self.cache_dir).glob("*.json"):
                try:
                    with open(cache_file, "r") as f:
                        cache_data = json.load(f)

                    if current_time - cache_data.get("timestamp", 0) >= max_age:
                        os.remove(cache_file)
                        cleared_count += 1

                except Exception as e:
                    logger.error(f"Error processing cache file {cache_file}: {str(e)}")

            logger.info(f"Cleared {cleared_count} cached constant sets")
            return cleared_count

        except Exception as e:
            logger.error(f"Error clearing cache: {str(e)}")
            return 0
