"""
Factory for SmoothingKernel instances.
"""

import logging

from .. import config
from ..numerics import DEFAULT_TOLERANCES
from ..utils.cache import ConstantsCache
from .smoothing_kernel import SmoothingKernel, check_theta, kernel_constants

logger = logging.getLogger("zeta_region.kernel")


class KernelFactory:
    """
    Factory for creating kernels, memoised per theta for the life of the
    process and optionally backed by the on-disk ConstantsCache.
    """

    _kernels = {}

    @classmethod
    def create(cls, theta=config.DEFAULT_THETA, use_cache=True, tolerances=DEFAULT_TOLERANCES,
               grid_points=config.SUPREMUM_GRID_POINTS, cache=None):
        """
        Create (or reuse) the kernel for theta.

        Args:
            theta (float, optional): Kernel parameter. Defaults to 1.848.
            use_cache (bool, optional): Whether to consult the disk cache. Defaults to True.
            tolerances (ToleranceConfig, optional): Quadrature settings for fresh computations
            grid_points (int, optional): Supremum grid size
            cache (ConstantsCache, optional): Cache to use instead of the default one

        Returns:
            SmoothingKernel: Kernel constants for theta
        """
        theta = check_theta(theta)
        key = (theta, tolerances.quad_abs_tol, grid_points)
        if key in cls._kernels:
            return cls._kernels[key]

        kernel = None
        if use_cache:
            cache = cache or ConstantsCache()
            stored = cache.get(theta, grid_points, tolerances.quad_abs_tol)
            if stored is not None:
                try:
                    kernel = SmoothingKernel(**stored)
                except (TypeError, ValueError) as e:
                    logger.warning(f"Ignoring malformed cached constants for theta = {theta!r}: {str(e)}")

        if kernel is None:
            logger.debug(f"Computing kernel constants for theta = {theta!r}")
            kernel = kernel_constants(theta, tolerances, grid_points)
            if use_cache:
                cache.set(theta, grid_points, tolerances.quad_abs_tol, kernel.to_dict())

        cls._kernels[key] = kernel
        return kernel

    @classmethod
    def clear(cls):
        """Forget every memoised kernel."""
        cls._kernels.clear()
