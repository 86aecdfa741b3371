"""
Exception hierarchy for the zero-free region engine.
"""


class ZetaRegionError(Exception):
    """Base class for every error raised by the package."""


class ParameterError(ZetaRegionError, ValueError):
    """An input violates a documented invariant."""


class ConfigError(ParameterError):
    """A configuration file or command-line override could not be parsed."""


class NumericalError(ZetaRegionError):
    """A numerical routine could not deliver the requested accuracy."""


class SubdivisionLimit(NumericalError):
    """Adaptive quadrature exhausted its subdivision budget."""

    def __init__(self, message, value=None, error_estimate=None):
        super().__init__(message)
        self.value = value
        self.error_estimate = error_estimate


class TailDivergence(NumericalError):
    """The supplied tail bound never dropped below the requested tolerance."""


class NoSignChange(NumericalError):
    """Bisection was called on a bracket without a sign change."""


class OrderUnsupported(ParameterError):
    """Requested kernel derivative order has no closed form."""


class NonpositiveRealPart(ParameterError):
    """The digamma identity needs a strictly positive real part."""


class DomainBelowT1(ParameterError):
    """Zero-counting envelopes are only valid from the first zero ordinate."""


class DomainTooSmall(ParameterError):
    """The tail sum c30(t) needs t > t1 + 1."""


class OmegaOutOfRange(ParameterError):
    """omega = r log T0 / (R log(4 T0 + t0)) left the interval [0, 1]."""


class WindowViolation(ZetaRegionError):
    """The solved (kappa, delta) pair is outside the admissible window."""

    def __init__(self, message, delta=None, kappa=None):
        super().__init__(message)
        self.delta = delta
        self.kappa = kappa


class CertificateFailure(ZetaRegionError):
    """The remainder cubic is not negative at eta0."""

    def __init__(self, message, cubic=None):
        super().__init__(message)
        self.cubic = cubic


class NonContraction(ZetaRegionError):
    """An automatic iteration step produced a larger constant than its input."""
