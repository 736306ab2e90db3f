"""Exception types shared across the package.

Every exception raised on purpose by this package derives from
:class:`ParampError`, so callers can catch one base class.  The CLI maps
subfamilies onto exit codes (configuration -> 1, numerics -> 2, I/O -> 3).
"""

from __future__ import annotations


class ParampError(Exception):
    """Base class for all package errors."""


class NonPositiveCoupling(ParampError):
    """Cavity linewidth (or another strictly positive rate) was <= 0."""


class OutOfStabilityRange(ParampError):
    """Pump strength at or beyond the parametric instability threshold."""


class NonPositivePower(ParampError):
    """A pump tone power was <= 0 where a positive value is required."""


class ToleranceNotMet(ParampError):
    """Adaptive quadrature exhausted its subdivision budget.

    Carries the best available estimate so callers can inspect how far
    the run got before giving up.
    """

    def __init__(self, message, value=None, error_estimate=None):
        super().__init__(message)
        self.value = value
        self.error_estimate = error_estimate


class NonFiniteIntegrand(ParampError):
    """The integrand returned NaN or +-inf at a quadrature node."""


class TailNotConverged(ParampError):
    """A mode sum hit its index cutoff before the tail criterion was met."""


class FilterExceedsBand(ParampError):
    """Filter support reaches at or below the lower edge of the band."""


class CutoffInsufficient(ParampError):
    """Fock-space cutoff leaves more than the allowed probability mass."""


class OrderUnsupported(ParampError):
    """Moment order outside the implemented range (k in {1, 2, 3})."""


class ZeroMean(ParampError):
    """Fano factor requested for a vanishing mean count."""


class ConfigParse(ParampError):
    """Malformed configuration file or inconsistent CLI options."""


class OutputIO(ParampError):
    """Writing a sweep or figure output file failed."""
