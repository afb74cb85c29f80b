"""Exception hierarchy.

Everything derives from ``ValueError`` except the internal consistency error,
which signals a bug (or a precision collapse) rather than bad input.
"""


class IsoWirtingerError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(IsoWirtingerError, ValueError):
    """An argument is outside its admissible range."""


class OrderOutOfRangeError(ParameterError):
    """The order ``m`` exceeds ``floor(k/2)`` (or ``floor(k/2) - 1``)."""


class DimensionMismatchError(IsoWirtingerError, ValueError):
    """Two polygons (or sequences) have a different number of entries."""


class HypothesisViolation(IsoWirtingerError, ValueError):
    """The input does not satisfy a theorem's hypothesis (centroid, speed, ...)."""


class OrientationError(HypothesisViolation):
    """A positively oriented curve was required."""


class DegenerateCurveError(HypothesisViolation):
    """The curve has (numerically) vanishing speed somewhere."""


class CoefficientConsistencyError(IsoWirtingerError, RuntimeError):
    """A coefficient-table identity failed its runtime self-check."""
