"""Exception types raised across the library.

Every error is a subclass of :class:`CausalKitError`, which itself derives
from ``ValueError`` so that callers treating bad inputs generically keep
working.
"""


class CausalKitError(ValueError):
    """Base class for all library-specific errors."""


class TooShort(CausalKitError):
    """A series is shorter than the operation requires."""


class NonPositivePrice(CausalKitError):
    """A price sample is zero or negative; log returns are undefined."""


class WindowTooLarge(CausalKitError):
    """The rolling window length exceeds the series length."""


class LengthMismatch(CausalKitError):
    """Two inputs that must have equal length do not."""


class ConstantSeries(CausalKitError):
    """A series has zero variance where variance is required."""


class DegenerateDenominator(CausalKitError):
    """A normalization denominator is zero (constant inputs)."""


class TooShortForEmbedding(CausalKitError):
    """Not enough samples to build the requested delay embedding."""


class DegeneratePrediction(CausalKitError):
    """Cross-map predictions are constant; skill is undefined."""


class OutOfRange(CausalKitError):
    """A scalar argument lies outside its documented bounds."""


class ConstantHistory(CausalKitError):
    """The z-score history has zero standard deviation."""


class NegativeVariance(CausalKitError):
    """A substituted co-dependence matrix produced a negative quadratic form."""


class InfeasibleTarget(CausalKitError):
    """A target return lies outside the attainable range."""


class NoExcessReturn(CausalKitError):
    """No asset offers a mean return above the risk-free rate."""


class MisalignedWindows(CausalKitError):
    """Two measure series were computed on different window grids."""


class Diverged(CausalKitError):
    """A simulated trajectory left its admissible range."""


class ParseError(CausalKitError):
    """An input file could not be parsed.

    Attributes:
        row: 1-based data row number of the offending cell, if known.
        column: column name or index of the offending cell, if known.
    """

    def __init__(self, message, row=None, column=None):
        super().__init__(message)
        self.row = row
        self.column = column


class EmptyInput(CausalKitError):
    """An input file contains no usable data."""
