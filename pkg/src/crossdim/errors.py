"""Exception types raised by crossdim."""


class CrossDimError(Exception):
    """Base class for all library errors."""


class ShapeError(CrossDimError, ValueError):
    """Operands have shapes the requested operation cannot accept."""


class LatticeOverflow(CrossDimError, OverflowError):
    """An lcm exceeded the supported integer range."""


class NotInvertible(CrossDimError, ArithmeticError):
    """An extended-ring element has no inverse.

    ``criterion`` carries the value of the invertibility test that failed
    (zero or numerically indistinguishable from it).
    """

    def __init__(self, message: str, criterion: float | None = None):
        super().__init__(message)
        self.criterion = criterion


class NonConvergent(CrossDimError, ArithmeticError):
    """A truncated series did not reach its tolerance."""


class DimensionNotInvariant(CrossDimError, ValueError):
    """A continuous-time system changes state dimension."""
