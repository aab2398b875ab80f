"""Exception hierarchy shared by every module of the package."""


class MoilfpError(Exception):
    """Base class for all solver errors."""


class ParseError(MoilfpError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(MoilfpError):
    """Instance data violates a structural requirement."""


class EmptyDomain(ValidationError):
    pass


class UnboundedDomain(ValidationError):
    pass


class NonpositiveDenominator(ValidationError):
    def __init__(self, index, minimum):
        self.index = index
        self.minimum = minimum
        which = "psi" if index is None else f"criterion {index + 1}"
        super().__init__(f"denominator of {which} reaches {minimum} <= 0 on the feasible region")


class NonIntegralConstraintData(ValidationError):
    pass


class DimensionMismatch(MoilfpError, ValueError):
    pass


class LengthMismatch(DimensionMismatch):
    pass


class ZeroDenominator(MoilfpError, ZeroDivisionError):
    pass


class NotNonbasic(MoilfpError, ValueError):
    pass


class EmptyDelta(MoilfpError, ValueError):
    pass


class NoFractionalCoordinate(MoilfpError, ValueError):
    pass


class TooLarge(MoilfpError):
    pass


class InvariantError(MoilfpError, AssertionError):
    """A debug-mode invariant check failed."""
