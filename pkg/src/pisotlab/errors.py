"""Exception hierarchy shared by all pisotlab modules."""


class PisotLabError(Exception):
    """Base class for every error raised by pisotlab."""


class PolynomialSyntaxError(PisotLabError, ValueError):
    pass


class NonIntegerCoefficient(PolynomialSyntaxError):
    pass


class EmptyInput(PolynomialSyntaxError):
    pass


class RootIsolationError(PisotLabError, ValueError):
    """The polynomial does not have exactly one real root in the given interval."""


class ContextMismatch(PisotLabError, ValueError):
    pass


class DivisionByZero(PisotLabError, ZeroDivisionError):
    pass


class NotGreaterThanOne(PisotLabError, ValueError):
    pass


class InvalidDigits(PisotLabError, ValueError):
    pass


class BoundNonPositive(PisotLabError, ValueError):
    pass


class TooFewPoints(PisotLabError, ValueError):
    pass


class AllZero(PisotLabError, ValueError):
    pass


class LambdaZero(PisotLabError, ValueError):
    pass


class OutOfRange(PisotLabError, ValueError):
    pass


class InvalidIFS(PisotLabError, ValueError):
    pass


class DeltaNotInB(PisotLabError, ValueError):
    pass


class IncompleteGraph(PisotLabError, ValueError):
    pass


class TooLarge(PisotLabError, ValueError):
    """Requested enumeration exceeds the configured size guard."""
