"""Exception hierarchy shared by every module of the package."""


class ExactLAError(Exception):
    """Base class for all library errors."""


class NotDivisible(ExactLAError, ArithmeticError):
    """An exact division was requested but the divisor does not divide."""


class DivisionByZero(ExactLAError, ZeroDivisionError):
    pass


class BothZero(ExactLAError, ValueError):
    pass


class EmptyInput(ExactLAError, ValueError):
    pass


class ZeroElement(ExactLAError, ValueError):
    pass


class ExhaustedCandidates(ExactLAError, RuntimeError):
    """Every candidate prime element was rejected."""


class DimensionMismatch(ExactLAError, ValueError):
    pass


class BadCut(ExactLAError, ValueError):
    pass


class NotSquare(ExactLAError, ValueError):
    pass


class SingularMatrix(ExactLAError, ValueError):
    pass


class InconsistentSystem(ExactLAError, ValueError):
    pass


class ZeroRHS(ExactLAError, ValueError):
    pass


class NoReconstruction(ExactLAError, ValueError):
    """Rational reconstruction failed; usually the lifting precision is too low."""


class RetryLimit(ExactLAError, RuntimeError):
    pass


class WitnessInvalid(ExactLAError, ValueError):
    pass


class PreconditionViolated(ExactLAError, ValueError):
    pass


class ParseError(ExactLAError, ValueError):
    pass
