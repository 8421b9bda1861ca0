"""Exception types shared across the package."""


class CritfiltError(Exception):
    """Base class for all errors raised by critfilt."""


class ZeroPolynomial(CritfiltError, ValueError):
    pass


class MixedRadicand(CritfiltError, ValueError):
    pass


class ParameterMismatch(CritfiltError, ValueError):
    """Two parametric values use different parameter symbols."""


class ConstantMap(CritfiltError, ValueError):
    pass


class UnresolvedBlock(CritfiltError):
    """A factor of degree >= 3 whose roots could not be located exactly."""

    def __init__(self, message, block=None):
        super().__init__(message)
        self.block = block


class DegenerateParameter(CritfiltError, ValueError):
    pass


class DegenerateValue(CritfiltError, ValueError):
    pass


class CoincidentPoints(CritfiltError, ValueError):
    pass


class OutOfRange(CritfiltError, ValueError):
    pass


class DegreeMismatch(CritfiltError):
    pass


class VZeroPath(CritfiltError):
    """fiber_polynomial was asked for a map that factors through x."""


class BookkeepingFailure(CritfiltError):
    pass


class NotFourValues(CritfiltError):
    pass


class DegreeBudgetExceeded(CritfiltError):
    pass


class DegenerateSample(CritfiltError):
    pass


class MalformedTuple(CritfiltError, ValueError):
    pass


class WrongArity(CritfiltError, ValueError):
    pass


class BudgetExceeded(CritfiltError):
    pass


class ExprSyntaxError(CritfiltError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at offset {position}")
        self.position = position


class MultipleVariables(CritfiltError, ValueError):
    pass
