class WcoError(Exception):
    """Base class for every error raised by the toolkit."""


class InvalidParameter(WcoError, ValueError):
    """The inputs do not satisfy an operation's precondition."""


class NumericalFailure(WcoError, ArithmeticError):
    """A computation with valid inputs failed to produce a result."""


class InnerConstantTooLarge(InvalidParameter):
    pass


class BasePointOutsideDisk(InvalidParameter):
    pass


class ParameterOutsideDisk(InvalidParameter):
    pass


class NotSelfMap(InvalidParameter):
    pass


class PoleInsideDisk(InvalidParameter):
    pass


class GridDegenerate(InvalidParameter):
    pass


class InvalidWeights(InvalidParameter):
    pass


class DegenerateMap(InvalidParameter):
    pass


class BoundaryFixedPoint(InvalidParameter):
    pass


class ExpressionError(InvalidParameter):
    pass


class NotInvertible(NumericalFailure):
    pass


class DegenerateComposition(NumericalFailure):
    pass


class NoFixedPointFound(NumericalFailure):
    pass


class ConvergenceFailure(NumericalFailure):
    pass


class DerivativeZero(NumericalFailure):
    pass


class DerivativeNotContractive(NumericalFailure):
    pass


class NoConvergence(NumericalFailure):
    pass


class DivergentKoenigsNorm(NumericalFailure):
    pass
