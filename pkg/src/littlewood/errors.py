"""Exception hierarchy shared by all modules."""


class LittlewoodError(Exception):
    """Base class for every error raised by this package."""


# partitions
class CellOutsideDiagram(LittlewoodError, ValueError):
    pass


class LengthExceeded(LittlewoodError, ValueError):
    pass


class NonEmptyTwoCore(LittlewoodError, ValueError):
    pass


# exact arithmetic
class DivisionByNonUnit(LittlewoodError, ZeroDivisionError):
    pass


class NonconvergentProduct(LittlewoodError, ValueError):
    pass


class SubstitutionError(LittlewoodError, ValueError):
    pass


# schur
class NotSymmetric(LittlewoodError, ValueError):
    pass


class NonterminatingRemainder(LittlewoodError, ArithmeticError):
    pass


# pfaffian
class OddDimension(LittlewoodError, ValueError):
    pass


class SingularDenominator(LittlewoodError, ZeroDivisionError):
    pass


# torus / koornwinder
class UnsupportedFamily(LittlewoodError, ValueError):
    pass


class GramSingular(LittlewoodError, ArithmeticError):
    pass


class NegativeExponentRemains(LittlewoodError, ArithmeticError):
    pass


class NoStabilization(LittlewoodError, RuntimeError):
    pass


# verify / cli
class BudgetExceeded(LittlewoodError, ValueError):
    pass


class UnknownIdentity(LittlewoodError, KeyError):
    pass


class NotAPowerSeries(LittlewoodError, ValueError):
    pass
