"""Exception types shared across the package."""


class SubresError(Exception):
    """Base class for all errors raised by this package."""


class NonSquareMatrix(SubresError):
    pass


class TooLarge(SubresError):
    pass


class UnknownColumnLabel(SubresError):
    pass


class ColumnMismatch(SubresError):
    pass


class ShapeMismatch(SubresError):
    pass


class ArityMismatch(SubresError):
    pass


class WrongCardinality(SubresError):
    pass


class DegreeTooHigh(SubresError):
    pass


class DuplicateMonomial(SubresError):
    pass


class InvalidSelection(SubresError):
    pass


class IndexOutOfRange(SubresError):
    pass


class BadOrderRange(SubresError):
    pass


class SingularVandermonde(SubresError):
    pass


class ExtraneousFactorVanishes(SubresError):
    pass


class NotHomogeneous(SubresError):
    pass


class ZeroLeadingCoefficient(SubresError):
    pass


class DuplicateAxisValue(SubresError):
    pass


class SingularTransform(SubresError):
    pass
