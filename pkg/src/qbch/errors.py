"""Exception hierarchy shared by every module of the package."""


class QBCHError(ValueError):
    pass


class NotPrime(QBCHError):
    pass


class DivisionByZero(QBCHError, ZeroDivisionError):
    pass


class ZeroElement(QBCHError):
    pass


class FieldMismatch(QBCHError):
    pass


class DimensionMismatch(QBCHError):
    pass


class BadParameters(QBCHError):
    pass


class IncompatibleOrder(BadParameters):
    pass


class NotCoprime(BadParameters):
    pass


class DegreeTooHigh(QBCHError):
    pass


class TooLarge(QBCHError):
    pass


class NotInBaseField(QBCHError):
    pass


class InvalidRoot(QBCHError):
    pass


class LengthMismatch(QBCHError):
    pass


class ShapeMismatch(QBCHError):
    pass


class EmptyCode(QBCHError):
    pass


class NotScalarGamma(QBCHError):
    pass


class DecodingFailure(QBCHError):
    """The received word could not be decoded within the decoder's radius."""


class AmbiguousRoot(DecodingFailure):
    pass


class NoSolution(QBCHError):
    pass


class InternalError(QBCHError):
    pass
