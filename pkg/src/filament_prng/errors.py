"""Exception types shared across the package.

Everything derives from ValueError so callers that only care about
"bad input" can catch a single class.
"""


class DomainError(ValueError):
    """Base class for contract violations raised by this package."""


class NotInvertible(DomainError):
    pass


class NotCoprime(DomainError):
    pass


class EvenModulus(DomainError):
    pass


class RangeError(DomainError):
    pass


class CompositeModulus(DomainError):
    pass


class WrongParityClass(DomainError):
    pass


class DegeneratePolygon(DomainError):
    pass


class IndexOutOfRange(DomainError, IndexError):
    pass


class BadParameters(DomainError):
    pass


class BadPrimes(DomainError):
    pass


class BadLags(DomainError):
    pass


class TooLarge(DomainError):
    pass


class BadDimension(DomainError):
    pass


class BadT(DomainError):
    pass


class EmptyInput(DomainError):
    pass
