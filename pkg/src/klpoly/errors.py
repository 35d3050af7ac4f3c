"""Exception types shared across the package."""


class KLError(Exception):
    pass


class InvalidMatrix(KLError, ValueError):
    pass


class CapExceeded(KLError):
    pass


class BadGeneratorIndex(KLError, ValueError):
    pass


class BadDescriptor(KLError, ValueError):
    pass


class ZeroPolynomial(KLError, ValueError):
    pass


class PolynomialParseError(KLError, ValueError):
    pass


class NotComparable(KLError, ValueError):
    """Raised when an operation needs y <= x in Bruhat order and it fails."""


class ChainViolation(NotComparable):
    pass


class InternalDegreeViolation(KLError, AssertionError):
    """A computed KL polynomial broke its degree bound; this is a bug."""


class GroupMismatch(KLError, ValueError):
    pass


class CacheFormatError(KLError, ValueError):
    pass
