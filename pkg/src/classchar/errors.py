"""Exception types shared across the package."""


class ClasscharError(Exception):
    """Base class for all package-specific errors."""


class NonPrime(ClasscharError):
    pass


class EnvelopeExceeded(ClasscharError):
    pass


class WrongCharacteristic(ClasscharError):
    pass


class ZeroPolynomial(ClasscharError):
    pass


class DimensionMismatch(ClasscharError):
    pass


class InconsistentSpec(ClasscharError):
    pass


class NotAnIsometry(ClasscharError):
    pass


class CapExceeded(ClasscharError):
    """Enumeration would exceed the configured cap; carries the exact order."""

    def __init__(self, message, order=None):
        super().__init__(message)
        self.order = order


class GuardExceeded(ClasscharError):
    pass


class NoSuitablePrime(ClasscharError):
    pass


class Inconsistent(ClasscharError):
    """Internal consistency failure (a bug, never user error)."""


class SteinbergNotFound(ClasscharError):
    pass


class OutOfRange(ClasscharError):
    pass


class UnsupportedFamily(ClasscharError):
    pass
