"""Exception hierarchy for the metaplectic package."""


class MetaplecticError(Exception):
    """Base class for all errors raised by this package."""


class ZeroInput(MetaplecticError, ValueError):
    pass


class DepthTooSmall(MetaplecticError, ValueError):
    pass


class NotStabilized(MetaplecticError, ArithmeticError):
    pass


class UnsupportedPrime(MetaplecticError, ValueError):
    pass


class NotSimilitude(MetaplecticError, ValueError):
    pass


class ShapeMismatch(MetaplecticError, ValueError):
    pass


class UnsupportedCocyclePath(MetaplecticError):
    """No closed-form rule covers the requested pair of elements."""


class ConjugatorNotOmegaZero(MetaplecticError, ValueError):
    pass


class UnsupportedRamification(MetaplecticError, ValueError):
    pass


class UnknownSuite(MetaplecticError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""
