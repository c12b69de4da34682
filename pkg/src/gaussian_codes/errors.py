class GaussianCodeError(Exception):
    """Base class for every error raised by this package."""


class InvalidPrime(GaussianCodeError, ValueError):
    pass


class WrongModulusShape(GaussianCodeError, ValueError):
    pass


class NoGenerator(WrongModulusShape):
    """The unit group of the ring is not cyclic."""


class NotAUnit(GaussianCodeError, ArithmeticError):
    pass


class RingMismatch(GaussianCodeError, ValueError):
    pass


class NonUnitLeadingCoefficient(GaussianCodeError, ArithmeticError):
    pass


class IdentityViolation(GaussianCodeError, ValueError):
    """A code whose generator and check polynomials do not multiply to x^n - lambda."""


class SyndromeCollision(GaussianCodeError):
    def __init__(self, first, second, syndrome):
        self.first = first
        self.second = second
        self.syndrome = syndrome
        super().__init__(
            f"errors {list(map(str, first))} and {list(map(str, second))} share syndrome {syndrome}"
        )


class Uncorrectable(GaussianCodeError):
    """Raised by decode when the syndrome is not in the coset-leader table."""

    def __init__(self, syndrome):
        self.syndrome = syndrome
        super().__init__(f"uncorrectable: syndrome {syndrome} has no coset leader")


class TooLarge(GaussianCodeError, ValueError):
    pass
