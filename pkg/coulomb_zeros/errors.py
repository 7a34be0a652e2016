"""Exception hierarchy for the zero computations."""


class CoulombZerosError(Exception):
    """Base class of every error raised by the package."""


class DomainError(CoulombZerosError, ValueError):
    """An argument lies outside the domain of the operation."""


class IndexTooSmallError(DomainError):
    """No admissible rho0 > max(eta, 0) exists for the requested zero index."""

    def __init__(self, n: int, message: str | None = None):
        self.n = n
        super().__init__(message or f"index too small for these parameters (n={n})")


class NumericalError(CoulombZerosError, ArithmeticError):
    """An iteration failed to converge or a tolerance could not be met."""


class GuessTooFarError(NumericalError):
    """The target function has no sign change around the starting guess."""


class IndexVerificationError(NumericalError):
    """Sign-change counting disagrees with the number of refined zeros."""

    def __init__(self, expected: int, counted: int, interval: tuple[float, float]):
        self.expected = expected
        self.counted = counted
        self.interval = interval
        super().__init__(
            f"counted {counted} sign changes on ({interval[0]:.6g}, {interval[1]:.6g}]"
            f" but refined {expected} zeros"
        )
