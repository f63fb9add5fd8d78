"""Exception types shared across the package."""


class BohrError(Exception):
    """Base class for every error raised by this package."""


class DomainError(BohrError, ValueError):
    """An argument lies outside the domain where the quantity is defined."""


class OrderMismatchError(BohrError, ValueError):
    """Two truncated series of different order were combined."""


class UnknownProblemError(BohrError, KeyError):
    """A problem or figure id is not in the catalog."""

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class BracketError(BohrError):
    """The supplied interval does not bracket the target value."""


class NumericError(BohrError, ArithmeticError):
    """A function produced NaN where a real value was needed."""
