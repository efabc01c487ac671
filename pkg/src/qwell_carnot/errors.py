"""Exception hierarchy.

Anything deriving from :class:`NumericalError` is a numeric failure (CLI exit
code 3); every other :class:`QWellError` is a usage or domain problem (exit
code 2).
"""


class QWellError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(QWellError, ValueError):
    """An argument lies outside the domain of the operation."""


class SingularityError(DomainError):
    """The formula has a pole at the requested argument."""


class OutOfRangeError(DomainError):
    """A width lies outside the interval swept by a process leg."""


class DegenerateCycleError(DomainError):
    """The cycle geometry leaves a leg empty or inverted."""


class UnsupportedModeError(QWellError, ValueError):
    """The operation is not defined for the given lambda mode."""


class ConfigError(QWellError, ValueError):
    """A numerical configuration value is out of bounds."""


class BracketError(QWellError, ValueError):
    """The root-finding bracket does not contain a sign change."""


class NumericalError(QWellError, ArithmeticError):
    """A numeric kernel failed (non-finite values, no convergence)."""


class NonConvergenceError(NumericalError):
    """An iterative kernel exhausted its budget.

    ``interval`` holds the sub-interval on which the failure happened, when
    one is meaningful.
    """

    def __init__(self, message, interval=None):
        super().__init__(message)
        self.interval = interval
