"""Exception hierarchy.

Every error raised by the library derives from :class:`FlagGenusError` so
the CLI can map the whole family onto its usage-error exit code.
"""


class FlagGenusError(Exception):
    pass


class ValidationError(FlagGenusError, ValueError):
    """Input parameters violate a basic constraint (e.g. ``s >= 3``)."""


class RangeError(FlagGenusError, ValueError):
    """Parameters are valid but outside the range where a formula is defined."""


class PreconditionError(FlagGenusError, ValueError):
    """An operation-specific precondition failed (e.g. ``d`` not divisible by ``s``)."""


class FormulaMismatchError(FlagGenusError, ArithmeticError):
    """Two independent evaluations of the same quantity disagreed.

    This is a verification signal: the arguments are kept on the exception
    so the offending lattice point can be reported.
    """

    def __init__(self, message, **point):
        super().__init__(f"{message} at {point}")
        self.point = point


class DomainAuditError(FlagGenusError, ArithmeticError):
    """A piecewise formula selected a branch whose division is ill-posed."""

    def __init__(self, message, **point):
        super().__init__(f"{message} at {point}")
        self.point = point
