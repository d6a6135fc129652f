"""Exception types shared across the package."""


class AntifourierError(Exception):
    """Base class for all package errors."""


class InvalidInterval(AntifourierError):
    """Integration bounds do not satisfy a < b."""


class NonConvergence(AntifourierError):
    """A quadrature did not reach the requested absolute tolerance.

    Attributes carry diagnostic context: ``achieved`` (best error estimate),
    ``target`` (requested tolerance), and, when raised from a coefficient
    computation, the harmonic ``index`` and kernel ``kind`` ("cos"/"sin").
    """

    def __init__(self, message, *, achieved=None, target=None, index=None, kind=None):
        super().__init__(message)
        self.achieved = achieved
        self.target = target
        self.index = index
        self.kind = kind


class OutOfDomain(AntifourierError):
    """Evaluation point lies outside [-L, L]."""


class ParseError(AntifourierError):
    """A function-spec string does not match the grammar.

    ``position`` is the 0-based character offset of the offending token.
    """

    def __init__(self, message, *, position=0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ValidationError(AntifourierError):
    """Structurally valid input violates an invariant."""


class OrderExceedsTruncation(AntifourierError):
    """Requested partial-sum order exceeds the stored truncation order."""


class IncompatibleData(AntifourierError):
    """Initial data is incompatible with the boundary conditions."""


class NegativeTime(AntifourierError):
    """The heat solution is not evaluated at t < 0."""


class InsufficientData(AntifourierError):
    """Not enough usable coefficients for a decay fit."""
