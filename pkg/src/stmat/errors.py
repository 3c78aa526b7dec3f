"""Exception types shared across the package."""


class StmatError(Exception):
    """Base class for all stmat errors."""


class ParseError(StmatError):
    """Malformed element token, polynomial text, or matrix file."""


class SizeCapError(StmatError):
    """An enumeration-based operation was asked to exceed its size cap."""


class PreconditionError(StmatError):
    """An operation's precondition does not hold for the given input."""


class NoCyclesError(PreconditionError):
    """Leading-cycle analysis was requested for an acyclic matrix."""


class EmptyCoreError(PreconditionError):
    """A core submatrix was requested for an empty vertex selection."""


class BoundExhaustedError(StmatError):
    """A bounded search ended before finding the guaranteed witness."""


class JordanDecompositionError(BoundExhaustedError):
    """No candidate decomposition verified within the search bounds.

    ``diagnostics`` lists, per candidate, which verifier check failed.
    """

    def __init__(self, message, diagnostics=()):
        super().__init__(message)
        self.diagnostics = list(diagnostics)
