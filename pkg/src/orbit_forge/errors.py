"""Exception types shared across the package."""


class ShapeMismatchError(ValueError):
    """Operands have incompatible shapes or scalar kinds."""


class UnsupportedScalarError(TypeError):
    """Operation is not defined for this scalar kind."""


class PreconditionError(ValueError):
    """Input violates a structural precondition (not skew, not in the group, ...)."""


class DomainError(ValueError):
    """Parameter outside the admissible domain."""


class NormalMetricError(ValueError):
    """x1 == x2: the check divides by x2 - x1; use the bi-invariant path instead."""


class RetractionFailedError(ArithmeticError):
    """Cayley retraction hit a singular pencil; callers should halve the step."""


class SearchAbortedError(RuntimeError):
    """Orbit search aborted; carries the partial report gathered so far."""

    def __init__(self, message, partial_report=None):
        super().__init__(message)
        self.partial_report = partial_report
