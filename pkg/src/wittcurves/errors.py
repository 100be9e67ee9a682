"""Error types shared across the package.

The CLI maps these onto exit codes: parse problems exit 1, ValidationError
exits 2, everything else derived from CurveError exits 3.
"""


class CurveError(Exception):
    """Base class for all errors raised by wittcurves."""


class KindMismatchError(CurveError, TypeError):
    """Operands live in different division algebras or different series rings."""


class ValidationError(CurveError, ValueError):
    """A surface or curve description violates a structural invariant.

    Carries a stable machine-readable ``code`` so callers can distinguish
    failure modes without parsing messages.
    """

    def __init__(self, message: str, code: str | None = None):
        super().__init__(message)
        self.code = code


class DomainError(CurveError):
    """An operation was applied outside its mathematical domain."""


class InconsistentDataError(CurveError):
    """Supplied numerical data cannot belong to any actual curve."""


class InvariantViolation(CurveError, RuntimeError):
    """An internal cross-check failed; indicates a bug, not bad input."""
