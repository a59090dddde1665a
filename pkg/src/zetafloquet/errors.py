"""Exception types shared across the pipeline.

The CLI maps these onto exit codes: :class:`UsageError` -> 2, the others -> 1.
"""


class DomainError(ValueError):
    """An argument lies outside the range an operation supports."""


class UsageError(ValueError):
    """Inputs are individually valid but inconsistent with each other."""


class InvariantViolation(RuntimeError):
    """A computed object failed one of its structural checks (unitarity, ...)."""


class EstimationFailed(RuntimeError):
    """A statistical estimate could not be formed; ``diagnostics`` says why."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = dict(diagnostics or {})
