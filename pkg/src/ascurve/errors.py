"""Exception types with stable machine-readable codes.

Every error the CLI can surface carries a ``code`` attribute; the CLI maps it
into the structured error object it prints on failure.
"""


class AscurveError(Exception):
    """Base class for all package errors."""

    code = "error"


class InputFormatError(AscurveError):
    """Malformed polynomial, field, or code input."""

    code = "malformed-input"


class MixedFieldError(AscurveError):
    """Operands belong to different field specs."""

    code = "usage-error"


class FieldDivisionError(AscurveError, ZeroDivisionError):
    """Division by the zero element."""

    code = "division-by-zero"


class CapacityError(AscurveError):
    """An exhaustive operation would exceed the configured budget."""

    code = "capacity-exceeded"

    def __init__(self, required, budget, what="items"):
        self.required = required
        self.budget = budget
        self.what = what
        super().__init__(
            f"operation requires {required} {what}, budget is {budget} "
            f"(raise the budget to allow this run)"
        )


class PreconditionError(AscurveError):
    """A named operation precondition does not hold."""

    code = "precondition-failed"

    def __init__(self, condition, message=None):
        self.condition = condition
        super().__init__(message or f"precondition violated: {condition}")


class InconsistentCountsError(AscurveError):
    """Point counts cannot come from a curve (recurrence or cross-check failed)."""

    code = "inconsistent-counts"


class DimensionMismatchError(AscurveError):
    """Computed code dimension disagrees with the closed-form value."""

    code = "dimension-mismatch"
