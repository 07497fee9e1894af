class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""

    def __init__(self, field: str, value, expected: str):
        self.field = field
        self.value = value
        self.expected = expected
        super().__init__(f"{field}={value!r} is outside {expected}")


class BudgetExceeded(ValueError):
    """A grid search would enumerate more candidates than allowed."""


class OracleMismatch(AssertionError):
    """A closed-form value disagreed with the Born-rule evaluation."""
