class DomainError(ValueError):
    """Raised when an input violates a mathematical precondition."""


class BudgetError(RuntimeError):
    """Raised when a computation exceeds its configured work budget."""


class InconsistencyError(RuntimeError):
    """Raised when an internal exactness guard fails (never expected)."""
