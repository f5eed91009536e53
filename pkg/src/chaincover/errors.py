class DomainError(ValueError):
    """Raised when an input violates a mathematical precondition."""


class BudgetError(DomainError):
    """Raised when an exhaustive enumeration would exceed its hard size cap."""


class ChainError(DomainError):
    """Raised when a matrix does not satisfy the chained-matrix conditions."""
