"""Package-wide exception types."""

from __future__ import annotations


class BudgetExceededError(Exception):
    """An exhaustive computation would exceed its work budget.

    Raised before any work is done, so callers can retry with a bigger
    budget.  ``operation`` names the guarded computation, ``required`` the
    work estimate and ``budget`` the limit it ran into.
    """

    def __init__(self, operation: str, required: int, budget: int):
        self.operation = operation
        self.required = required
        self.budget = budget
        super().__init__(
            f"{operation}: work estimate {required} exceeds budget {budget}; "
            f"raise the budget to force the run"
        )
