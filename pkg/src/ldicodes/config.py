"""Search budgets, overridable through the ``LDICODES_BUDGET`` environment variable."""

import os

BUDGET_ENV = "LDICODES_BUDGET"

DEFAULT_DISTANCE_BUDGET = 10**8
DEFAULT_SIGN_SEARCH_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    def __init__(self, what: str, budget: int):
        super().__init__(f"{what} exceeded its budget of {budget}")
        self.budget = budget


def _from_env(default: int) -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None or raw.strip() == "":
        return default
    value = int(raw)
    if value < 1:
        raise ValueError(f"{BUDGET_ENV} must be a positive integer, got {raw!r}")
    return value


def distance_budget() -> int:
    return _from_env(DEFAULT_DISTANCE_BUDGET)


def sign_search_budget() -> int:
    return _from_env(DEFAULT_SIGN_SEARCH_BUDGET)
