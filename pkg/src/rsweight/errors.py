"""Exception types shared by every engine.

The CLI maps :class:`PreconditionError` to exit code 2 and
:class:`BudgetExceeded` to exit code 3.
"""

import os

DEFAULT_BUDGET = 10**7


class PreconditionError(ValueError):
    """An engine refused a query whose preconditions do not hold."""

    def __init__(self, reason):
        super().__init__(reason)
        self.reason = reason


class BudgetExceeded(RuntimeError):
    """A brute-force enumeration would exceed the configured budget."""

    def __init__(self, needed, budget, what="enumeration"):
        super().__init__(f"{what} needs {needed} evaluations, budget is {budget}")
        self.needed = needed
        self.budget = budget
        self.what = what


def enumeration_budget(budget=None):
    """Resolve the evaluation budget: explicit value, then $RSWEIGHT_BUDGET, then default."""
    if budget is not None:
        return int(budget)
    env = os.environ.get("RSWEIGHT_BUDGET")
    if env:
        return int(env)
    return DEFAULT_BUDGET


def check_budget(needed, budget=None, what="enumeration"):
    limit = enumeration_budget(budget)
    if needed > limit:
        raise BudgetExceeded(needed, limit, what)
