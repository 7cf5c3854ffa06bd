"""Search budgets shared by all exhaustive detectors.

Every potentially exponential search takes an optional Budget; exceeding it
raises BudgetExceeded so callers can report "unknown" instead of silently
truncating results.
"""

from __future__ import annotations

import os


DEFAULT_BUDGET_ENV = "ODDHOLES_BUDGET"


class BudgetExceeded(Exception):
    def __init__(self, used: int, cap: int):
        super().__init__(f"search budget exceeded: {used} nodes (cap {cap})")
        self.used = used
        self.cap = cap


class Budget:
    """Node-count budget for a single search. cap=None means unlimited."""

    __slots__ = ("cap", "used")

    def __init__(self, cap: int | None = None):
        self.cap = cap
        self.used = 0

    def tick(self, k: int = 1) -> None:
        self.used += k
        if self.cap is not None and self.used > self.cap:
            raise BudgetExceeded(self.used, self.cap)

    def __repr__(self):
        return f"Budget(cap={self.cap}, used={self.used})"


def default_budget_cap() -> int | None:
    """Budget cap from the environment, or None for unlimited."""
    raw = os.environ.get(DEFAULT_BUDGET_ENV)
    if not raw:
        return None
    return int(raw)
