"""Shared exception types and exit-code conventions."""

from __future__ import annotations

# CLI exit codes
EXIT_OK = 0
EXIT_PARSE_ERROR = 2
EXIT_BUDGET_EXHAUSTED = 3
EXIT_VIOLATION = 4


class CliquepackError(Exception):
    """Base class for all package-specific errors."""


class GraphParseError(CliquepackError):
    """Malformed graph text input."""


class BudgetExceededError(CliquepackError):
    """A configured work budget was exhausted before completion."""


class PivotBudgetExceeded(BudgetExceededError):
    def __init__(self, budget: int):
        super().__init__(f"simplex pivot budget exhausted ({budget} pivots)")
        self.budget = budget


class CliqueBudgetExceeded(BudgetExceededError):
    """Too many cliques to build the packing LP."""

    def __init__(self, clique_count: int, budget: int):
        super().__init__(
            f"instance has {clique_count} cliques, exceeding the LP size budget of {budget}"
        )
        self.clique_count = clique_count
        self.budget = budget


class NodeBudgetExceeded(BudgetExceededError):
    """Branch-and-bound ran out of nodes; carries the best bound found so far."""

    def __init__(self, budget: int, best_value: int, best_witness):
        super().__init__(
            f"branch-and-bound node budget exhausted ({budget} nodes); "
            f"best non-optimal lower bound is {best_value}"
        )
        self.budget = budget
        self.best_value = best_value
        self.best_witness = best_witness


class PackingBoundError(CliquepackError):
    """The constructive packer fell below its guaranteed value (indicates a bug)."""
