"""Problem instances: sampling costs, a per-period budget, and optional true means.

Costs are kept internally in non-decreasing order; the constructor records the
sort permutation so that every public vector (x, reduced costs, weight vectors)
can be reported in the caller's original population indexing.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


class InstanceError(ValueError):
    """Invalid problem instance."""


class InfeasibleBudgetError(InstanceError):
    """Budget below the cheapest sampling cost: no policy can satisfy it."""


class RedundantBudgetError(InstanceError):
    """Budget at or above the most expensive cost: the constraint binds nothing."""


class ProblemInstance:
    """k populations with sampling costs and a per-period budget.

    Parameters
    ----------
    costs : sequence of k sampling costs, any order (k >= 2, not all equal)
    budget : per-period cost bound C0 with min(costs) <= C0 < max(costs)
    means : optional sequence of k true means, in the same indexing as costs
    """

    def __init__(self, costs: Sequence[float], budget: float,
                 means: Sequence[float] | None = None):
        costs = tuple(costs)
        if len(costs) < 2:
            raise InstanceError("need at least 2 populations")
        if means is not None:
            means = tuple(means)
            if len(means) != len(costs):
                raise InstanceError("means and costs must have equal length")
        if min(costs) == max(costs):
            raise InstanceError("costs must not all be equal")
        if budget < min(costs):
            raise InfeasibleBudgetError(
                f"budget {budget} is below the cheapest cost {min(costs)}")
        if budget >= max(costs):
            raise RedundantBudgetError(
                f"budget {budget} makes the cost constraint redundant "
                f"(>= max cost {max(costs)})")

        # order[p] = original index of the population at sorted position p
        self.order = tuple(sorted(range(len(costs)), key=lambda i: costs[i]))
        self.costs = tuple(costs[i] for i in self.order)
        self.budget = budget
        self.means = None if means is None else tuple(means[i] for i in self.order)
        self.k = len(costs)
        # number of populations affordable on their own (paper index d, 1-based)
        self.d = sum(1 for c in self.costs if c <= budget)
        self._inverse = tuple(sorted(range(self.k), key=lambda p: self.order[p]))

    # -- index conversions ------------------------------------------------

    def to_sorted(self, vec: Sequence) -> tuple:
        """Reorder a vector from original indexing to internal sorted order."""
        if len(vec) != self.k:
            raise InstanceError(f"expected length-{self.k} vector")
        return tuple(vec[i] for i in self.order)

    def to_original(self, vec: Sequence) -> tuple:
        """Reorder a vector from internal sorted order back to the caller's."""
        return tuple(vec[p] for p in self._inverse)

    def original_index(self, pos: int) -> int:
        """Original index of the population at sorted position ``pos``."""
        return self.order[pos]

    # -- exact arithmetic -------------------------------------------------

    def exact(self) -> "ProblemInstance":
        """Copy of this instance with costs/budget/means as exact rationals."""
        inst = ProblemInstance.__new__(ProblemInstance)
        inst.order = self.order
        inst.costs = tuple(Fraction(c) for c in self.costs)
        inst.budget = Fraction(self.budget)
        inst.means = None if self.means is None else tuple(
            Fraction(m) for m in self.means)
        inst.k = self.k
        inst.d = self.d
        inst._inverse = self._inverse
        return inst

    def __repr__(self):
        return (f"ProblemInstance(k={self.k}, costs={self.costs}, "
                f"budget={self.budget}, d={self.d})")
