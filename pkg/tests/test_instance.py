import pytest

from budgetbandit import (InfeasibleBudgetError, InstanceError, ProblemInstance,
                          RedundantBudgetError)


def test_sorts_costs_and_tracks_permutation():
    inst = ProblemInstance([8, 3, 10, 4], 5, means=[4.5, 1.5, 4.0, 2.5])
    assert inst.costs == (3, 4, 8, 10)
    assert inst.means == (1.5, 2.5, 4.5, 4.0)
    assert inst.to_original(inst.costs) == (8, 3, 10, 4)
    assert inst.to_original(inst.to_sorted([10, 20, 30, 40])) == (10, 20, 30, 40)


def test_affordable_count():
    assert ProblemInstance([3, 4, 8, 10], 5).d == 2
    assert ProblemInstance([1, 2], 1).d == 1
    assert ProblemInstance([1, 2, 3], 2).d == 2


def test_budget_band_errors():
    with pytest.raises(InfeasibleBudgetError):
        ProblemInstance([3, 4, 8], 2.5)
    with pytest.raises(RedundantBudgetError):
        ProblemInstance([3, 4, 8], 8)
    with pytest.raises(RedundantBudgetError):
        ProblemInstance([3, 4, 8], 11)


def test_rejects_degenerate_inputs():
    with pytest.raises(InstanceError):
        ProblemInstance([5], 5)
    with pytest.raises(InstanceError):
        ProblemInstance([4, 4, 4], 4)
    with pytest.raises(InstanceError):
        ProblemInstance([3, 4], 3.5, means=[1.0])


def test_boundary_budgets_allowed():
    # c_1 <= C0 < c_k is the legal band, inclusive on the left
    assert ProblemInstance([1, 2], 1).d == 1
    inst = ProblemInstance([1, 2, 3], 2)
    assert inst.costs[inst.d - 1] == 2
