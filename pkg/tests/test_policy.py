import numpy as np
import pytest
from scipy import stats

from budgetbandit import (CertaintyEquivalenceChooser, PolicyState,
                          ProblemInstance, policy_step, update)
from budgetbandit import populations as pops
from conftest import PAPER_COSTS, PAPER_MEANS


@pytest.fixture
def chooser(paper_instance):
    return CertaintyEquivalenceChooser(paper_instance)


def test_forced_arm_overrides_estimates(chooser):
    state = PolicyState(k=4)
    state.mu_hat[:] = [100.0, 0.0, 0.0, 0.0]
    arm, basis_idx = policy_step(state, chooser, forced_arm=2, u=0.0)
    assert arm == 2 and basis_idx == -1


def test_paper_estimates_randomize_between_2_and_3(chooser):
    state = PolicyState(k=4)
    state.mu_hat[:] = PAPER_MEANS
    arm_lo, _ = policy_step(state, chooser, forced_arm=-1, u=0.5)
    arm_hi, _ = policy_step(state, chooser, forced_arm=-1, u=0.9)
    assert arm_lo == 1  # below the 0.75 threshold
    assert arm_hi == 2


def test_all_equal_estimates_pick_first_singleton(chooser):
    state = PolicyState(k=4)
    state.mu_hat[:] = 1.0
    for u in (0.0, 0.5, 0.999):
        arm, basis_idx = policy_step(state, chooser, forced_arm=-1, u=u)
        assert arm == 0
        assert chooser.bases[basis_idx].arms == (0,)


def test_tie_rule_keeps_previous_basis(chooser):
    state = PolicyState(k=4)
    state.mu_hat[:] = PAPER_MEANS
    _, idx = policy_step(state, chooser, forced_arm=-1, u=0.1)
    state.mu_hat[:] = 1.0  # every basis now ties
    _, idx2 = policy_step(state, chooser, forced_arm=-1, u=0.1)
    assert idx2 == idx


def test_arm_distribution_matches_lp_probabilities(chooser):
    # conditional on fixed estimates, the draw must follow x = (0, 3/4, 1/4, 0)
    rng = pops.stream(99, 0, 0)
    counts = np.zeros(4, dtype=int)
    n = 100_000
    us = rng.random(n)
    state = PolicyState(k=4)
    state.mu_hat[:] = PAPER_MEANS
    for u in us:
        arm, _ = policy_step(state, chooser, forced_arm=-1, u=float(u))
        counts[arm] += 1
    assert counts[0] == 0 and counts[3] == 0
    res = stats.chisquare(counts[[1, 2]], f_exp=[0.75 * n, 0.25 * n])
    assert res.pvalue > 0.001


def test_randomization_respects_budget(chooser, paper_instance):
    costs = np.asarray(paper_instance.to_original(paper_instance.costs))
    rng = np.random.default_rng(3)
    state = PolicyState(k=4)
    for _ in range(500):
        state.mu_hat[:] = rng.uniform(0, 10, size=4)
        state.prev_basis = None
        _, idx = policy_step(state, chooser, forced_arm=-1, u=0.5)
        assert np.dot(chooser.x_vectors[idx], costs) <= paper_instance.budget + 1e-9


def test_update_running_mean():
    state = PolicyState(k=2)
    update(state, 0, 4.0)
    assert state.counts[0] == 1 and state.mu_hat[0] == 4.0
    state.counts[1] = 3
    state.mu_hat[1] = 2.0
    update(state, 1, 6.0)
    assert state.counts[1] == 4 and state.mu_hat[1] == 3.0


def test_update_converges_to_true_mean():
    from budgetbandit import Binomial
    rng = pops.stream(5, 0, 0)
    draws = Binomial(5, 0.5).sample(rng, size=100_000)
    state = PolicyState(k=1)
    for x in draws:
        update(state, 0, float(x))
    assert abs(state.mu_hat[0] - 2.5) < 0.05
    assert state.counts[0] == 100_000 and state.period == 100_000


def test_chooser_equals_full_reduced_cost_test():
    # the argmax fast path must agree with the dual-feasibility definition
    from budgetbandit import optimal_set
    rng = np.random.default_rng(17)
    inst = ProblemInstance(PAPER_COSTS, 5.0)
    chooser = CertaintyEquivalenceChooser(inst)
    for _ in range(300):
        mu = rng.uniform(0, 10, size=4)
        _ = optimal_set(inst, mu)
        idx = chooser.choose(mu, prev=None)
        sol = _.solutions[idx]
        assert sol.z == pytest.approx(float(_.z_star), abs=1e-9)
        assert sol.support in _.supports
