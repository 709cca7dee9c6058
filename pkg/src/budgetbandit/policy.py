"""Adaptive certainty-equivalence policy with forced exploration.

At a forced period the scheduled arm is sampled unconditionally. Otherwise the
budget LP is re-solved with the current running-mean estimates and an arm is
drawn from the optimal vertex's randomization probabilities. Because every
vertex objective is linear in the mean vector, re-solving is a single small
matrix product against precomputed coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .instance import ProblemInstance
from .lp import enumerate_bases, solve_basis

#: relative tolerance for identifying ties among vertex objectives
TIE_TOL = 1e-12


class CertaintyEquivalenceChooser:
    """Precomputed fast path for per-period LP re-solves.

    ``coeffs[b] @ mu_hat`` is the objective of basis b (coeffs are the basis's
    x vector, in original indexing, so this works directly on estimate
    vectors). Every enumerated basis is primal feasible, so the optimal set is
    exactly the argmax over basis objectives.
    """

    def __init__(self, instance: ProblemInstance):
        self.instance = instance
        self.bases = enumerate_bases(instance)
        neutral = [0.0] * instance.k
        sols = [solve_basis(instance, b, means=neutral) for b in self.bases]
        self.coeffs = np.array([s.x for s in sols], dtype=np.float64)
        self.x_vectors = [np.asarray(s.x, dtype=np.float64) for s in sols]
        # (arm, threshold) pairs for inverse-CDF arm draws per basis
        self.draw_plans = []
        for s in sols:
            arms = [(a, xv) for a, xv in enumerate(s.x) if xv > 0.0]
            cum, plan = 0.0, []
            for a, xv in arms:
                cum += xv
                plan.append((a, cum))
            self.draw_plans.append(plan)
        self.expected_costs = np.array(
            [float(np.dot(s.x, instance.to_original(instance.costs)))
             for s in sols])

    def choose(self, mu_hat: np.ndarray, prev: int | None) -> int:
        """Index of the optimal basis, keeping ``prev`` when still optimal."""
        z = self.coeffs @ mu_hat
        z_max = z.max()
        cut = z_max - TIE_TOL * (1.0 + abs(z_max))
        if prev is not None and z[prev] >= cut:
            return prev
        return int(np.argmax(z >= cut))

    def draw_arm(self, basis_idx: int, u: float) -> int:
        """Arm sampled from the basis's randomization, using uniform ``u``."""
        plan = self.draw_plans[basis_idx]
        for arm, threshold in plan:
            if u < threshold:
                return arm
        return plan[-1][0]


@dataclass
class PolicyState:
    """Sufficient statistics of the history: counts, running means, last basis.

    Estimates start at 0 for unsampled arms; the schedule forces every arm
    within the first k+1 periods, so this neutral value never survives warm-up.
    """

    k: int
    counts: np.ndarray = None
    mu_hat: np.ndarray = None
    prev_basis: int | None = None
    period: int = field(default=0)

    def __post_init__(self):
        if self.counts is None:
            self.counts = np.zeros(self.k, dtype=np.int64)
        if self.mu_hat is None:
            self.mu_hat = np.zeros(self.k, dtype=np.float64)


def policy_step(state: PolicyState, chooser: CertaintyEquivalenceChooser,
                forced_arm: int, u: float) -> tuple[int, int]:
    """Select an arm for the current period.

    Returns (arm, basis index), with basis index -1 on forced periods.
    ``forced_arm`` is -1 when no arm is scheduled; ``u`` is a uniform draw
    consumed only on non-forced periods.
    """
    if forced_arm >= 0:
        return forced_arm, -1
    idx = state.prev_basis
    idx = chooser.choose(state.mu_hat, idx)
    state.prev_basis = idx
    return chooser.draw_arm(idx, u), idx


def update(state: PolicyState, arm: int, outcome: float) -> None:
    """Fold one observation into the running mean of ``arm``."""
    state.period += 1
    n = state.counts[arm] + 1
    state.counts[arm] = n
    state.mu_hat[arm] += (outcome - state.mu_hat[arm]) / n
