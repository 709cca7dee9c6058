"""Scenario execution and cross-replication aggregation.

A scenario runs the adaptive policy for a fixed horizon with reproducible
per-(scenario, arm) random streams, tracking the running average outcome and
cost plus the selection decomposition: forced periods per arm, and periods
played through each LP basis split by whether that basis is optimal under the
true means. Replication aggregates scenarios into mean curves with a normal
95% confidence band.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import populations as pops
from .config import ExperimentConfig
from .lp import optimal_set
from .policy import CertaintyEquivalenceChooser, PolicyState, policy_step, update
from .schedule import build_forced_schedule

Z_95 = 1.96


@dataclass
class Trajectory:
    """Checkpointed records of one scenario."""

    checkpoints: np.ndarray
    avg_outcome: np.ndarray      # S_n / n
    avg_cost: np.ndarray         # C_n / n
    counts: np.ndarray           # (ncp, k) samples per arm
    forced_counts: np.ndarray    # (ncp, k) forced selections per arm
    basis_counts: np.ndarray     # (ncp, nb) non-forced periods per basis
    opt_outcome_sum: np.ndarray  # (ncp,) outcomes in true-optimal-basis periods
    basis_arm_counts: np.ndarray   # (nb, k) final, per basis and sampled arm
    basis_arm_outcome: np.ndarray  # (nb, k) final outcome sums
    basis_is_optimal: np.ndarray   # (nb,) support optimal under true means
    z_star: float

    @property
    def horizon(self) -> int:
        return int(self.checkpoints[-1])


@dataclass
class ReplicationSummary:
    """Cross-scenario mean curves with a 95% confidence band."""

    beta: float
    replications: int
    checkpoints: np.ndarray
    mean_avg_outcome: np.ndarray
    sd: np.ndarray
    ci_lo: np.ndarray
    ci_hi: np.ndarray
    mean_avg_cost: np.ndarray
    regret: np.ndarray           # mean_avg_outcome - z_star
    z_star: float
    mean_forced_frac: np.ndarray  # (ncp, k)
    mean_nonopt_frac: np.ndarray
    mean_opt_frac: np.ndarray


def run_scenario(config: ExperimentConfig, scenario_index: int) -> Trajectory:
    """One deterministic scenario: (config, base_seed, index) fixes everything."""
    instance = config.instance()
    chooser = CertaintyEquivalenceChooser(instance)
    k, horizon = instance.k, config.horizon
    forced = build_forced_schedule(config.beta, k, horizon, config.offsets)
    true_means = [p.mean for p in config.populations]
    opt = optimal_set(instance, true_means)
    nb = len(chooser.bases)
    basis_is_optimal = np.array(
        [sol.support in opt.supports for sol in opt.solutions])
    costs = [float(c) for c in instance.to_original(instance.costs)]

    # one stream per (scenario, arm); stream k is the policy's randomization
    outcomes = [np.asarray(
        config.populations[a].sample(
            pops.stream(config.base_seed, scenario_index, a), size=horizon),
        dtype=np.float64) for a in range(k)]
    uniforms = pops.stream(config.base_seed, scenario_index, k).random(horizon + 1)

    state = PolicyState(k=k)
    checkpoints = np.asarray(config.checkpoints, dtype=np.int64)
    ncp = len(checkpoints)
    rec_outcome = np.empty(ncp)
    rec_cost = np.empty(ncp)
    rec_counts = np.empty((ncp, k), dtype=np.int64)
    rec_forced = np.empty((ncp, k), dtype=np.int64)
    rec_basis = np.empty((ncp, nb), dtype=np.int64)
    rec_opt_sum = np.empty(ncp)

    S = 0.0
    C = 0.0
    W = 0.0
    forced_counts = [0] * k
    basis_arm_counts = np.zeros((nb, k), dtype=np.int64)
    basis_arm_outcome = np.zeros((nb, k))
    cp_iter = iter(range(ncp))
    cp_pos = next(cp_iter)
    next_cp = checkpoints[cp_pos]

    for n in range(1, horizon + 1):
        arm, bidx = policy_step(state, chooser, int(forced[n]), uniforms[n])
        outcome = float(outcomes[arm][state.counts[arm]])
        update(state, arm, outcome)
        S += outcome
        C += costs[arm]
        if bidx >= 0:
            basis_arm_counts[bidx, arm] += 1
            basis_arm_outcome[bidx, arm] += outcome
            if basis_is_optimal[bidx]:
                W += outcome
        else:
            forced_counts[arm] += 1
        if n == next_cp:
            rec_outcome[cp_pos] = S / n
            rec_cost[cp_pos] = C / n
            rec_counts[cp_pos] = state.counts
            rec_forced[cp_pos] = forced_counts
            rec_basis[cp_pos] = basis_arm_counts.sum(axis=1)
            rec_opt_sum[cp_pos] = W
            cp_pos = next(cp_iter, None)
            next_cp = checkpoints[cp_pos] if cp_pos is not None else -1

    return Trajectory(
        checkpoints=checkpoints,
        avg_outcome=rec_outcome,
        avg_cost=rec_cost,
        counts=rec_counts,
        forced_counts=rec_forced,
        basis_counts=rec_basis,
        opt_outcome_sum=rec_opt_sum,
        basis_arm_counts=basis_arm_counts,
        basis_arm_outcome=basis_arm_outcome,
        basis_is_optimal=basis_is_optimal,
        z_star=float(opt.z_star),
    )


def _scenario_stats(config: ExperimentConfig, scenario_index: int):
    t = run_scenario(config, scenario_index)
    n = t.checkpoints.astype(np.float64)
    nonopt = t.basis_counts[:, ~t.basis_is_optimal].sum(axis=1) / n
    opt_frac = t.basis_counts[:, t.basis_is_optimal].sum(axis=1) / n
    return (t.avg_outcome, t.avg_cost, t.forced_counts / n[:, None],
            nonopt, opt_frac)


def replicate(config: ExperimentConfig, threads: int = 1) -> ReplicationSummary:
    """Aggregate R independent scenarios; results do not depend on ``threads``."""
    R = config.replications
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_scenario_stats, [config] * R, range(R),
                                    chunksize=max(1, R // (4 * threads))))
    else:
        results = [_scenario_stats(config, r) for r in range(R)]

    avg_outcome = np.stack([r[0] for r in results])
    avg_cost = np.stack([r[1] for r in results])
    forced = np.stack([r[2] for r in results])
    nonopt = np.stack([r[3] for r in results])
    opt_frac = np.stack([r[4] for r in results])

    instance = config.instance()
    z_star = float(optimal_set(instance, [p.mean for p in config.populations]).z_star)
    mean = avg_outcome.mean(axis=0)
    sd = avg_outcome.std(axis=0, ddof=1) if R > 1 else np.zeros(mean.shape)
    # identical scenarios must report an exactly zero band, not mean round-off
    sd[np.ptp(avg_outcome, axis=0) == 0] = 0.0
    half = Z_95 * sd / math.sqrt(R)
    return ReplicationSummary(
        beta=config.beta,
        replications=R,
        checkpoints=np.asarray(config.checkpoints, dtype=np.int64),
        mean_avg_outcome=mean,
        sd=sd,
        ci_lo=mean - half,
        ci_hi=mean + half,
        mean_avg_cost=avg_cost.mean(axis=0),
        regret=mean - z_star,
        z_star=z_star,
        mean_forced_frac=forced.mean(axis=0),
        mean_nonopt_frac=nonopt.mean(axis=0),
        mean_opt_frac=opt_frac.mean(axis=0),
    )


def feasibility_report(checkpoints, avg_cost, budget: float,
                       tol: float = 1e-9) -> dict:
    """Average-cost curve with a limsup proxy over the tail [horizon/2, horizon]."""
    checkpoints = np.asarray(checkpoints)
    avg_cost = np.asarray(avg_cost)
    tail = checkpoints >= checkpoints[-1] / 2
    proxy = float(avg_cost[tail].max())
    return {
        "checkpoints": checkpoints,
        "avg_cost": avg_cost,
        "tail_proxy": proxy,
        "feasible": proxy <= budget + tol,
    }


def diagnostics_report(trajectory: Trajectory) -> dict:
    """Selection decomposition: forced, non-optimal-basis, optimal-basis shares.

    The counting identity n = forced + sum_b Y^b(n) holds exactly at every
    checkpoint; the optimal share must approach 1 for the policy to be
    consistent.
    """
    n = trajectory.checkpoints.astype(np.float64)
    forced_total = trajectory.forced_counts.sum(axis=1)
    basis_total = trajectory.basis_counts.sum(axis=1)
    identity_ok = bool(np.all(forced_total + basis_total == trajectory.checkpoints))
    nonopt = trajectory.basis_counts[:, ~trajectory.basis_is_optimal].sum(axis=1)
    opt = trajectory.basis_counts[:, trajectory.basis_is_optimal].sum(axis=1)
    final_counts = trajectory.basis_counts[-1]
    with np.errstate(invalid="ignore", divide="ignore"):
        z_n_b = np.where(final_counts > 0,
                         trajectory.basis_arm_outcome.sum(axis=1)
                         / np.maximum(final_counts, 1), np.nan)
    return {
        "checkpoints": trajectory.checkpoints,
        "forced_frac": trajectory.forced_counts / n[:, None],
        "forced_frac_total": forced_total / n,
        "nonopt_frac": nonopt / n,
        "opt_frac": opt / n,
        "w_frac": trajectory.opt_outcome_sum / n,
        "identity_ok": identity_ok,
        "basis_avg_outcome": z_n_b,
    }
