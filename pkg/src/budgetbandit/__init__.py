"""Budget-constrained sequential sampling: exact budget-LP solver, adaptive
certainty-equivalence policy with sparse forced exploration, and a Monte-Carlo
convergence experiment engine."""

from .config import ConfigError, ExperimentConfig
from .instance import (InfeasibleBudgetError, InstanceError, ProblemInstance,
                       RedundantBudgetError)
from .lp import (Basis, BasisSolution, OptimalSet, WeightVectors,
                 enumerate_bases, optimal_set, solve_basis, stability_radius,
                 weight_vectors)
from .policy import CertaintyEquivalenceChooser, PolicyState, policy_step, update
from .populations import Bernoulli, Binomial, DiscreteBounded, PointMass
from .schedule import build_forced_schedule, forced_periods
from .simulate import (ReplicationSummary, Trajectory, diagnostics_report,
                       feasibility_report, replicate, run_scenario)

__all__ = [
    "Basis", "BasisSolution", "Bernoulli", "Binomial",
    "CertaintyEquivalenceChooser", "ConfigError", "DiscreteBounded",
    "ExperimentConfig", "InfeasibleBudgetError", "InstanceError", "OptimalSet",
    "PointMass", "PolicyState", "ProblemInstance", "RedundantBudgetError",
    "ReplicationSummary", "Trajectory", "WeightVectors", "build_forced_schedule",
    "diagnostics_report", "enumerate_bases", "feasibility_report",
    "forced_periods", "optimal_set", "policy_step", "replicate", "run_scenario",
    "solve_basis", "stability_radius", "update", "weight_vectors",
]
