import pytest

from budgetbandit import Binomial, PointMass, ProblemInstance
from budgetbandit.config import ExperimentConfig

PAPER_COSTS = [3.0, 4.0, 8.0, 10.0]
PAPER_BUDGET = 5.0
PAPER_MEANS = [1.5, 2.5, 4.5, 4.0]
PAPER_Z_STAR = 3.0


@pytest.fixture
def paper_instance():
    return ProblemInstance(PAPER_COSTS, PAPER_BUDGET, PAPER_MEANS)


def paper_config(beta=2.0, horizon=10_000, replications=200, base_seed=20260823,
                 **kwargs) -> ExperimentConfig:
    return ExperimentConfig(
        costs=PAPER_COSTS,
        budget=PAPER_BUDGET,
        populations=[Binomial(5, 0.3), Binomial(5, 0.5),
                     Binomial(5, 0.9), Binomial(5, 0.8)],
        beta=beta, horizon=horizon, replications=replications,
        base_seed=base_seed, **kwargs)


def point_mass_config(beta=2.0, horizon=2_000, replications=3, base_seed=7,
                      means=PAPER_MEANS) -> ExperimentConfig:
    return ExperimentConfig(
        costs=PAPER_COSTS,
        budget=PAPER_BUDGET,
        populations=[PointMass(m) for m in means],
        beta=beta, horizon=horizon, replications=replications,
        base_seed=base_seed)


# point-mass means whose optimum is a single affordable arm, so every
# scenario is identical and confidence bands have zero width
DETERMINISTIC_MEANS = [1.5, 6.0, 4.5, 4.0]
