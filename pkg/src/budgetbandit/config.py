"""Experiment configuration: YAML round-trip and validation.

A config fully determines an experiment: instance, outcome distributions,
schedule exponent, horizon, replication count, and base seed. The committed
configs/ directory holds a runnable example.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import yaml

from . import populations
from .instance import ProblemInstance


class ConfigError(ValueError):
    """Malformed or inconsistent experiment configuration."""


def default_checkpoints(horizon: int) -> list[int]:
    """Dense first 100 periods, then a 1-2-5 geometric grid up to the horizon."""
    grid = set(range(1, min(100, horizon) + 1))
    scale = 100
    while scale <= horizon:
        for f in (1, 2, 5):
            if f * scale <= horizon:
                grid.add(f * scale)
        scale *= 10
    grid.add(horizon)
    return sorted(grid)


@dataclass
class ExperimentConfig:
    costs: list
    budget: float
    populations: list  # population spec objects
    beta: float
    horizon: int
    replications: int
    base_seed: int
    offsets: list | None = None
    checkpoints: list = field(default=None)

    def __post_init__(self):
        if len(self.populations) != len(self.costs):
            raise ConfigError("populations and costs must have equal length")
        if self.horizon < len(self.costs):
            raise ConfigError("horizon must be at least the number of arms")
        if self.replications < 1:
            raise ConfigError("replications must be positive")
        if self.beta <= 1:
            raise ConfigError("schedule exponent beta must exceed 1")
        if self.checkpoints is None:
            self.checkpoints = default_checkpoints(self.horizon)
        else:
            self.checkpoints = sorted(set(int(n) for n in self.checkpoints))
            if self.checkpoints[0] < 1 or self.checkpoints[-1] > self.horizon:
                raise ConfigError("checkpoints must lie in [1, horizon]")
        # validates cost/budget band and computes d
        self.instance()

    def instance(self) -> ProblemInstance:
        means = [p.mean for p in self.populations]
        try:
            return ProblemInstance(self.costs, self.budget, means)
        except ValueError as e:
            raise ConfigError(str(e)) from e

    def to_dict(self) -> dict:
        d = {
            "costs": list(self.costs),
            "budget": self.budget,
            "populations": [populations.to_dict(p) for p in self.populations],
            "beta": self.beta,
            "horizon": self.horizon,
            "replications": self.replications,
            "base_seed": self.base_seed,
        }
        if self.offsets is not None:
            d["offsets"] = list(self.offsets)
        d["checkpoints"] = list(self.checkpoints)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "ExperimentConfig":
        try:
            return cls(
                costs=[float(c) for c in d["costs"]],
                budget=float(d["budget"]),
                populations=[populations.from_dict(p) for p in d["populations"]],
                beta=float(d["beta"]),
                horizon=int(d["horizon"]),
                replications=int(d["replications"]),
                base_seed=int(d["base_seed"]),
                offsets=d.get("offsets"),
                checkpoints=d.get("checkpoints"),
            )
        except KeyError as e:
            raise ConfigError(f"missing config field {e.args[0]!r}") from e
        except (TypeError, ValueError) as e:
            if isinstance(e, ConfigError):
                raise
            raise ConfigError(str(e)) from e

    @classmethod
    def load(cls, path) -> "ExperimentConfig":
        try:
            raw = yaml.safe_load(Path(path).read_text())
        except yaml.YAMLError as e:
            raise ConfigError(f"invalid YAML in {path}: {e}") from e
        if not isinstance(raw, dict):
            raise ConfigError(f"config {path} must be a mapping")
        return cls.from_dict(raw)

    def save(self, path) -> None:
        Path(path).write_text(yaml.safe_dump(self.to_dict(), sort_keys=False))
