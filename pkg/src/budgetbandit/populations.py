"""Synthetic outcome distributions with samplers and closed-form means.

All families are bounded, so average-outcome convergence also holds in
expectation. Streams come from a counter-based generator (Philox) keyed by
(seed, scenario, stream), making results independent of execution order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def stream(base_seed: int, *key: int) -> np.random.Generator:
    """Independent, reproducible random stream for a (scenario, arm) slot."""
    return np.random.Generator(
        np.random.Philox(np.random.SeedSequence(entropy=base_seed, spawn_key=key)))


@dataclass(frozen=True)
class Binomial:
    trials: int
    p: float

    def __post_init__(self):
        if self.trials < 0 or not 0.0 <= self.p <= 1.0:
            raise ValueError(f"invalid binomial parameters {self}")

    @property
    def mean(self) -> float:
        return self.trials * self.p

    @property
    def support_bound(self) -> float:
        return float(self.trials)

    def sample(self, rng: np.random.Generator, size=None):
        return rng.binomial(self.trials, self.p, size=size)


@dataclass(frozen=True)
class Bernoulli:
    p: float

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"invalid Bernoulli probability {self.p}")

    @property
    def mean(self) -> float:
        return self.p

    @property
    def support_bound(self) -> float:
        return 1.0

    def sample(self, rng: np.random.Generator, size=None):
        return rng.binomial(1, self.p, size=size)


@dataclass(frozen=True)
class PointMass:
    value: float

    @property
    def mean(self) -> float:
        return self.value

    @property
    def support_bound(self) -> float:
        return abs(self.value)

    def sample(self, rng: np.random.Generator, size=None):
        if size is None:
            return self.value
        return np.full(size, self.value)


@dataclass(frozen=True)
class DiscreteBounded:
    values: tuple
    probs: tuple

    def __post_init__(self):
        if len(self.values) != len(self.probs) or not self.values:
            raise ValueError("values and probs must be non-empty, equal length")
        if any(p < 0 for p in self.probs) or abs(sum(self.probs) - 1.0) > 1e-9:
            raise ValueError("probs must be non-negative and sum to 1")

    @property
    def mean(self) -> float:
        return float(sum(v * p for v, p in zip(self.values, self.probs)))

    @property
    def support_bound(self) -> float:
        return max(abs(v) for v in self.values)

    def sample(self, rng: np.random.Generator, size=None):
        idx = rng.choice(len(self.values), size=size, p=self.probs)
        vals = np.asarray(self.values)
        return vals[idx]


_FAMILIES = {
    "binomial": lambda d: Binomial(trials=int(d["trials"]), p=float(d["p"])),
    "bernoulli": lambda d: Bernoulli(p=float(d["p"])),
    "point_mass": lambda d: PointMass(value=float(d["value"])),
    "discrete": lambda d: DiscreteBounded(values=tuple(float(v) for v in d["values"]),
                                          probs=tuple(float(p) for p in d["probs"])),
}


def from_dict(d: dict):
    """Build a population spec from its config-file form."""
    kind = d.get("kind")
    if kind not in _FAMILIES:
        raise ValueError(f"unknown population kind {kind!r}; "
                         f"expected one of {sorted(_FAMILIES)}")
    return _FAMILIES[kind]({k: v for k, v in d.items() if k != "kind"})


def to_dict(spec) -> dict:
    if isinstance(spec, Binomial):
        return {"kind": "binomial", "trials": spec.trials, "p": spec.p}
    if isinstance(spec, Bernoulli):
        return {"kind": "bernoulli", "p": spec.p}
    if isinstance(spec, PointMass):
        return {"kind": "point_mass", "value": spec.value}
    if isinstance(spec, DiscreteBounded):
        return {"kind": "discrete", "values": list(spec.values),
                "probs": list(spec.probs)}
    raise TypeError(f"not a population spec: {spec!r}")
