"""Sparse forced-selection schedules of power form l_j + m**beta.

Each arm gets a strictly increasing sequence of forced periods whose density
vanishes (beta > 1). Raw terms are rounded to the nearest integer; when two
arms claim the same period the lowest-indexed arm keeps it and every other
claimant moves to its next free period, preserving strict increase per arm.
"""

from __future__ import annotations

import numpy as np


def build_forced_schedule(beta: float, k: int, horizon: int,
                          offsets=None) -> np.ndarray:
    """Map periods 1..horizon to a forced arm (0-based) or -1.

    Default offsets l_j = j place one forced selection of every arm within the
    first k+1 periods, so each running-mean estimate exists after warm-up.
    """
    if beta <= 1:
        raise ValueError(f"schedule exponent must exceed 1, got {beta}")
    if horizon < k:
        raise ValueError(f"horizon {horizon} shorter than arm count {k}")
    if offsets is None:
        offsets = list(range(k))
    else:
        offsets = [int(o) for o in offsets]
        if len(offsets) != k or any(o < 0 for o in offsets):
            raise ValueError("offsets must be k non-negative integers")

    events = []  # (raw period, arm)
    for arm in range(k):
        m = 1
        while True:
            raw = offsets[arm] + int(round(m ** beta))
            if raw > horizon:
                break
            events.append((raw, arm))
            m += 1
    events.sort()

    forced = np.full(horizon + 1, -1, dtype=np.int64)
    last = [0] * k
    for raw, arm in events:
        p = max(raw, last[arm] + 1)
        while p <= horizon and forced[p] != -1:
            p += 1
        if p > horizon:
            continue  # deferred past the horizon; dropped
        forced[p] = arm
        last[arm] = p
    return forced


def forced_periods(forced: np.ndarray, arm: int) -> np.ndarray:
    """Periods at which ``arm`` is forced, ascending."""
    return np.flatnonzero(forced == arm)
