"""Exact solution of the two-row budget LP by enumeration of its basic feasible
solutions.

The LP (standard form) is

    max  sum_j mu_j x_j
    s.t. sum_j c_j x_j + y = C0
         sum_j x_j        = 1
         x >= 0, y >= 0.

Every vertex is supported either on a pair of populations straddling the budget
or on a single affordable population (with budget slack basic). The finite set
of candidate supports is enumerated directly from the cost structure, so the
solver needs no pivoting and can run in exact rational arithmetic.

All public vectors are expressed in the caller's original population indexing;
``Basis`` positions refer to the internal cost-sorted order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .instance import InstanceError, ProblemInstance

#: tolerance for float-mode comparisons; exact (rational) mode compares exactly
FLOAT_TOL = 1e-12


@dataclass(frozen=True)
class Basis:
    """Support of a candidate vertex: one or two cost-sorted positions."""

    arms: tuple[int, ...]

    def __post_init__(self):
        if len(self.arms) not in (1, 2):
            raise InstanceError("basis must have one or two arms")
        if len(self.arms) == 2 and not self.arms[0] < self.arms[1]:
            raise InstanceError("pair basis must be ordered i < j")

    @property
    def is_pair(self) -> bool:
        return len(self.arms) == 2


@dataclass(frozen=True)
class BasisSolution:
    """Primal/dual data of one basic matrix.

    ``x`` and ``phi`` are in the caller's original indexing. ``phi_slack``
    equals the budget-row dual price ``lam``; the basis is dual feasible
    (optimal) iff all of ``phi`` and ``phi_slack`` are non-negative.
    """

    basis: Basis
    x: tuple
    y: object
    lam: object
    g: object
    phi: tuple
    phi_slack: object
    z: object
    degenerate: bool
    support: frozenset  # original indices with x > 0

    def dual_feasible(self, tol: float = 0.0) -> bool:
        return all(p >= -tol for p in self.phi) and self.phi_slack >= -tol


@dataclass(frozen=True)
class WeightVectors:
    """Mean-independent vectors w with phi_col = w . mu for one basis.

    ``population[a]`` is the weight vector of population column ``a`` (original
    indexing on both levels); ``slack`` is the weight vector of the slack
    column, whose reduced cost is the budget price lam.
    """

    basis: Basis
    population: tuple
    slack: tuple


@dataclass(frozen=True)
class OptimalSet:
    """Optimal vertex supports for a given mean vector.

    ``supports`` holds the distinct optimal supports (frozensets of original
    indices); degenerate pair bases collapse onto the singleton they equal.
    """

    supports: tuple
    z_star: object
    solutions: tuple  # one BasisSolution per enumerated basis
    optimal_flags: tuple  # per-basis dual feasibility

    def __contains__(self, support) -> bool:
        return frozenset(support) in self.supports


def _tol(exact: bool) -> float:
    return 0.0 if exact else FLOAT_TOL


def _resolve_means(instance: ProblemInstance, means) -> tuple:
    if means is None:
        if instance.means is None:
            raise InstanceError("no means supplied and instance has none")
        return instance.means
    means = tuple(means)
    if len(means) != instance.k:
        raise InstanceError(f"expected {instance.k} means")
    return instance.to_sorted(means)


def enumerate_bases(instance: ProblemInstance) -> tuple[Basis, ...]:
    """All candidate vertex supports, singletons first, pairs lexicographic.

    Pairs {i, d-1} for i < d-1 (0-based) appear only when c_{d-1} equals the
    budget exactly; they are degenerate duplicates of the singleton {d-1}.
    """
    d = instance.d
    c = instance.costs
    bases = [Basis((i,)) for i in range(d)]
    pairs = [(i, j) for i in range(d) for j in range(d, instance.k)
             if c[i] < c[j]]
    if c[d - 1] == instance.budget:
        pairs += [(i, d - 1) for i in range(d - 1) if c[i] < c[d - 1]]
    bases += [Basis(p) for p in sorted(pairs)]
    return tuple(bases)


def validate_basis(instance: ProblemInstance, basis: Basis) -> None:
    """Reject any basis outside the enumerable candidate set."""
    c, C0, d = instance.costs, instance.budget, instance.d
    if any(not 0 <= a < instance.k for a in basis.arms):
        raise InstanceError(f"basis arms out of range: {basis}")
    if basis.is_pair:
        i, j = basis.arms
        if not (c[i] <= C0 <= c[j] and c[i] < c[j]):
            raise InstanceError(f"pair basis {basis} not primal feasible")
        if not (i < d):
            raise InstanceError(f"pair basis {basis} must start at an affordable arm")
    else:
        if basis.arms[0] >= d:
            raise InstanceError(f"singleton basis {basis} is unaffordable alone")


def solve_basis(instance: ProblemInstance, basis: Basis,
                means: Sequence | None = None, exact: bool = False) -> BasisSolution:
    """Primal and dual solution of one basic matrix.

    Pair {i,j}: x_i = (c_j - C0)/(c_j - c_i), x_j = (C0 - c_i)/(c_j - c_i),
    y = 0, lam = (mu_j - mu_i)/(c_j - c_i), g = mu_i - c_i lam.
    Singleton {i}: x_i = 1, y = C0 - c_i, lam = 0, g = mu_i.
    """
    validate_basis(instance, basis)
    inst = instance.exact() if exact else instance
    mu = _resolve_means(inst, means)
    if exact:
        mu = tuple(Fraction(m) for m in mu)
    c, C0, k = inst.costs, inst.budget, inst.k
    zero = Fraction(0) if exact else 0.0

    x = [zero] * k
    if basis.is_pair:
        i, j = basis.arms
        den = c[j] - c[i]
        x[i] = (c[j] - C0) / den
        x[j] = (C0 - c[i]) / den
        y = zero
        lam = (mu[j] - mu[i]) / den
        g = mu[i] - c[i] * lam
        degenerate = C0 == c[i] or C0 == c[j]
    else:
        (i,) = basis.arms
        x[i] = zero + 1
        y = C0 - c[i]
        lam = zero
        g = mu[i]
        degenerate = C0 == c[i]

    phi = tuple(c[a] * lam + g - mu[a] for a in range(k))
    z = g + C0 * lam
    tol = _tol(exact)
    support = frozenset(inst.original_index(a) for a in range(k) if x[a] > tol)
    return BasisSolution(
        basis=basis,
        x=inst.to_original(x),
        y=y,
        lam=lam,
        g=g,
        phi=inst.to_original(phi),
        phi_slack=lam,
        z=z,
        degenerate=degenerate,
        support=support,
    )


def weight_vectors(instance: ProblemInstance, basis: Basis,
                   exact: bool = False) -> WeightVectors:
    """Mean-independent weight vectors reproducing every reduced cost."""
    validate_basis(instance, basis)
    inst = instance.exact() if exact else instance
    c, k = inst.costs, inst.k
    zero = Fraction(0) if exact else 0.0

    pop = []
    if basis.is_pair:
        i, j = basis.arms
        den = c[j] - c[i]
        for a in range(k):
            w = [zero] * k
            w[i] += (c[j] - c[a]) / den
            w[j] += (c[a] - c[i]) / den
            w[a] -= 1
            pop.append(w)
        slack = [zero] * k
        slack[i] -= 1 / (Fraction(den) if exact else den)
        slack[j] += 1 / (Fraction(den) if exact else den)
    else:
        (i,) = basis.arms
        for a in range(k):
            w = [zero] * k
            w[i] += 1
            w[a] -= 1
            pop.append(w)
        slack = [zero] * k

    # permute both the column order and each vector's entries
    pop_orig = inst.to_original([tuple(inst.to_original(w)) for w in pop])
    return WeightVectors(basis=basis, population=tuple(pop_orig),
                         slack=tuple(inst.to_original(slack)))


def optimal_set(instance: ProblemInstance, means: Sequence | None = None,
                exact: bool = False) -> OptimalSet:
    """Optimal supports and optimal value for a mean vector.

    A support is optimal when at least one basic matrix carrying it has all
    reduced costs non-negative, including the slack column's (the budget price
    lam must be >= 0 for dual feasibility).
    """
    tol = _tol(exact)
    sols = tuple(solve_basis(instance, b, means, exact)
                 for b in enumerate_bases(instance))
    flags = tuple(s.dual_feasible(tol) for s in sols)
    supports = []
    for s, ok in zip(sols, flags):
        if ok and s.support not in supports:
            supports.append(s.support)
    supports.sort(key=lambda sup: tuple(sorted(sup)))
    z_star = max(s.z for s in sols)
    return OptimalSet(supports=tuple(supports), z_star=z_star,
                      solutions=sols, optimal_flags=flags)


def stability_radius(instance: ProblemInstance, means: Sequence | None = None,
                     exact: bool = False):
    """Sup-norm radius below which estimate errors cannot make a non-optimal
    support look optimal.

    Minimizes |phi_m| / (k * ||w_m||_inf) over all basic matrices whose support
    is non-optimal and all columns m with phi_m < 0, the slack column included
    (a basis can be rejected solely by a negative budget price). Returns
    +inf when every support is optimal.
    """
    opt = optimal_set(instance, means, exact)
    k = instance.k
    best = None
    for sol in opt.solutions:
        if sol.support in opt.supports:
            continue
        wv = weight_vectors(instance, sol.basis, exact)
        columns = list(zip(sol.phi, wv.population)) + [(sol.phi_slack, wv.slack)]
        for phi, w in columns:
            norm = max(abs(e) for e in w)
            if phi < 0 and norm > 0:  # zero weights only on basic columns,
                # whose phi is 0 up to rounding
                ratio = abs(phi) / (k * norm)
                if best is None or ratio < best:
                    best = ratio
    return math.inf if best is None else best
