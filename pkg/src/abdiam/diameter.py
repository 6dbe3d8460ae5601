"""Lengths, diameters and the lifting/projection of generating sets.

Two diameter algorithms are kept side by side and checked against each
other on every call: the layered sumsets ``<A>_0 <= <A>_1 <= ...`` and a
breadth-first search of the Cayley graph.  The exhaustive maximum over all
generating sets comes from :mod:`abdiam.census`, a third implementation.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .census import CENSUS_BUDGET, census
from .groups import AbelianGroup, DomainError, as_group, lcm
from .subgroups import Subgroup, period
from .subsets import GroupSubset, sumset, symmetric_closure

INF = math.inf


class ConsistencyError(AssertionError):
    """Two independent computations of the same quantity disagree."""


@dataclass(frozen=True)
class LayeredBall:
    group: AbelianGroup
    base: GroupSubset
    layers: tuple[GroupSubset, ...]
    lengths: np.ndarray  # float, inf for elements outside <A>
    stabilized: bool

    def length(self, g) -> int | float:
        gi = g if isinstance(g, (int, np.integer)) else self.group.index(g)
        x = self.lengths[int(gi)]
        return int(x) if np.isfinite(x) else INF

    def layer(self, rho: int) -> GroupSubset:
        """``<A>_rho`` (the chain is constant after stabilisation)."""
        if rho < len(self.layers):
            return self.layers[rho]
        if not self.stabilized:
            raise DomainError(f"ball was truncated at radius {len(self.layers) - 1}")
        return self.layers[-1]


def bfs_lengths(group: AbelianGroup, a: GroupSubset) -> np.ndarray:
    """Graph distance from 0 in the Cayley graph of ``A^pm``."""
    group = as_group(group)
    gens = [int(g) for g in symmetric_closure(a).indices() if g != 0]
    steps = [group.translation(g) for g in gens]
    dist = np.full(group.order, INF)
    dist[0] = 0
    queue = deque([0])
    while queue:
        x = queue.popleft()
        d = dist[x] + 1
        for p in steps:
            y = int(p[x])
            if dist[y] == INF:
                dist[y] = d
                queue.append(y)
    return dist


def ball(group, a: GroupSubset, rho_max: int | float = INF) -> LayeredBall:
    """Layers ``<A>_rho = rho A^pm`` up to ``rho_max`` or stabilisation."""
    group = as_group(group)
    base = symmetric_closure(a)
    layers = [GroupSubset.zero(group)]
    stabilized = False
    while len(layers) - 1 < rho_max:
        nxt = sumset(layers[-1], base)
        if nxt == layers[-1]:
            stabilized = True
            break
        layers.append(nxt)
    else:
        stabilized = layers[-1].is_full() or sumset(layers[-1], base) == layers[-1]

    from_layers = np.full(group.order, INF)
    prev = np.zeros(group.order, dtype=bool)
    for rho, layer in enumerate(layers):
        from_layers[layer.bits & ~prev] = rho
        prev = layer.bits
    dist = bfs_lengths(group, a)
    inside = prev if not stabilized else np.ones(group.order, dtype=bool)
    if not np.array_equal(from_layers[inside], dist[inside]):
        raise ConsistencyError(f"layered and BFS lengths differ for {a}")
    return LayeredBall(group, base, tuple(layers), dist, stabilized)


def length(group, a: GroupSubset, g) -> int | float:
    return ball(group, a).length(g)


def diam_of_set(group, a: GroupSubset) -> int | float:
    """``diam_A(G)``, or ``inf`` when ``A`` does not generate ``G``."""
    b = ball(group, a)
    by_layers = len(b.layers) - 1 if b.layers[-1].is_full() else INF
    by_lengths = b.lengths.max()
    by_lengths = int(by_lengths) if np.isfinite(by_lengths) else INF
    if by_layers != by_lengths:
        raise ConsistencyError(f"diameter characterisations disagree for {a}")
    return by_layers


def generates(group, a: GroupSubset) -> bool:
    return diam_of_set(group, a) != INF


def diam_formula(group) -> int:
    """Absolute diameter ``sum floor(m_i / 2)`` over the invariant factors."""
    return sum(m // 2 for m in as_group(group).type.factors)


@dataclass(frozen=True)
class DiamBrute:
    value: int
    argmax_sets: list[GroupSubset]


def diam_brute(group, budget: int = CENSUS_BUDGET) -> DiamBrute:
    """Maximum of ``diam_A(G)`` over all generating sets, by exhaustion."""
    c = census(group, budget)
    value = c.max_diameter
    return DiamBrute(value, _all_attaining(c, value))


def _all_attaining(c, value: int) -> list[GroupSubset]:
    masks = np.flatnonzero(c.diam == value)
    rows = c.sets(masks)
    keyed = sorted((int(r.sum()), tuple(np.flatnonzero(r).tolist())) for r in rows)
    return [GroupSubset.from_indices(c.group, idx) for _, idx in keyed]


def lift(group, h: Subgroup, a_bar: GroupSubset) -> GroupSubset:
    """Full preimage of a symmetric generating set of ``G/H``, ``H`` proper."""
    if h.is_whole() and not h.is_trivial():
        raise DomainError("H must be a proper subgroup")
    if not a_bar.is_symmetric() or 0 not in a_bar:
        raise DomainError("the quotient set must equal its symmetric closure")
    a = h.preimage(a_bar)
    if len(a) != h.order * len(a_bar):
        raise ConsistencyError("preimage has the wrong size")
    if diam_of_set(group, a) != diam_of_set(h.quotient, a_bar):
        raise ConsistencyError("lifting changed the diameter")
    if not h.carrier.issubset(period(a).carrier):
        raise ConsistencyError("lifted set is not a union of H-cosets")
    return a


def project(group, h: Subgroup, a: GroupSubset) -> GroupSubset:
    """Image of a symmetric set ``A`` in ``G/H``, for ``H <= period(A)``."""
    if a != symmetric_closure(a):
        raise DomainError("A must equal its symmetric closure")
    per = period(a)
    if not h.carrier.issubset(per.carrier):
        raise DomainError("H is not contained in the period of A")
    a_bar = h.image(a)
    if diam_of_set(group, a) != diam_of_set(h.quotient, a_bar):
        raise ConsistencyError("projection changed the diameter")
    if h == per and not period(a_bar).is_trivial():
        raise ConsistencyError("projection modulo the full period is periodic")
    return a_bar


# -- auxiliary statements ------------------------------------------------------


def lcm_inequality(ns: Sequence[int]) -> tuple[bool, bool]:
    """``(hypothesis, conclusions)`` for the lcm inequality on ``n_1..n_r``, ``r >= 2``.

    Hypothesis: dropping any single ``n_i`` strictly lowers the lcm.
    Conclusions: ``lcm >= 2^(r-1) max n_i``, ``lcm > sum n_i`` and
    ``floor(lcm/2) > sum floor(n_i/2)``.
    """
    ns = list(ns)
    r = len(ns)
    if r < 2:
        raise DomainError("need at least two integers")
    total = lcm(*ns)
    hyp = all(lcm(*(ns[:i] + ns[i + 1 :])) < total for i in range(r))
    concl = (
        total >= 2 ** (r - 1) * max(ns)
        and total > sum(ns)
        and total // 2 > sum(n // 2 for n in ns)
    )
    return hyp, concl


def size_diameter_bound(group, size: int) -> Fraction:
    """``max{2, 3|G| / (2|A|)}``, an upper bound for ``diam_A(G)``."""
    n = as_group(group).order
    return max(Fraction(2), Fraction(3 * n, 2 * size))


def direct_sum(g1: AbelianGroup, g2: AbelianGroup) -> AbelianGroup:
    return AbelianGroup(g1.moduli + g2.moduli)


def embed(total: AbelianGroup, part: GroupSubset, offset: int) -> GroupSubset:
    """Place a subset of a summand into ``total`` at coordinate ``offset``."""
    r = total.rank
    els = []
    for e in part.elements():
        c = [0] * r
        c[offset : offset + len(e)] = e
        els.append(tuple(c))
    return GroupSubset.from_elements(total, els)
