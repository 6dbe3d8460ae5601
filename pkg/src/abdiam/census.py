"""Exhaustive census of the symmetric subsets of a small abelian group.

Every quantity studied here (diameter, rho-maximality, the defining
conditions of t_rho and s_rho) depends on a set ``A`` only through its
symmetric closure ``A^pm = (-A) | {0} | A``, and maximal sets satisfy
``A = A^pm``.  So it suffices to enumerate the symmetric sets containing 0.
They are in bijection with subsets of the negation orbits ``{g, -g}`` of
``G \\ {0}``, encoded as bit masks over the orbits (orbit ``j`` = bit ``j``,
orbits ordered by their least element index).  The number of masks is
``2^((|G| - 2^rk2)/2 + 2^rk2 - 1)``.

A census computes, for every mask at once, the diameter of the set (or
:data:`INF_CODE` if it does not generate), its cardinality and whether it is
aperiodic.  The sweep is vectorised over blocks of masks; each ball step
``X -> X + A`` is a gather through the difference table of ``G``.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from functools import cached_property, lru_cache

import numpy as np

from .groups import AbelianGroup, ResourceError, as_group, get_group
from .subsets import GroupSubset

CENSUS_BUDGET = 1 << 20
INF_CODE = np.iinfo(np.int16).max
WITNESS_CAP = 64
_BLOCK = 1 << 14


def negation_orbits(group: AbelianGroup) -> list[tuple[int, ...]]:
    seen = np.zeros(group.order, dtype=bool)
    seen[0] = True
    orbits = []
    for i in range(1, group.order):
        if seen[i]:
            continue
        j = int(group.negation[i])
        seen[i] = seen[j] = True
        orbits.append((i,) if i == j else (i, j))
    return orbits


def symmetric_subset_count(group) -> int:
    return 1 << len(negation_orbits(as_group(group)))


def ball_step(x: np.ndarray, a: np.ndarray, diff: np.ndarray) -> np.ndarray:
    """Row-wise sumset ``X + A`` for boolean blocks of shape ``(N, |G|)``."""
    y = x.copy()
    present = np.flatnonzero(a.any(axis=0))
    for g in present.tolist():
        if g == 0:
            continue
        y |= a[:, g : g + 1] & x[:, diff[:, g]]
    return y


def batch_diameters(group: AbelianGroup, sets: np.ndarray) -> np.ndarray:
    """Diameter with respect to each row (rows are symmetrised first)."""
    group = as_group(group)
    a = np.asarray(sets, dtype=bool)
    a = a | a[:, group.negation]
    a[:, 0] = True
    n = group.order
    out = np.full(len(a), INF_CODE, dtype=np.int16)
    if n == 1:
        out[:] = 0
        return out
    diff = group.difference_table
    x = a.copy()
    rho = 1
    active = np.arange(len(a))
    while active.size:
        full = x.all(axis=1)
        out[active[full]] = rho
        keep = ~full
        active, x, a_act = active[keep], x[keep], a[active[keep]]
        if not active.size:
            break
        y = ball_step(x, a_act, diff)
        grew = (y != x).any(axis=1)
        # a ball that stopped growing is the generated subgroup: not all of G
        active, x = active[grew], y[grew]
        rho += 1
    return out


def batch_aperiodic(group: AbelianGroup, sets: np.ndarray) -> np.ndarray:
    group = as_group(group)
    a = np.asarray(sets, dtype=bool)
    n = group.order
    periodic = np.zeros(len(a), dtype=bool)
    if n == 1:
        return ~periodic
    diff = group.difference_table
    sizes = a.sum(axis=1)
    for g in range(1, n):
        o = int(group.orders[g])
        # a set with period containing g is a union of <g>-cosets
        cand = (~periodic) & (sizes % o == 0)
        if not cand.any():
            continue
        rows = np.flatnonzero(cand)
        periodic[rows] = (a[rows][:, diff[:, g]] == a[rows]).all(axis=1)
    return ~periodic


class SymmetricCensus:
    """Diameter, size and aperiodicity of every symmetric subset containing 0."""

    def __init__(self, group, budget: int = CENSUS_BUDGET, jobs: int = 1):
        self.group = as_group(group)
        self.orbits = negation_orbits(self.group)
        self.k = len(self.orbits)
        self.count = 1 << self.k
        if self.count > budget:
            raise ResourceError(
                f"{self.group} has {self.count} symmetric subsets, above the budget {budget}"
            )
        n = self.group.order
        inc = np.zeros((self.k, n), dtype=bool)
        for j, orb in enumerate(self.orbits):
            inc[j, list(orb)] = True
        self._incidence = inc
        self.diam = np.empty(self.count, dtype=np.int16)
        self.size = np.empty(self.count, dtype=np.int32)
        self.aperiodic = np.empty(self.count, dtype=bool)
        blocks = [(lo, min(lo + _BLOCK, self.count)) for lo in range(0, self.count, _BLOCK)]
        if jobs > 1 and len(blocks) > 1:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                list(pool.map(self._fill, blocks))
        else:
            for b in blocks:
                self._fill(b)
        self.orbit_count = np.zeros(self.count, dtype=np.int32)
        for j in range(self.k):
            self.orbit_count += (np.arange(self.count) >> j) & 1

    def sets(self, masks) -> np.ndarray:
        masks = np.asarray(masks, dtype=np.int64).reshape(-1)
        bits = ((masks[:, None] >> np.arange(self.k)) & 1).astype(bool)
        a = (bits.astype(np.uint8) @ self._incidence.astype(np.uint8)) > 0
        a[:, 0] = True
        return a

    def _fill(self, block):
        lo, hi = block
        a = self.sets(np.arange(lo, hi))
        self.diam[lo:hi] = batch_diameters(self.group, a)
        self.size[lo:hi] = a.sum(axis=1)
        self.aperiodic[lo:hi] = batch_aperiodic(self.group, a)

    def subset(self, mask: int) -> GroupSubset:
        return GroupSubset(self.group, self.sets([mask])[0])

    def mask_of(self, a: GroupSubset) -> int:
        """Orbit mask of the symmetric closure of ``a``."""
        mask = 0
        for j, orb in enumerate(self.orbits):
            if any(x in a for x in orb):
                mask |= 1 << j
        return mask

    # derived tables

    @cached_property
    def generating(self) -> np.ndarray:
        return self.diam < INF_CODE

    @cached_property
    def max_diameter(self) -> int:
        return int(self.diam[self.generating].max())

    def below(self, rho: int) -> np.ndarray:
        """Masks whose ``(rho-1)``-ball misses part of ``G``."""
        return self.diam >= rho

    @lru_cache(maxsize=None)
    def rho_maximal(self, rho: int) -> np.ndarray:
        """Masks that are maximal under inclusion subject to ``<A>_{rho-1} != G``."""
        f = self.below(rho)
        out = f.copy()
        masks = np.arange(self.count)
        for j in range(self.k):
            has = ((masks >> j) & 1).astype(bool)
            out &= has | ~f[masks | (1 << j)]
        return out

    def witnesses(self, selector: np.ndarray, value: int, cap: int = WITNESS_CAP) -> list[GroupSubset]:
        """Sets picked by ``selector`` of cardinality ``value``, ordered by element indices."""
        masks = np.flatnonzero(selector & (self.size == value))
        keyed = sorted((tuple(np.flatnonzero(row).tolist()), m) for m, row in zip(masks, self.sets(masks)))
        return [GroupSubset.from_indices(self.group, idx) for idx, _ in keyed[:cap]]

    def max_size(self, selector: np.ndarray) -> int:
        """``max |A|`` over selected masks, with ``max(empty) = 0``."""
        return int(self.size[selector].max()) if selector.any() else 0

    def t_selector(self, rho: int, require_generation: bool = True) -> np.ndarray:
        sel = self.rho_maximal(rho) & self.aperiodic
        if require_generation:
            sel &= self.generating
        return sel

    def s_selector(self, rho: int) -> np.ndarray:
        return self.below(rho) & self.generating


_jobs: int | None = None


def set_jobs(jobs: int | None) -> None:
    """Worker threads used by new censuses; ``None`` falls back to ``ABDIAM_JOBS``."""
    global _jobs
    _jobs = jobs


def census_jobs() -> int:
    return _jobs if _jobs is not None else int(os.environ.get("ABDIAM_JOBS", "1"))


@lru_cache(maxsize=64)
def _cached_census(moduli: tuple[int, ...]) -> SymmetricCensus:
    return SymmetricCensus(get_group(moduli), budget=1 << 62, jobs=census_jobs())


def census(group, budget: int = CENSUS_BUDGET) -> SymmetricCensus:
    """Shared census of ``group``; raises :class:`ResourceError` above ``budget``."""
    group = as_group(group)
    count = symmetric_subset_count(group)
    if count > budget:
        raise ResourceError(f"{group} has {count} symmetric subsets, above the budget {budget}")
    return _cached_census(group.moduli)
