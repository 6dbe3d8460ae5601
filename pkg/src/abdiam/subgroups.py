"""Subgroups, quotient maps and periods of subsets."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .groups import (
    AbelianGroup,
    DomainError,
    Element,
    GroupType,
    ResourceError,
    as_group,
    get_group,
    smith_normal_form,
)
from .subsets import GroupSubset, sumset

SUBGROUP_BUDGET = 512


@dataclass(frozen=True, eq=False)
class Subgroup:
    """A subgroup ``H <= G`` with its quotient ``G/H`` in canonical coordinates."""

    carrier: GroupSubset

    @property
    def group(self) -> AbelianGroup:
        return self.carrier.group

    @property
    def order(self) -> int:
        return len(self.carrier)

    @property
    def index(self) -> int:
        return self.group.order // self.order

    def __len__(self):
        return self.order

    def __contains__(self, g) -> bool:
        return g in self.carrier

    def __eq__(self, other):
        return isinstance(other, Subgroup) and self.carrier == other.carrier

    def __hash__(self):
        return hash(self.carrier)

    def __repr__(self):
        return f"Subgroup(order={self.order} in {self.group}, quotient={self.quotient_type})"

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_whole(self) -> bool:
        return self.order == self.group.order

    @cached_property
    def generators(self) -> list[int]:
        """A short generating list (indices), picked greedily by index."""
        span = GroupSubset.zero(self.group)
        gens = []
        for i in self.carrier:
            if i not in span:
                gens.append(i)
                span = generated_by(self.group, gens)
        return gens

    @cached_property
    def _quotient_data(self):
        grp = self.group
        r = grp.rank
        rows = [[m if i == j else 0 for j in range(r)] for i, m in enumerate(grp.moduli)]
        rows += [list(grp.element(i)) for i in self.generators]
        if r == 0:
            return get_group(()), np.zeros((0, 0), dtype=np.int64), []
        diag, v = smith_normal_form(rows)
        keep = [i for i, d in enumerate(diag) if d != 1]
        quotient = get_group(tuple(diag[i] for i in keep))
        return quotient, np.asarray(v, dtype=object), keep

    @property
    def quotient(self) -> AbelianGroup:
        return self._quotient_data[0]

    @property
    def quotient_type(self) -> GroupType:
        return self.quotient.type

    def project(self, g: Sequence[int] | int) -> Element:
        """Image of ``g`` in ``G/H`` (canonical coordinates of the quotient)."""
        grp = self.group
        if isinstance(g, (int, np.integer)):
            g = grp.element(int(g))
        quotient, v, keep = self._quotient_data
        if not keep:
            return ()
        y = [sum(int(g[i]) * int(v[i][j]) for i in range(grp.rank)) for j in keep]
        return tuple(x % m for x, m in zip(y, quotient.moduli))

    @cached_property
    def projection_map(self) -> np.ndarray:
        """``P[i]`` = quotient index of the image of element ``i``."""
        quotient, v, keep = self._quotient_data
        if not keep:
            return np.zeros(self.group.order, dtype=np.int64)
        vv = np.asarray([[int(v[i][j]) for j in keep] for i in range(self.group.rank)], dtype=np.int64)
        y = self.group.coords @ vv
        return quotient._encode(y)

    def image(self, a: GroupSubset) -> GroupSubset:
        return GroupSubset.from_indices(self.quotient, np.unique(self.projection_map[a.bits]).tolist())

    def preimage(self, a_bar: GroupSubset) -> GroupSubset:
        if a_bar.group != self.quotient:
            raise DomainError(f"subset lives in {a_bar.group}, expected quotient {self.quotient}")
        return GroupSubset(self.group, a_bar.bits[self.projection_map])

    def coset(self, g) -> GroupSubset:
        return self.carrier.translate(g)


def generated_by(group: AbelianGroup, gens: Iterable[int | Sequence[int]]) -> GroupSubset:
    """Carrier of the subgroup generated by ``gens``."""
    group = as_group(group)
    span = GroupSubset.zero(group)
    for g in gens:
        gi = g if isinstance(g, (int, np.integer)) else group.index(g)
        if gi in span:
            continue
        cyc = [0]
        x = int(gi)
        while x != 0:
            cyc.append(x)
            x = group.add_index(x, int(gi))
        span = sumset(span, GroupSubset.from_indices(group, cyc))
    return span


def subgroup_generated_by(group, gens) -> Subgroup:
    return Subgroup(generated_by(as_group(group), gens))


def trivial_subgroup(group) -> Subgroup:
    return Subgroup(GroupSubset.zero(as_group(group)))


def whole_group(group) -> Subgroup:
    return Subgroup(GroupSubset.full(as_group(group)))


def is_subgroup(a: GroupSubset) -> bool:
    if 0 not in a:
        return False
    return sumset(a, a.negate()) == a


def enumerate_subgroups(group, budget: int = SUBGROUP_BUDGET) -> list[Subgroup]:
    """Every subgroup exactly once, in breadth-first closure order.

    Starting from ``{0}``, each known subgroup is extended by one element at a
    time; carriers are deduplicated by their bit vectors.
    """
    group = as_group(group)
    if group.order > budget:
        raise ResourceError(f"|G| = {group.order} exceeds the subgroup budget {budget}")
    cyclic = [generated_by(group, [g]) for g in range(group.order)]
    start = GroupSubset.zero(group)
    seen = {start: Subgroup(start)}
    frontier = [start]
    while frontier:
        nxt = []
        for h in frontier:
            for g in range(group.order):
                if g in h:
                    continue
                k = sumset(h, cyclic[g])
                if k not in seen:
                    seen[k] = Subgroup(k)
                    nxt.append(k)
        frontier = nxt
    return list(seen.values())


def quotient_type(group, h: Subgroup) -> GroupType:
    return h.quotient_type


def order_modulo(h: Subgroup, g: int | Sequence[int]) -> int:
    """Least ``n >= 1`` with ``n g`` in ``H``."""
    grp = h.group
    gi = g if isinstance(g, (int, np.integer)) else grp.index(g)
    n, x = 1, int(gi)
    while x not in h:
        x = grp.add_index(x, int(gi))
        n += 1
    return n


def period(s: GroupSubset) -> Subgroup:
    """Stabiliser ``{g : S + g = S}``; the empty set and ``G`` have period ``G``."""
    grp = s.group
    if s.is_empty() or s.is_full():
        return whole_group(grp)
    bits = s.bits
    # g must map a fixed member x0 of S back into S, so g lies in S - x0
    x0 = int(np.flatnonzero(bits)[0])
    cand = np.flatnonzero(bits[grp.translation(x0)])
    stab = [0]
    for g in cand.tolist():
        if g == 0:
            continue
        if np.array_equal(bits[grp.translation(int(grp.negation[g]))], bits):
            stab.append(g)
    return Subgroup(GroupSubset.from_indices(grp, stab))


def is_aperiodic(s: GroupSubset) -> bool:
    return period(s).is_trivial()


def index_two_subgroups(group) -> list[Subgroup]:
    """Kernels of the non-zero homomorphisms ``G -> Z_2``, in a fixed order."""
    grp = as_group(group)
    even = [i for i, m in enumerate(grp.moduli) if m % 2 == 0]
    out = []
    for mask in range(1, 1 << len(even)):
        chosen = [even[k] for k in range(len(even)) if mask >> k & 1]
        parity = grp.coords[:, chosen].sum(axis=1) % 2
        out.append(Subgroup(GroupSubset(grp, parity == 0)))
    return out


def find_complement(group, h: Subgroup) -> Subgroup | None:
    """Least subgroup ``K`` (enumeration order) with ``G = K (+) H``."""
    grp = as_group(group)
    for k in enumerate_subgroups(grp):
        if k.order * h.order == grp.order and len(k.carrier & h.carrier) == 1:
            return k
    return None
