"""Dense subsets of a finite abelian group and their sumsets."""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Sequence

import numpy as np

from .groups import AbelianGroup, DomainError, Element, as_group


class GroupSubset:
    """Immutable subset of ``group`` stored as a boolean vector over element indices."""

    __slots__ = ("group", "bits", "_hash")

    def __init__(self, group: AbelianGroup, bits: np.ndarray):
        bits = np.asarray(bits, dtype=bool)
        if bits.shape != (group.order,):
            raise DomainError(f"bit vector of shape {bits.shape} does not match {group}")
        if bits.flags.writeable:
            bits = bits.copy()
            bits.setflags(write=False)
        self.group = group
        self.bits = bits
        self._hash = None

    # constructors

    @classmethod
    def empty(cls, group) -> GroupSubset:
        group = as_group(group)
        return cls(group, np.zeros(group.order, dtype=bool))

    @classmethod
    def full(cls, group) -> GroupSubset:
        group = as_group(group)
        return cls(group, np.ones(group.order, dtype=bool))

    @classmethod
    def zero(cls, group) -> GroupSubset:
        return cls.from_indices(group, [0])

    @classmethod
    def from_indices(cls, group, indices: Iterable[int]) -> GroupSubset:
        group = as_group(group)
        bits = np.zeros(group.order, dtype=bool)
        idx = np.fromiter((int(i) for i in indices), dtype=np.int64)
        if idx.size and (idx.min() < 0 or idx.max() >= group.order):
            raise DomainError(f"index out of range for {group}")
        bits[idx] = True
        return cls(group, bits)

    @classmethod
    def from_elements(cls, group, elements: Iterable[Sequence[int] | int]) -> GroupSubset:
        group = as_group(group)
        idx = []
        for e in elements:
            if isinstance(e, (int, np.integer)):
                if group.rank != 1:
                    raise DomainError(f"bare integer {e} is only valid in a cyclic group")
                e = (int(e),)
            idx.append(group.index(e))
        return cls.from_indices(group, idx)

    # queries

    def __len__(self):
        return int(self.bits.sum())

    def __iter__(self) -> Iterator[int]:
        return iter(np.flatnonzero(self.bits).tolist())

    def indices(self) -> list[int]:
        return np.flatnonzero(self.bits).tolist()

    def elements(self) -> list[Element]:
        return [self.group.element(i) for i in self.indices()]

    def __contains__(self, g) -> bool:
        if isinstance(g, (int, np.integer)):
            return bool(self.bits[int(g)])
        return bool(self.bits[self.group.index(g)])

    def __eq__(self, other):
        if not isinstance(other, GroupSubset):
            return NotImplemented
        return self.group == other.group and np.array_equal(self.bits, other.bits)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.group.moduli, np.packbits(self.bits).tobytes()))
        return self._hash

    def __repr__(self):
        return f"GroupSubset({self.group}, {format_subset(self)})"

    def is_empty(self) -> bool:
        return not self.bits.any()

    def is_full(self) -> bool:
        return bool(self.bits.all())

    def issubset(self, other: GroupSubset) -> bool:
        self._check(other)
        return not (self.bits & ~other.bits).any()

    __le__ = issubset

    def _check(self, other: GroupSubset):
        if self.group != other.group:
            raise DomainError(f"subsets of different groups: {self.group} vs {other.group}")

    # set algebra

    def __or__(self, other: GroupSubset) -> GroupSubset:
        self._check(other)
        return GroupSubset(self.group, self.bits | other.bits)

    def __and__(self, other: GroupSubset) -> GroupSubset:
        self._check(other)
        return GroupSubset(self.group, self.bits & other.bits)

    def __sub__(self, other: GroupSubset) -> GroupSubset:
        self._check(other)
        return GroupSubset(self.group, self.bits & ~other.bits)

    def complement(self) -> GroupSubset:
        return GroupSubset(self.group, ~self.bits)

    def with_element(self, g) -> GroupSubset:
        bits = self.bits.copy()
        bits[g if isinstance(g, (int, np.integer)) else self.group.index(g)] = True
        return GroupSubset(self.group, bits)

    def without_element(self, g) -> GroupSubset:
        bits = self.bits.copy()
        bits[g if isinstance(g, (int, np.integer)) else self.group.index(g)] = False
        return GroupSubset(self.group, bits)

    # group actions

    def negate(self) -> GroupSubset:
        return GroupSubset(self.group, self.bits[self.group.negation])

    def translate(self, g) -> GroupSubset:
        """``S + g``."""
        gi = g if isinstance(g, (int, np.integer)) else self.group.index(g)
        minus = int(self.group.negation[int(gi)])
        return GroupSubset(self.group, self.bits[self.group.translation(minus)])

    def is_symmetric(self) -> bool:
        return np.array_equal(self.bits, self.bits[self.group.negation])

    def symmetric_closure(self) -> GroupSubset:
        return symmetric_closure(self)


def symmetric_closure(a: GroupSubset) -> GroupSubset:
    """``(-A) | {0} | A``."""
    bits = a.bits | a.bits[a.group.negation]
    bits[0] = True
    return GroupSubset(a.group, bits)


def sumset(a: GroupSubset, b: GroupSubset) -> GroupSubset:
    """Minkowski sum ``A + B``."""
    a._check(b)
    if len(a) > len(b):
        a, b = b, a
    grp = a.group
    out = np.zeros(grp.order, dtype=bool)
    for x in np.flatnonzero(a.bits):
        # (B + x)[y] = B[y - x]
        out |= b.bits[grp.translation(int(grp.negation[x]))]
    return GroupSubset(grp, out)


def sum_of(sets: Sequence[GroupSubset], group=None) -> GroupSubset:
    """``A_1 + ... + A_k``; the empty sum is ``{0}``."""
    if not sets:
        if group is None:
            raise DomainError("empty sum needs an explicit group")
        return GroupSubset.zero(group)
    out = sets[0]
    for s in sets[1:]:
        out = sumset(out, s)
    return out


def multiple(a: GroupSubset, k: int) -> GroupSubset:
    """``kA = A + ... + A`` (k summands), ``0A = {0}``."""
    out = GroupSubset.zero(a.group)
    for _ in range(k):
        out = sumset(out, a)
    return out


def dilate(a: GroupSubset, k: int) -> GroupSubset:
    """``k * A = {k a : a in A}``."""
    image = a.group.multiple_table(k)[a.bits]
    return GroupSubset.from_indices(a.group, image.tolist())


# -- literal syntax ----------------------------------------------------------

_TUPLE = re.compile(r"\(([^()]*)\)")


def parse_subset(group, text: str) -> GroupSubset:
    """Parse ``"{(0,1),(1,0)}"``, ``"{1,3}"`` (cyclic groups) or ``"idx:0,3,5"``."""
    group = as_group(group)
    text = text.strip()
    if text.startswith("idx:"):
        body = text[4:].strip()
        return GroupSubset.from_indices(group, [int(t) for t in body.split(",") if t.strip()])
    if not (text.startswith("{") and text.endswith("}")):
        raise DomainError(f"cannot parse subset literal {text!r}")
    body = text[1:-1].strip()
    if not body:
        return GroupSubset.empty(group)
    if "(" in body:
        elems = [
            tuple(int(x) for x in m.group(1).split(",") if x.strip())
            for m in _TUPLE.finditer(body)
        ]
    else:
        elems = [(int(t),) for t in body.split(",")]
    return GroupSubset.from_elements(group, elems)


def format_subset(a: GroupSubset) -> str:
    if a.group.rank == 1:
        return "{" + ",".join(str(e[0]) for e in a.elements()) + "}"
    return "{" + ",".join("(" + ",".join(map(str, e)) + ")" for e in a.elements()) + "}"
