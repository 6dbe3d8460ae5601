"""Generating sets of ``Z_2^r`` as check matrices of binary linear codes.

The non-zero elements of ``A`` are the columns of an ``r x n`` check matrix;
the covering radius of that code is ``diam_A(Z_2^r)``.  Column ``j`` is read
as the integer whose binary digits (first row most significant) are the
column entries, which is exactly the element index of ``Z_2^r``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .census import census
from .diameter import ConsistencyError, INF, diam_of_set
from .extremal import ball_layer, t_upper_bound, witness_problem
from .groups import AbelianGroup, DomainError, get_group
from .subgroups import Subgroup, is_aperiodic
from .subsets import GroupSubset, sumset


def elementary_two_group(r: int) -> AbelianGroup:
    return get_group((2,) * r)


def _require_elementary(g: AbelianGroup) -> int:
    if any(m != 2 for m in g.moduli):
        raise DomainError(f"{g} is not elementary abelian of exponent 2")
    return g.rank


@dataclass(frozen=True)
class BinaryCode:
    check_matrix: np.ndarray  # uint8, shape (r, n)

    def __post_init__(self):
        h = np.asarray(self.check_matrix, dtype=np.uint8)
        if h.ndim != 2 or (h > 1).any():
            raise DomainError("check matrix must be a 2-d 0/1 array")
        h = h.copy()
        h.setflags(write=False)
        object.__setattr__(self, "check_matrix", h)

    @property
    def codimension(self) -> int:
        return self.check_matrix.shape[0]

    @property
    def length(self) -> int:
        return self.check_matrix.shape[1]

    def column_syndromes(self) -> list[int]:
        r = self.codimension
        weights = 1 << np.arange(r - 1, -1, -1, dtype=np.int64)
        return (weights @ self.check_matrix.astype(np.int64)).tolist() if r else [0] * self.length

    def distance_at_least_three(self) -> bool:
        cols = self.column_syndromes()
        return 0 not in cols and len(set(cols)) == len(cols)

    def to_text(self) -> str:
        return "\n".join("".join(str(int(x)) for x in row) for row in self.check_matrix)

    @classmethod
    def from_text(cls, text: str) -> BinaryCode:
        rows = [line.strip() for line in text.splitlines() if line.strip()]
        if not rows:
            raise DomainError("empty check matrix")
        if len({len(r) for r in rows}) != 1 or any(set(r) - {"0", "1"} for r in rows):
            raise DomainError("check matrix rows must be equal-length strings of 0 and 1")
        return cls(np.array([[int(c) for c in r] for r in rows], dtype=np.uint8))

    @classmethod
    def read(cls, path) -> BinaryCode:
        return cls.from_text(Path(path).read_text())


def set_to_code(a: GroupSubset) -> BinaryCode:
    r = _require_elementary(a.group)
    cols = [i for i in a if i != 0]
    h = np.zeros((r, len(cols)), dtype=np.uint8)
    for j, i in enumerate(cols):
        h[:, j] = a.group.element(i)
    return BinaryCode(h)


def code_to_set(c: BinaryCode) -> GroupSubset:
    g = elementary_two_group(c.codimension)
    return GroupSubset.from_indices(g, [0] + c.column_syndromes())


def covering_radius(c: BinaryCode) -> int | float:
    """Syndrome-space BFS; cross-checked against the diameter of the column set."""
    r = c.codimension
    cols = sorted(set(c.column_syndromes()) - {0})
    dist = {0: 0}
    frontier = [0]
    while frontier:
        nxt = []
        for s in frontier:
            for col in cols:
                t = s ^ col
                if t not in dist:
                    dist[t] = dist[s] + 1
                    nxt.append(t)
        frontier = nxt
    radius = max(dist.values()) if len(dist) == 1 << r else INF
    if radius != diam_of_set(elementary_two_group(r), code_to_set(c)):
        raise ConsistencyError("syndrome BFS disagrees with the diameter")
    return radius


def sum_free_check(a: GroupSubset) -> bool:
    """No ``a1 + a2`` (repetition allowed) lies in ``A``.

    In ``Z_2^r`` this is cross-checked against ``a not in <A + a>_3`` for
    every ``a`` in ``A``: that ball holds ``a`` exactly when three members of
    ``A`` sum to zero.
    """
    free = not (sumset(a, a) & a).bits.any()
    g = a.group
    if g.rank and all(m == 2 for m in g.moduli):
        for x in a:
            if (x in ball_layer(a.translate(x), 3)) == free:
                raise ConsistencyError("translate criterion disagrees with the direct check")
    return free


def is_cap(a: GroupSubset) -> bool:
    """No three elements of ``A`` (a subset of ``Z_2^r``, zero excluded) sum to 0."""
    _require_elementary(a.group)
    return 0 not in a and sum_free_check(a)


def spans(a: GroupSubset) -> bool:
    """``A`` lies in no hyperplane, i.e. no index-2 subgroup contains it."""
    return diam_of_set(a.group, a) != INF


@dataclass
class BinaryRho4Report:
    r: int
    t4: int | None
    s4: int | None
    certified: bool
    t4_lower: int
    s4_lower: int
    t4_upper: int | None
    expected_t4: int
    expected_s4: int
    notes: list[str] = field(default_factory=list)
    witnesses: dict = field(default_factory=dict)

    @property
    def max_quasi_perfect_length(self) -> int | None:
        return None if self.s4 is None else self.s4 - 1


def binary_rho4_report(r: int, seed: int = 0, trials: int = 400) -> BinaryRho4Report:
    """``t_4`` and ``s_4`` of ``Z_2^r``: exhaustive at ``r = 4``, lower bounds beyond."""
    if r < 4:
        raise DomainError("r must be >= 4")
    g = elementary_two_group(r)
    expected_t, expected_s = 2 ** (r - 2) + 1, 5 * 2 ** (r - 4)
    if r == 4:
        c = census(g)
        t, s = c.max_size(c.t_selector(4)), c.max_size(c.s_selector(4))
        wt = c.witnesses(c.t_selector(4), t, 1)[0]
        ws = c.witnesses(c.s_selector(4), s, 1)[0]
        return BinaryRho4Report(
            r, t, s, True, t, s, t, expected_t, expected_s,
            notes=["exhaustive over all symmetric subsets"],
            witnesses={"t4": wt.indices(), "s4": ws.indices()},
        )
    s_wit = _lifted_s4_witness(r)
    t_wit = _greedy_t4_witness(g, seed, trials)
    t_low = len(t_wit) if t_wit is not None else 0
    upper = t_upper_bound(g, 4)
    notes = ["lower bounds only: exhaustive search is out of budget"]
    if t_low == upper:
        notes.append("t_4 lower bound meets the upper bound")
    return BinaryRho4Report(
        r, None, None, False, t_low, len(s_wit), upper, expected_t, expected_s,
        notes=notes,
        witnesses={"t4": t_wit.indices() if t_wit is not None else None, "s4": s_wit.indices()},
    )


def _lifted_s4_witness(r: int) -> GroupSubset:
    """Pull an ``s_4`` witness of ``Z_2^4`` back along the projection onto the last four coordinates."""
    small = elementary_two_group(4)
    c = census(small)
    w = c.witnesses(c.s_selector(4), c.max_size(c.s_selector(4)), 1)[0]
    g = elementary_two_group(r)
    kernel = GroupSubset.from_elements(g, [e[: r - 4] + (0,) * 4 for e in g.elements()])
    a = Subgroup(kernel).preimage(w)
    problem = witness_problem("s", g, a, 4, len(a))
    if problem:
        raise ConsistencyError(f"lifted witness fails: {problem}")
    return a


def _greedy_t4_witness(g: AbelianGroup, seed: int, trials: int) -> GroupSubset | None:
    """Largest aperiodic 4-maximal generating set found by seeded random greedy extension."""
    rng = random.Random(seed)
    best = None
    for _ in range(trials):
        order = list(range(1, g.order))
        rng.shuffle(order)
        a = GroupSubset.zero(g)
        for x in order:
            b = a.with_element(x)
            if not ball_layer(b, 3).is_full():
                a = b
        if best is not None and len(a) <= len(best):
            continue
        if is_aperiodic(a) and spans(a):
            best = a
    if best is not None and witness_problem("t", g, best, 4, len(best)):
        raise ConsistencyError("greedy witness fails re-verification")
    return best


verify_davydov_tombak = binary_rho4_report
