"""Structure of generating sets that are extremal for the diameter.

Each classifier either returns a :class:`StructureWitness` whose defining
conditions have been re-checked, or a :class:`Refusal` naming the first
hypothesis that fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .diameter import INF, diam_of_set
from .extremal import ball_layer, attaining_size_range
from .groups import AbelianGroup, as_group
from .subgroups import Subgroup, generated_by, period
from .subsets import GroupSubset, symmetric_closure


@dataclass(frozen=True)
class Refusal:
    reason: str

    def __bool__(self):
        return False


@dataclass(frozen=True)
class StructureWitness:
    kind: str  # "thm22" | "thm212" | "thm213"
    h: Subgroup | None = None
    g: tuple[int, ...] | None = None
    b: GroupSubset | None = None

    def as_dict(self) -> dict:
        out = {"kind": self.kind}
        if self.h is not None:
            out["subgroup"] = self.h.carrier.indices()
            out["quotient"] = list(self.h.quotient_type.factors)
        if self.g is not None:
            out["g"] = list(self.g)
        if self.b is not None:
            out["basis"] = [list(e) for e in self.b.elements()]
        return out


def _orbits(s: GroupSubset) -> list[int]:
    """One representative (the smaller index) per pair ``{x, -x}`` in ``s``, zero excluded."""
    neg = s.group.negation
    return [x for x in s if x != 0 and x <= int(neg[x])]


def attains_diam_structural(group, a: GroupSubset) -> StructureWitness | Refusal:
    """Search for a standard generating set ``B`` with ``B^pm <= A^pm <= (B + pair sums)^pm``.

    The pair sums are ``b_1+b_2, b_3+b_4, ...`` over the generators of order 3;
    since the generators may be reordered and negated, a leftover orbit of
    ``A^pm`` is admissible when it is ``+-x +- y`` for two order-3 generators,
    and distinct leftovers use disjoint pairs.
    """
    g = as_group(group)
    s = symmetric_closure(a)
    _, hi = attaining_size_range(g)
    if len(s) > hi:
        return Refusal("size outside the admissible range")
    factors = sorted(g.type.factors)
    reps = _orbits(s)
    orders = g.orders
    for chosen in combinations(reps, g.rank):
        if sorted(int(orders[x]) for x in chosen) != factors:
            continue
        if len(generated_by(g, chosen)) != g.order:
            continue
        extra = [x for x in reps if x not in chosen]
        if _matches_pair_sums(g, [x for x in chosen if orders[x] == 3], extra):
            return StructureWitness("thm22", b=GroupSubset.from_indices(g, chosen))
    return Refusal("no standard generating set fits")


def _matches_pair_sums(g: AbelianGroup, threes: list[int], extra: list[int]) -> bool:
    used: set[int] = set()
    for e in extra:
        hit = None
        for x, y in combinations(threes, 2):
            for sy in (y, int(g.negation[y])):
                s = g.add_index(x, sy)
                if s == e or s == int(g.negation[e]):
                    hit = (x, y)
        if hit is None or used & set(hit):
            return False
        used |= set(hit)
    return True


def _generates_quotient(h: Subgroup, gi: int) -> bool:
    return int(h.quotient.orders[h.projection_map[gi]]) == h.quotient.order and len(h.quotient.type.factors) <= 1


def _triple(h: Subgroup, gi: int) -> GroupSubset:
    grp = h.group
    return h.carrier | h.coset(gi) | h.coset(int(grp.negation[gi]))


def classify_triple_coset(group, a: GroupSubset, rho: int) -> StructureWitness | Refusal:
    """``(H, g)`` with ``A = (-g+H) | H | (g+H)`` for a largest diameter-``rho`` set."""
    g = as_group(group)
    if rho < 4:
        return Refusal("rho < 4")
    d = diam_of_set(g, a)
    if d == INF:
        return Refusal("A does not generate G")
    if d < rho:
        return Refusal("diameter below rho")
    if 2 * rho * len(a) != 3 * g.order:
        return Refusal("|A| differs from 3|G|/(2 rho)")
    h = period(a)
    gi = next((x for x in a if x not in h), None)
    if gi is None or h.quotient_type.factors != (2 * rho,):
        return Refusal("no triple-coset structure found")
    if not _generates_quotient(h, gi) or _triple(h, gi) != a:
        return Refusal("no triple-coset structure found")
    return StructureWitness("thm212", h=h, g=g.element(gi))


def large_set_structure(group, a: GroupSubset, rho: int) -> StructureWitness | Refusal:
    """``H = period(<A>_{rho-1})`` and ``g`` for generating sets with large ``|A^pm|``."""
    g = as_group(group)
    if rho < 4:
        return Refusal("rho < 4")
    d = diam_of_set(g, a)
    if d == INF:
        return Refusal("A does not generate G")
    if d < rho:
        return Refusal("diameter below rho")
    s = symmetric_closure(a)
    if not Fraction(len(s)) > Fraction(4 * g.order, 3 * rho - 1):
        return Refusal("|A^pm| <= 4|G|/(3 rho - 1)")
    h = period(ball_layer(a, rho - 1))
    q = h.index
    if not (len(h.quotient_type.factors) == 1 and 2 * rho <= q and Fraction(q) <= Fraction(9 * rho, 4) - 1):
        return Refusal(f"conclusion fails: quotient {h.quotient_type} outside the cyclic bounds")
    if not Fraction(len(s)) > (3 - Fraction(rho - 3, 3 * rho - 1)) * h.order:
        return Refusal("conclusion fails: |A^pm| too small relative to |H|")
    for gi in s:
        if gi in h or not _generates_quotient(h, gi):
            continue
        if a.issubset(_triple(h, gi)):
            return StructureWitness("thm213", h=h, g=g.element(gi))
    return Refusal("conclusion fails: A is not covered by three cosets of H")


thm212_classify = classify_triple_coset
thm213_structure = large_set_structure
