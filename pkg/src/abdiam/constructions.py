"""Explicit extremal sets, each returned with re-checked claims.

Wherever a choice is needed (an element of order 2, an index-2 subgroup,
one element out of each pair ``{g, -g}``), the least element index that
meets the stated conditions is taken, so every construction is
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .census import census
from .diameter import ConsistencyError, INF, diam_formula, diam_of_set
from .extremal import (
    ball_layer,
    cyclic_t,
    is_rho_maximal,
    t3_s3_formula,
    t_diam_formula,
)
from .groups import AbelianGroup, DomainError, as_group, get_group, group_invariants
from .subgroups import Subgroup, enumerate_subgroups, index_two_subgroups, is_aperiodic, period
from .subsets import GroupSubset, format_subset, sumset, symmetric_closure


@dataclass(frozen=True)
class Claim:
    name: str
    expected: object
    observed: object

    @property
    def ok(self) -> bool:
        return self.expected == self.observed


@dataclass(frozen=True)
class CertifiedSet:
    """A set together with the claims made about it and their observed values."""

    family: str
    group: AbelianGroup
    set: GroupSubset
    claims: list[Claim]
    params: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.claims)

    def failed(self) -> list[Claim]:
        return [c for c in self.claims if not c.ok]

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "group": list(self.group.moduli),
            "params": self.params,
            "set": format_subset(self.set),
            "indices": self.set.indices(),
            "claims": [
                {"name": c.name, "expected": _jsonable(c.expected), "observed": _jsonable(c.observed), "ok": c.ok}
                for c in self.claims
            ],
        }


def _jsonable(x):
    if x == INF:
        return "inf"
    if isinstance(x, GroupSubset):
        return x.indices()
    return x


Check = tuple[str, object, Callable[[GroupSubset], object]]


def certify(family: str, group, a: GroupSubset, checks: list[Check], strict: bool = True, **params) -> CertifiedSet:
    claims = [Claim(name, expected, fn(a)) for name, expected, fn in checks]
    out = CertifiedSet(family, as_group(group), a, claims, params)
    if strict and not out.ok:
        bad = ", ".join(f"{c.name}: expected {c.expected}, got {c.observed}" for c in out.failed())
        raise ConsistencyError(f"{family} on {group}: {bad}")
    return out


# claim builders


def _size(n: int) -> Check:
    return ("size", n, len)


def _aperiodic() -> Check:
    return ("aperiodic", True, is_aperiodic)


def _generates() -> Check:
    return ("generates", True, lambda a: diam_of_set(a.group, a) != INF)


def _diam(d) -> Check:
    return ("diameter", d, lambda a: diam_of_set(a.group, a))


def _diam_at_least(rho: int) -> Check:
    return (f"diameter>={rho}", True, lambda a: diam_of_set(a.group, a) >= rho)


def _maximal(rho: int) -> Check:
    return (f"{rho}-maximal", True, lambda a: is_rho_maximal(a.group, a, rho))


def _ball_misses(rho: int, missing: GroupSubset) -> Check:
    return (f"G minus <A>_{rho}", missing.indices(), lambda a: ball_layer(a, rho).complement().indices())


def _excludes(rho: int, g) -> Check:
    return (f"{g} not in <A>_{rho}", True, lambda a: g not in ball_layer(a, rho))


# -- constructors --------------------------------------------------------------


def basis(group: AbelianGroup) -> list[tuple[int, ...]]:
    r = group.rank
    return [tuple(int(i == j) for j in range(r)) for i in range(r)]


def standard_generating_set(group, strict: bool = True) -> CertifiedSet:
    g = as_group(group)
    a = GroupSubset.from_elements(g, basis(g))
    return certify("standard", g, a, [_size(g.rank), _diam(diam_formula(g))], strict)


def extremal_diam_family(group, strict: bool = True) -> list[CertifiedSet]:
    """Sets between ``B^pm`` and ``(B + pair sums of order-3 generators)^pm``.

    The last entry is the largest member.
    """
    g = as_group(group)
    b = basis(g)
    threes = [i for i, m in enumerate(g.moduli) if m == 3]
    sums = [g.add(b[threes[2 * i]], b[threes[2 * i + 1]]) for i in range(len(threes) // 2)]
    base = symmetric_closure(GroupSubset.from_elements(g, b))
    d = diam_formula(g)
    out = []
    for mask in range(1 << len(sums)):
        extra = [s for i, s in enumerate(sums) if mask >> i & 1]
        a = symmetric_closure(base | GroupSubset.from_elements(g, extra))
        checks = [_diam(d)]
        if mask == (1 << len(sums)) - 1:
            checks += [_aperiodic()]
            if d >= 2:
                checks += [_size(t_diam_formula(g)), _maximal(d)]
        out.append(certify("diam-extremal", g, a, checks, strict, pair_sums=len(extra)))
    return out


def cyclic_interval_set(m: int, rho: int, strict: bool = True) -> CertifiedSet:
    if not (rho >= 2 and 2 * rho <= m):
        raise DomainError(f"rho={rho} outside [2, {m}/2]")
    g = get_group((m,))
    k = (m - 2) // (2 * (rho - 1))
    a = GroupSubset.from_elements(g, [x % m for x in range(-k, k + 1)])
    checks = [_size(cyclic_t(m, rho)), _diam_at_least(rho), _maximal(rho), _aperiodic(), _generates()]
    return certify("cyclic-interval", g, a, checks, strict, m=m, rho=rho, k=k)


def odd_halfset(group, strict: bool = True) -> CertifiedSet:
    g = as_group(group)
    if g.order % 2 == 0 or g.order == 1:
        raise DomainError("need a non-trivial group of odd order")
    picks = [i for i in range(1, g.order) if i < int(g.negation[i])]
    a = GroupSubset.from_indices(g, picks)
    checks = [
        _size((g.order - 1) // 2),
        ("0 not in 2A", True, lambda s: 0 not in sumset(s, s)),
        _aperiodic(),
    ]
    return certify("odd-halfset", g, a, checks, strict)


def _order_two(g: AbelianGroup) -> list[int]:
    return [i for i in range(1, g.order) if g.orders[i] == 2]


def even_coset_set(group, variant: str, strict: bool = True) -> CertifiedSet:
    """Large 3-maximal (or diameter >= 3) sets in groups of even order.

    ``"ii"``: ``{0} | (K+h) - {h}`` with ``h`` of order 2 and ``G = K (+) <h>``.
    ``"iii"``: ``{0} | (K+h) - {h,-h}`` with ``ord(h) > 4`` and ``[G:K] = 2``, ``h`` not in ``K``.
    ``"8.10"``: ``{(0,0),(1,0),(0,1),(0,3)}`` in ``Z_2 (+) Z_4``, pulled back along a
    quotient map onto ``Z_2 (+) Z_4`` in larger groups.
    """
    g = as_group(group)
    inv = group_invariants(g)
    if variant == "ii":
        if not inv.rk2 > inv.rk2_doubled or g.type.factors == (2, 2):
            raise DomainError("variant ii needs rk2(G) > rk2(2G) and G not Z2+Z2")
        h, k = _first_outside_index_two(g, _order_two(g))
        a = _coset_minus(g, k, h, [h])
        checks = [
            _size(g.order // 2),
            _maximal(3),
            _aperiodic(),
            _ball_misses(2, GroupSubset.from_indices(g, [h])),
        ]
        return certify("even-coset-ii", g, a, checks, strict, h=g.element(h))
    if variant == "iii":
        if not (inv.rk2 == inv.rk2_doubled >= 1 and inv.exponent > 4):
            raise DomainError("variant iii needs rk2(G) = rk2(2G) >= 1 and exp(G) > 4")
        cands = [i for i in range(g.order) if g.orders[i] > 4]
        h, k = _first_outside_index_two(g, cands)
        mh = int(g.negation[h])
        a = _coset_minus(g, k, h, [h, mh])
        checks = [
            _size(g.order // 2 - 1),
            _maximal(3),
            _aperiodic(),
            _ball_misses(2, GroupSubset.from_indices(g, [h, mh])),
        ]
        return certify("even-coset-iii", g, a, checks, strict, h=g.element(h))
    if variant == "8.10":
        small = get_group((2, 4))
        a_bar = GroupSubset.from_elements(small, [(0, 0), (1, 0), (0, 1), (0, 3)])
        if g == small:
            a, params = a_bar, {}
        else:
            hsub = next((s for s in enumerate_subgroups(g) if s.quotient_type.factors == (2, 4)), None)
            if hsub is None:
                raise DomainError(f"{g} has no quotient isomorphic to Z2+Z4")
            a = hsub.preimage(a_bar)
            params = {"kernel_order": hsub.order}
        checks = [_size(g.order // 2), _generates(), _diam_at_least(3)]
        return certify("even-coset-8.10", g, a, checks, strict, **params)
    raise DomainError(f"unknown variant {variant!r}")


def _first_outside_index_two(g: AbelianGroup, candidates) -> tuple[int, Subgroup]:
    kernels = index_two_subgroups(g)
    for h in candidates:
        for k in kernels:
            if h not in k:
                return h, k
    raise DomainError(f"no suitable element and index-2 subgroup in {g}")


def _coset_minus(g: AbelianGroup, k: Subgroup, h: int, drop: list[int]) -> GroupSubset:
    a = k.coset(h) | GroupSubset.zero(g)
    for x in drop:
        a = a.without_element(x)
    return a


def odd_noncyclic_set(group, strict: bool = True) -> CertifiedSet:
    """Aperiodic generating set of diameter >= 3 and size ``t_3(G)``, odd non-cyclic ``G``.

    Writes ``G = H (+) Z_n`` with ``n = exp(G)`` as the last coordinate.
    """
    g = as_group(group)
    if g.order % 2 == 0 or g.rank < 2 or diam_formula(g) < 3:
        raise DomainError("need a non-cyclic group of odd order with diameter >= 3")
    n = g.moduli[-1]
    if n == 3 and g.rank < 3:
        raise DomainError("exponent 3 needs rank >= 3")
    h_grp = get_group(g.moduli[:-1])
    b = odd_halfset(h_grp).set.elements()
    h_all = list(h_grp.elements())
    k = n // 4
    neg_b = [h_grp.neg(x) for x in b]

    def at(hs, x):
        return [tuple(e) + (x % n,) for e in hs]

    els = [(0,) * g.rank]
    for x in range(-k + 1, k):
        els += at(h_all, x)
    if n == 3:
        els += at(b, 1) + at(neg_b, -1)
        missing = (0,) * (g.rank - 1) + (1,)
    elif n % 4 == 1:
        els += at(b, k) + at(neg_b, -k)
        missing = (0,) * (g.rank - 1) + ((2 * k) % n,)
    else:
        els += at(b, k) + at(b, k + 1) + at(neg_b, -k) + at(neg_b, -k - 1)
        els += [(0,) * (g.rank - 1) + (k,), (0,) * (g.rank - 1) + (-k % n,)]
        missing = (0,) * (g.rank - 1) + (2 * k + 1,)
    a = GroupSubset.from_elements(g, els)
    checks = [_size(t3_s3_formula(g)[0]), _aperiodic(), _generates(), _diam_at_least(3), _excludes(2, missing)]
    return certify("odd-noncyclic", g, a, checks, strict, n=n, k=k)


def homocyclic4_set(r: int, strict: bool = True) -> CertifiedSet:
    """The recursive candidate for ``t_3`` of ``Z_4^r``: ``H x {0}``, ``(B, 1)``, ``(-B, -1)``."""
    if r < 2:
        raise DomainError("rank must be >= 2")
    a, missing = _homocyclic4(r)
    g = a.group
    checks = [_size((4**r - 2**r) // 2), _ball_misses(2, missing), _aperiodic(), _maximal(3)]
    return certify("homocyclic4", g, a, checks, strict, r=r)


def _homocyclic4(r: int) -> tuple[GroupSubset, GroupSubset]:
    g = get_group((4,) * r)
    if r == 2:
        a = GroupSubset.from_elements(g, [(k, 0) for k in range(4)] + [(1, 1), (3, 3)])
        return a, GroupSubset.from_elements(g, [(0, 2), (1, 2), (3, 2)])
    b, _ = _homocyclic4(r - 1)
    h = b.group
    els = [e + (0,) for e in h.elements()]
    els += [e + (1,) for e in b.elements()] + [h.neg(e) + (3,) for e in b.elements()]
    b2 = ball_layer(b, 2)
    missing = [e + (2,) for e in h.elements() if e not in b2]
    return GroupSubset.from_elements(g, els), GroupSubset.from_elements(g, missing)


def triple_coset_set(group, h: Subgroup, g_elem, rho: int, strict: bool = True) -> CertifiedSet:
    """``(-g+H) | H | (g+H)`` for ``G/H`` cyclic of order ``2 rho`` generated by ``g+H``."""
    grp = as_group(group)
    if h.quotient_type.factors != (2 * rho,):
        raise DomainError(f"G/H has type {h.quotient_type}, not cyclic of order {2 * rho}")
    gi = g_elem if isinstance(g_elem, (int, np.integer)) else grp.index(g_elem)
    if h.quotient.orders[h.projection_map[int(gi)]] != 2 * rho:
        raise DomainError("g + H does not generate G/H")
    a = h.carrier | h.coset(gi) | h.coset(int(grp.negation[int(gi)]))
    checks = [_size(3 * h.order), _size(3 * grp.order // (2 * rho)), _generates(), _diam(rho)]
    return certify("triple-coset", grp, a, checks, strict, rho=rho, g=grp.element(int(gi)), kernel_order=h.order)


def triple_coset_sets(group, rho: int) -> list[tuple[Subgroup, int, GroupSubset]]:
    """Every distinct triple-coset set for ``rho``, with one ``(H, g)`` producing it."""
    grp = as_group(group)
    seen: dict[GroupSubset, tuple[Subgroup, int]] = {}
    for h in enumerate_subgroups(grp):
        if h.quotient_type.factors != (2 * rho,):
            continue
        q_orders = h.quotient.orders[h.projection_map]
        for gi in np.flatnonzero(q_orders == 2 * rho).tolist():
            a = triple_coset_set(grp, h, gi, rho).set
            seen.setdefault(a, (h, gi))
    return [(h, gi, a) for a, (h, gi) in seen.items()]


@dataclass(frozen=True)
class MaximalPeriodicReport:
    n: int
    group: AbelianGroup
    rho: int
    diameter: int
    maximal_count: int
    all_periodic: bool
    t_value: int
    generator_triple_is_maximal: bool
    generator_triple_period: list[tuple[int, ...]]


def maximal_sets_periodic_analysis(n: int, budget: int | None = None) -> MaximalPeriodicReport:
    """Census of the ``2^n``-maximal subsets of ``Z_2 (+) Z_{2^(n+1)}``."""
    if n < 2:
        raise DomainError("n must be >= 2")
    g = get_group((2, 2 ** (n + 1)))
    c = census(g, budget) if budget else census(g)
    rho = 2**n
    masks = np.flatnonzero(c.rho_maximal(rho))
    all_periodic = not c.aperiodic[masks].any()
    t = c.max_size(c.t_selector(rho))
    triple = symmetric_closure(GroupSubset.from_elements(g, [(0, 1), (1, 0), (1, 1)]))
    m = c.mask_of(triple)
    found = bool(c.rho_maximal(rho)[m])
    return MaximalPeriodicReport(
        n=n,
        group=g,
        rho=rho,
        diameter=c.max_diameter,
        maximal_count=int(masks.size),
        all_periodic=bool(all_periodic),
        t_value=t,
        generator_triple_is_maximal=found,
        generator_triple_period=period(triple).carrier.elements(),
    )


example25_analysis = maximal_sets_periodic_analysis
