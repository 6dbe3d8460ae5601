"""rho-maximal sets, the invariants t_rho and s_rho, and their closed forms.

For ``rho >= 1`` a set ``A`` is *rho-maximal* when it is maximal under
inclusion subject to ``<A>_{rho-1} != G``.  ``t_rho(G)`` is the largest
aperiodic rho-maximal generating set and ``s_rho(G)`` the largest generating
set of diameter at least ``rho`` (both 0 when no such set exists).

The ``*_brute`` functions are exhaustive oracles built on the census; the
``*_formula`` functions evaluate the closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .census import CENSUS_BUDGET, WITNESS_CAP, census
from .diameter import ConsistencyError, diam_formula, diam_of_set, INF
from .groups import DomainError, as_group, group_invariants, is_cyclic, is_homocyclic, is_two_group
from .subgroups import enumerate_subgroups, is_aperiodic, period
from .subsets import GroupSubset, sumset, symmetric_closure


def ball_layer(a: GroupSubset, rho: int) -> GroupSubset:
    """``<A>_rho``, without the cross-checks of :func:`abdiam.diameter.ball`."""
    base = symmetric_closure(a)
    out = GroupSubset.zero(a.group)
    for _ in range(rho):
        nxt = sumset(out, base)
        if nxt == out:
            break
        out = nxt
    return out


def is_rho_maximal(group, a: GroupSubset, rho: int) -> bool:
    if rho < 1:
        raise DomainError("rho must be positive")
    if ball_layer(a, rho - 1).is_full():
        return False
    for g in a.complement():
        if not ball_layer(a.with_element(g), rho - 1).is_full():
            return False
    return True


def extend_to_rho_maximal(group, a: GroupSubset, rho: int) -> GroupSubset:
    """Add elements in index order while ``<A>_{rho-1}`` stays proper.

    One pass suffices: the admissible sets are closed under taking subsets,
    so an element rejected once stays rejected.
    """
    if ball_layer(a, rho - 1).is_full():
        raise DomainError("<A>_{rho-1} already covers G")
    for g in range(a.group.order):
        if g in a:
            continue
        b = a.with_element(g)
        if not ball_layer(b, rho - 1).is_full():
            a = b
    return a


def period_stable(a: GroupSubset, rho: int) -> bool:
    """``period(A) == period(<A>_tau)`` for every ``tau`` in ``[1, rho-1]``."""
    p = period(a)
    return all(period(ball_layer(a, tau)) == p for tau in range(1, rho))


# -- queries and results -------------------------------------------------------


@dataclass(frozen=True)
class ExtremalQuery:
    group: object
    rho: int
    budget: int = CENSUS_BUDGET

    def __post_init__(self):
        object.__setattr__(self, "group", as_group(self.group))
        if self.rho < 1:
            raise DomainError("rho must be >= 1")


@dataclass(frozen=True)
class ExtremalResult:
    """``value`` with witnesses; every witness is re-verified on construction.

    ``kind`` is ``"t"`` (aperiodic rho-maximal generating sets) or ``"s"``
    (generating sets of diameter at least rho).
    """

    value: int
    witnesses: list[GroupSubset]
    method: str
    kind: str
    group: object
    rho: int
    notes: dict = field(default_factory=dict)

    def __post_init__(self):
        for w in self.witnesses:
            problem = witness_problem(self.kind, self.group, w, self.rho, self.value)
            if problem:
                raise ConsistencyError(f"witness {w} fails: {problem}")


def witness_problem(kind: str, group, a: GroupSubset, rho: int, value: int) -> str | None:
    if len(a) != value:
        return f"size {len(a)} != {value}"
    d = diam_of_set(group, a)
    if d == INF:
        return "does not generate"
    if d < rho:
        return f"diameter {d} < {rho}"
    if kind == "t":
        if not is_rho_maximal(group, a, rho):
            return "not rho-maximal"
        if not is_aperiodic(a):
            return "periodic"
    return None


def t_rho_brute(q: ExtremalQuery, cap: int = WITNESS_CAP) -> ExtremalResult:
    c = census(q.group, q.budget)
    sel = c.t_selector(q.rho)
    value = c.max_size(sel)
    if 1 <= q.rho <= c.max_diameter:
        relaxed = c.max_size(c.t_selector(q.rho, require_generation=False))
        if relaxed != value:
            raise ConsistencyError(f"dropping generation changes t_{q.rho}: {relaxed} != {value}")
    wit = c.witnesses(sel, value, cap) if value else []
    return ExtremalResult(value, wit, "brute", "t", q.group, q.rho)


def s_rho_brute(q: ExtremalQuery, cap: int = WITNESS_CAP) -> ExtremalResult:
    c = census(q.group, q.budget)
    sel = c.s_selector(q.rho)
    value = c.max_size(sel)
    wit = c.witnesses(sel, value, cap) if value else []
    return ExtremalResult(value, wit, "brute", "s", q.group, q.rho)


def s_rho_via_quotients(q: ExtremalQuery) -> ExtremalResult:
    """``max |H| t_rho(G/H)`` over proper subgroups ``H``; witness is a lifted set."""
    g = q.group
    if not 2 <= q.rho <= diam_formula(g):
        raise DomainError(f"rho={q.rho} outside [2, diam(G)]")
    best, best_h, best_w = 0, None, None
    for h in enumerate_subgroups(g):
        if h.is_whole():
            continue
        tq = t_rho_brute(ExtremalQuery(h.quotient, q.rho, q.budget), cap=1)
        val = h.order * tq.value
        if val > best:
            best, best_h, best_w = val, h, tq.witnesses[0]
    wit = [best_h.preimage(best_w)] if best_h is not None else []
    notes = {"subgroup_order": best_h.order, "quotient": str(best_h.quotient_type)} if best_h else {}
    return ExtremalResult(best, wit, "quotient-max", "s", g, q.rho, notes)


# -- closed forms ----------------------------------------------------------------


def _require_diam(g, lo: int):
    if diam_formula(g) < lo:
        raise DomainError(f"diam({g}) < {lo}")


def t2_s2_formula(group) -> tuple[int, int]:
    g = as_group(group)
    _require_diam(g, 2)
    v = g.order - 1 if g.order % 2 == 0 else g.order - 2
    return v, v


def t3_s3_formula(group) -> tuple[int, int]:
    g = as_group(group)
    _require_diam(g, 3)
    inv = group_invariants(g)
    n = g.order
    if n % 2:
        e = inv.exponent
        base = Fraction(e - 1, 2 * e) * n
        v = int(base) - 1 if e % 4 == 1 else int(base)
        return v, v
    if is_homocyclic(g) and inv.exponent == 4:
        t = (n - math.isqrt(n)) // 2
    elif inv.rk2 == inv.rk2_doubled and inv.exponent > 4:
        t = n // 2 - 1
    else:
        t = n // 2
    s = n // 2 - 1 if is_cyclic(g) and is_two_group(g) else n // 2
    return t, s


def cyclic_t(m: int, rho: int) -> int:
    return 2 * ((m - 2) // (2 * (rho - 1))) + 1


def trho_srho_cyclic_formula(m: int, rho: int) -> tuple[int, int]:
    if not (rho >= 2 and 2 * rho <= m):
        raise DomainError(f"rho={rho} outside [2, {m}/2]")
    s = max((m // d) * cyclic_t(d, rho) for d in range(2 * rho, m + 1) if m % d == 0)
    return cyclic_t(m, rho), s


def cyclic_t3_s3_formula(m: int) -> tuple[int, int]:
    """``(t_3, s_3)`` of ``Z_m`` for ``m >= 6``, by the residue of ``m``."""
    if m < 6:
        raise DomainError("m must be >= 6")
    t = 2 * ((m - 2) // 4) + 1
    if m % 4 == 1:
        s = (m - 1) // 2 - 1
    elif m % 4 == 3:
        s = (m - 1) // 2
    elif m & (m - 1) == 0:
        s = m // 2 - 1
    else:
        s = m // 2
    return t, s


def t_diam_formula(group) -> int:
    g = as_group(group)
    _require_diam(g, 2)
    inv = group_invariants(g)
    return 1 + 2 * inv.rank - inv.nu_of(2) + 2 * (inv.nu_of(3) // 2)


def t_upper_bound(group, rho: int) -> int:
    if rho < 2:
        raise DomainError("rho must be >= 2")
    g = as_group(group)
    n = g.order
    if group_invariants(g).rk2 <= 1:
        return 2 * ((n - 2) // (2 * (rho - 1))) + 1
    return (n - 2) // (rho - 1) + 1


def has_cyclic_quotient(group, q: int) -> bool:
    """``G`` maps onto ``Z_q`` iff ``q`` divides the exponent."""
    return as_group(group).exponent % q == 0


def s_upper_bound(group, rho: int) -> tuple[Fraction, bool]:
    """``(3/2) |G| / rho`` and whether it is attained."""
    if rho < 4:
        raise DomainError("rho must be >= 4")
    g = as_group(group)
    return Fraction(3 * g.order, 2 * rho), has_cyclic_quotient(g, 2 * rho)


def attaining_size_range(group) -> tuple[int, int]:
    """Range ``[rk, 1 + 2 rk - nu_2 + 2 floor(nu_3/2)]`` of ``|A|`` when ``diam_A = diam``."""
    inv = group_invariants(group)
    return inv.rank, 1 + 2 * inv.rank - inv.nu_of(2) + 2 * (inv.nu_of(3) // 2)


s_upper_bound_thm212 = s_upper_bound
