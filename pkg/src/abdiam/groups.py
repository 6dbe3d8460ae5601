"""Finite abelian groups as direct sums of cyclic groups.

Elements are coordinate tuples ``(x_1, ..., x_r)`` with ``0 <= x_i < m_i``.
Each element also has a dense mixed-radix index in ``[0, |G|)`` with the
first coordinate most significant, so subsets can be stored as boolean
vectors indexed by element.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache, reduce
from typing import Iterable, Iterator, Sequence

import numpy as np

Element = tuple[int, ...]

# dense tables are built only below this order
DENSE_BUDGET = 1 << 20
# translation permutations are memoised only below this order
_SHIFT_CACHE_ORDER = 4096


class ResourceError(RuntimeError):
    """A computation would exceed a configured enumeration budget."""


class DomainError(ValueError):
    """Arguments lie outside the range where an operation is defined."""


def lcm(*values: int) -> int:
    return reduce(lambda a, b: a * b // math.gcd(a, b), values, 1)


# -- Smith normal form -------------------------------------------------------


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> tuple[list[int], list[list[int]]]:
    """Diagonalise an integer matrix by unimodular row and column operations.

    Returns ``(diag, V)`` where ``U @ matrix @ V`` is diagonal with entries
    ``diag`` (non-negative, each dividing the next) for some unimodular ``U``.
    Only the column transform is tracked; it is what maps coordinates of
    ``Z^c`` onto the quotient by the row lattice.
    """
    a = [list(map(int, row)) for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def swap_cols(j, k):
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in v:
            row[j], row[k] = row[k], row[j]

    def add_col(dst, src, q):
        # col_dst -= q * col_src
        for row in a:
            row[dst] -= q * row[src]
        for row in v:
            row[dst] -= q * row[src]

    t = 0
    while t < min(rows, cols):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        a[t], a[best[0]] = a[best[0]], a[t]
        swap_cols(t, best[1])
        while True:
            p = a[t][t]
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    add_col(j, t, q)
            # remainders smaller than the pivot: move the smallest into place
            cand = [(abs(a[i][t]), i, t) for i in range(t + 1, rows) if a[i][t]]
            cand += [(abs(a[t][j]), t, j) for j in range(t + 1, cols) if a[t][j]]
            if cand:
                _, i, j = min(cand)
                if j == t:
                    a[t], a[i] = a[i], a[t]
                else:
                    swap_cols(t, j)
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
        t += 1
    diag = [a[i][i] for i in range(min(rows, cols))] + [0] * max(0, cols - rows)
    return diag, v


# -- group types -------------------------------------------------------------


@dataclass(frozen=True)
class GroupType:
    """Invariant-factor type ``(m_1, ..., m_r)`` with ``1 < m_1 | ... | m_r``."""

    factors: tuple[int, ...] = ()

    def __post_init__(self):
        f = tuple(int(m) for m in self.factors)
        object.__setattr__(self, "factors", f)
        if any(m < 2 for m in f):
            raise DomainError(f"invariant factors must be >= 2: {f}")
        if any(b % a for a, b in zip(f, f[1:])):
            raise DomainError(f"factors do not form a divisibility chain: {f}")

    @property
    def order(self) -> int:
        return math.prod(self.factors)

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def exponent(self) -> int:
        return self.factors[-1] if self.factors else 1

    def group(self) -> AbelianGroup:
        return get_group(self.factors)

    def __str__(self):
        return "(" + ",".join(map(str, self.factors)) + ")"


def normalize_type(moduli: Iterable[int]) -> GroupType:
    """Invariant-factor type of ``Z_{n_1} + ... + Z_{n_k}``; factors 1 are dropped."""
    moduli = [int(n) for n in moduli]
    if any(n < 1 for n in moduli):
        raise DomainError(f"moduli must be positive: {moduli}")
    moduli = [n for n in moduli if n > 1]
    if not moduli:
        return GroupType(())
    k = len(moduli)
    diag, _ = smith_normal_form([[moduli[i] if i == j else 0 for j in range(k)] for i in range(k)])
    return GroupType(tuple(d for d in diag if d != 1))


def parse_group(spec: str) -> GroupType:
    """``"2,8"`` -> ``(2,8)``; an empty string or ``"1"`` is the trivial group."""
    spec = spec.strip().strip("()")
    if not spec:
        return GroupType(())
    try:
        moduli = [int(tok) for tok in spec.split(",")]
    except ValueError:
        raise DomainError(f"cannot parse group {spec!r}") from None
    if any(m < 1 for m in moduli):
        raise DomainError(f"moduli must be positive in {spec!r}")
    return normalize_type(moduli)


def group_types_of_order(n: int) -> list[GroupType]:
    """All invariant-factor chains with product ``n``, lexicographically."""

    def chains(rest: int, last: int) -> Iterator[tuple[int, ...]]:
        if rest == 1:
            yield ()
            return
        for d in range(max(last, 2), rest + 1):
            if rest % d or d % last:
                continue
            q = rest // d
            if q == 1 or q % d == 0:
                for tail in chains(q, d):
                    yield (d,) + tail

    return [GroupType(c) for c in chains(n, 1)]


def group_types_up_to(max_order: int, min_order: int = 1) -> list[GroupType]:
    return [t for n in range(min_order, max_order + 1) for t in group_types_of_order(n)]


# -- concrete groups ---------------------------------------------------------


class AbelianGroup:
    """``Z_{m_1} + ... + Z_{m_r}`` with explicit coordinates.

    The moduli need not form a divisibility chain (direct sums of arbitrary
    cyclic groups are allowed); :attr:`type` gives the canonical type.
    Instances are immutable; use :func:`get_group` to share cached tables.
    """

    def __init__(self, moduli: Iterable[int]):
        self.moduli: tuple[int, ...] = tuple(int(m) for m in moduli)
        if any(m < 2 for m in self.moduli):
            raise DomainError(f"cyclic factors must have order >= 2: {self.moduli}")
        self.order = math.prod(self.moduli)
        self.rank = len(self.moduli)
        strides = []
        s = 1
        for m in reversed(self.moduli):
            strides.append(s)
            s *= m
        self.strides: tuple[int, ...] = tuple(reversed(strides))
        self._shifts: dict[int, np.ndarray] = {}

    def __repr__(self):
        return f"AbelianGroup({self.moduli})"

    def __str__(self):
        if not self.moduli:
            return "0"
        return "+".join(f"Z{m}" for m in self.moduli)

    def __eq__(self, other):
        return isinstance(other, AbelianGroup) and self.moduli == other.moduli

    def __hash__(self):
        return hash(("AbelianGroup", self.moduli))

    def __len__(self):
        return self.order

    @cached_property
    def type(self) -> GroupType:
        return normalize_type(self.moduli)

    @property
    def is_canonical(self) -> bool:
        return self.type.factors == self.moduli

    # element encoding

    def index(self, g: Sequence[int]) -> int:
        if len(g) != self.rank:
            raise DomainError(f"element {tuple(g)} has wrong length for {self}")
        return sum((x % m) * s for x, m, s in zip(g, self.moduli, self.strides))

    def element(self, i: int) -> Element:
        i = int(i)
        if not 0 <= i < self.order:
            raise DomainError(f"index {i} out of range for {self}")
        return tuple((i // s) % m for m, s in zip(self.moduli, self.strides))

    def elements(self) -> Iterator[Element]:
        for i in range(self.order):
            yield self.element(i)

    @cached_property
    def coords(self) -> np.ndarray:
        """``(|G|, r)`` array of coordinates, row ``i`` = element with index ``i``."""
        if self.order > DENSE_BUDGET:
            raise ResourceError(f"{self} exceeds the dense budget of {DENSE_BUDGET} elements")
        idx = np.arange(self.order, dtype=np.int64)
        out = np.empty((self.order, self.rank), dtype=np.int64)
        for k, (m, s) in enumerate(zip(self.moduli, self.strides)):
            out[:, k] = (idx // s) % m
        return out

    def _encode(self, coords: np.ndarray) -> np.ndarray:
        m = np.asarray(self.moduli, dtype=np.int64)
        s = np.asarray(self.strides, dtype=np.int64)
        return ((coords % m) * s).sum(axis=1) if self.rank else np.zeros(len(coords), np.int64)

    # arithmetic

    def zero(self) -> Element:
        return (0,) * self.rank

    def add(self, g: Sequence[int], h: Sequence[int]) -> Element:
        return tuple((a + b) % m for a, b, m in zip(g, h, self.moduli))

    def neg(self, g: Sequence[int]) -> Element:
        return tuple((-a) % m for a, m in zip(g, self.moduli))

    def sub(self, g: Sequence[int], h: Sequence[int]) -> Element:
        return tuple((a - b) % m for a, b, m in zip(g, h, self.moduli))

    def scale(self, k: int, g: Sequence[int]) -> Element:
        return tuple((k * a) % m for a, m in zip(g, self.moduli))

    def add_index(self, i: int, j: int) -> int:
        return self.index(self.add(self.element(i), self.element(j)))

    def neg_index(self, i: int) -> int:
        return self.index(self.neg(self.element(i)))

    def element_order(self, g: Sequence[int]) -> int:
        return lcm(*(m // math.gcd(m, x % m) for x, m in zip(g, self.moduli)))

    @cached_property
    def exponent(self) -> int:
        return lcm(*self.moduli)

    @cached_property
    def orders(self) -> np.ndarray:
        """Order of every element, by index."""
        out = np.ones(self.order, dtype=np.int64)
        for k, m in enumerate(self.moduli):
            o = m // np.gcd(self.coords[:, k], m)
            out = np.lcm(out, o)
        return out

    @cached_property
    def negation(self) -> np.ndarray:
        """Index permutation ``i -> index(-element(i))``."""
        return self._encode(-self.coords)

    def translation(self, g: int | Sequence[int]) -> np.ndarray:
        """Index permutation ``x -> x + g``; ``g`` given as index or coordinates."""
        gi = g if isinstance(g, (int, np.integer)) else self.index(g)
        gi = int(gi)
        p = self._shifts.get(gi)
        if p is None:
            p = self._encode(self.coords + np.asarray(self.element(gi), dtype=np.int64))
            p.setflags(write=False)
            if self.order <= _SHIFT_CACHE_ORDER:
                self._shifts[gi] = p
        return p

    @cached_property
    def difference_table(self) -> np.ndarray:
        """``T[x, a] = index(x - a)``; only for small groups."""
        if self.order > _SHIFT_CACHE_ORDER:
            raise ResourceError(f"difference table of {self} is too large")
        return np.stack([self.translation(int(self.negation[a])) for a in range(self.order)], axis=1)

    def multiple_table(self, k: int) -> np.ndarray:
        """Index map ``x -> k*x``."""
        return self._encode(k * self.coords)


@lru_cache(maxsize=None)
def get_group(moduli: tuple[int, ...]) -> AbelianGroup:
    return AbelianGroup(moduli)


def as_group(g: AbelianGroup | GroupType | Sequence[int] | str) -> AbelianGroup:
    """Coerce a group-like argument; bare moduli lists are canonicalised."""
    if isinstance(g, AbelianGroup):
        return g
    if isinstance(g, GroupType):
        return get_group(g.factors)
    if isinstance(g, str):
        return get_group(parse_group(g).factors)
    return get_group(normalize_type(g).factors)


def cyclic(m: int) -> AbelianGroup:
    return get_group((m,) if m > 1 else ())


# -- invariants --------------------------------------------------------------


@dataclass(frozen=True)
class GroupInvariants:
    order: int
    rank: int
    exponent: int
    rk2: int
    rk2_doubled: int
    nu: dict

    def nu_of(self, m: int) -> int:
        return self.nu.get(m, 0)


def nu(g: AbelianGroup | GroupType, m: int) -> int:
    """Number of invariant factors equal to ``m``."""
    return sum(1 for f in as_group(g).type.factors if f == m)


def group_invariants(g: AbelianGroup | GroupType) -> GroupInvariants:
    t = as_group(g).type
    counts: dict[int, int] = {}
    for f in t.factors:
        counts[f] = counts.get(f, 0) + 1
    return GroupInvariants(
        order=t.order,
        rank=t.rank,
        exponent=t.exponent,
        rk2=sum(1 for f in t.factors if f % 2 == 0),
        rk2_doubled=sum(1 for f in t.factors if f % 4 == 0),
        nu=counts,
    )


def element_order(g: AbelianGroup | GroupType, x: Sequence[int] | int) -> int:
    grp = as_group(g)
    if isinstance(x, (int, np.integer)):
        x = grp.element(int(x))
    return grp.element_order(x)


def is_homocyclic(g: AbelianGroup | GroupType) -> bool:
    f = as_group(g).type.factors
    return len(set(f)) <= 1


def is_cyclic(g: AbelianGroup | GroupType) -> bool:
    return as_group(g).type.rank <= 1


def is_two_group(g: AbelianGroup | GroupType) -> bool:
    n = as_group(g).order
    return n & (n - 1) == 0
