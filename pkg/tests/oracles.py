"""Slow, independent reference implementations on plain tuples.

Nothing here imports the package under test.
"""

from __future__ import annotations

import itertools
import math
from functools import reduce

INF = math.inf


class Grp:
    def __init__(self, moduli):
        self.m = tuple(moduli)
        self.els = list(itertools.product(*[range(k) for k in self.m]))
        self.zero = tuple(0 for _ in self.m)

    def add(self, a, b):
        return tuple((x + y) % k for x, y, k in zip(a, b, self.m))

    def neg(self, a):
        return tuple((-x) % k for x, k in zip(a, self.m))

    def order_of(self, a):
        n, x = 1, a
        while x != self.zero:
            x = self.add(x, a)
            n += 1
        return n

    def __len__(self):
        return len(self.els)


def sumset(g, a, b):
    return {g.add(x, y) for x in a for y in b}


def closure_pm(g, a):
    return set(a) | {g.neg(x) for x in a} | {g.zero}


def layer(g, a, rho):
    base = closure_pm(g, a)
    out = {g.zero}
    for _ in range(rho):
        out = sumset(g, out, base)
    return out


def bfs_diam(g, a):
    gens = closure_pm(g, a)
    dist = {g.zero: 0}
    frontier = [g.zero]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = g.add(x, s)
                if y not in dist:
                    dist[y] = dist[x] + 1
                    nxt.append(y)
        frontier = nxt
    return max(dist.values()) if len(dist) == len(g) else INF


def generated(g, gens):
    span = {g.zero}
    while True:
        new = span | {g.add(x, s) for x in span for s in gens}
        if new == span:
            return span
        span = new


def all_subgroups(g):
    """Closure of every subset of size <= 3 (enough for rank <= 3)."""
    out = set()
    for k in range(0, 4):
        for gens in itertools.combinations(g.els, k):
            out.add(frozenset(generated(g, gens)))
    return out


def period(g, s):
    s = set(s)
    return {h for h in g.els if {g.add(x, h) for x in s} == s}


def is_maximal(g, a, rho):
    full = len(g)
    if len(layer(g, a, rho - 1)) == full:
        return False
    return all(len(layer(g, set(a) | {x}, rho - 1)) == full for x in g.els if x not in a)


def all_subsets(g):
    for bits in range(1 << len(g)):
        yield {x for i, x in enumerate(g.els) if bits >> i & 1}


def t_s_brute(g, rho):
    """``(t_rho, s_rho)`` by running over every subset of ``G``."""
    t = s = 0
    for a in all_subsets(g):
        d = bfs_diam(g, a)
        if d == INF:
            continue
        if d >= rho:
            s = max(s, len(a))
            if len(a) > t and is_maximal(g, a, rho) and len(period(g, a)) == 1:
                t = len(a)
    return t, s


def diam_brute(g):
    best = 0
    for a in all_subsets(g):
        d = bfs_diam(g, a)
        if d != INF:
            best = max(best, d)
    return best


def lcm(*xs):
    return reduce(lambda a, b: a * b // math.gcd(a, b), xs, 1)


def iso_signature(moduli):
    """Multiset of element orders: determines a finite abelian group up to isomorphism."""
    g = Grp(moduli)
    return sorted(g.order_of(x) for x in g.els)


def quotient_signature(g, h):
    """Element orders in ``G/H`` computed by coset arithmetic."""
    h = frozenset(h)
    cosets = {frozenset(g.add(x, y) for y in h) for x in g.els}
    orders = []
    for c in cosets:
        x = next(iter(c))
        n, y = 1, x
        while y not in h:
            y = g.add(y, x)
            n += 1
        orders.append(n)
    return sorted(orders)
