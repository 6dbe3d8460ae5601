"""Checks of Kneser's sumset theorem and its iterated lower bound."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .groups import DomainError
from .subgroups import Subgroup, period
from .subsets import GroupSubset, sum_of, sumset


@dataclass(frozen=True)
class KneserCheck:
    holds_hypothesis: bool
    period: Subgroup
    equality_verified: bool | None  # None when the hypothesis fails


def kneser_check(a: GroupSubset, b: GroupSubset) -> KneserCheck:
    """If ``|A+B| <= |A|+|B|-1``, test ``|A+B| = |A+H| + |B+H| - |H|`` for ``H = period(A+B)``."""
    if a.is_empty() or b.is_empty():
        raise DomainError("Kneser check needs non-empty sets")
    s = sumset(a, b)
    h = period(s)
    if len(s) > len(a) + len(b) - 1:
        return KneserCheck(False, h, None)
    ah = sumset(a, h.carrier)
    bh = sumset(b, h.carrier)
    return KneserCheck(True, h, len(s) == len(ah) + len(bh) - h.order)


def iterated_sumset_lower_bound_check(sets: Sequence[GroupSubset]) -> bool:
    """``|A_1+...+A_k| >= sum |A_i| - (k-1)|H|`` with ``H`` the period of the sum."""
    if not sets or any(s.is_empty() for s in sets):
        raise DomainError("need at least one non-empty set")
    total = sum_of(list(sets))
    h = period(total)
    return len(total) >= sum(len(s) for s in sets) - (len(sets) - 1) * h.order
