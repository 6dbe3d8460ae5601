import numpy as np
import pytest

from abdiam import classify
from abdiam.census import census
from abdiam.constructions import triple_coset_set, triple_coset_sets
from abdiam.diameter import diam_formula, diam_of_set
from abdiam.groups import as_group, group_types_up_to
from abdiam.subgroups import subgroup_generated_by
from abdiam.subsets import parse_subset

import oracles


def test_structural_examples():
    g = as_group((4,))
    w = classify.attains_diam_structural(g, parse_subset(g, "{1}"))
    assert w and w.b.indices() == [1]
    g = as_group((3, 3))
    assert classify.attains_diam_structural(g, parse_subset(g, "{(1,0),(0,1),(1,1)}"))
    g = as_group((3, 3, 3))
    a = parse_subset(g, "{(1,0,0),(0,1,0),(0,0,1),(1,1,0),(0,1,1)}")
    assert diam_of_set(g, a) < diam_formula(g)
    assert not classify.attains_diam_structural(g, a)


@pytest.mark.parametrize("moduli", [(6,), (8,), (2, 4), (3, 3), (2, 2, 2), (9,)])
def test_structural_matches_oracle_diameter(moduli):
    """Over every generating subset, the structure exists iff the oracle diameter is maximal."""
    og = oracles.Grp(moduli)
    g = as_group(moduli)
    best = oracles.diam_brute(og)
    for a in oracles.all_subsets(og):
        if 0 < len(a) <= 5:
            d = oracles.bfs_diam(og, a)
            if d == oracles.INF:
                continue
            s = parse_subset(g, "idx:" + ",".join(str(g.index(x)) for x in a))
            assert bool(classify.attains_diam_structural(g, s)) == (d == best)


@pytest.mark.parametrize("t", [t for t in group_types_up_to(16, 2)], ids=str)
def test_structural_equivalence_on_census(t):
    g = t.group()
    c = census(g)
    d = diam_formula(g)
    for m in np.flatnonzero(c.generating).tolist():
        assert bool(classify.attains_diam_structural(g, c.subset(m))) == (c.diam[m] == d)


def test_triple_coset_classify_examples():
    g = as_group((8,))
    w = classify.classify_triple_coset(g, parse_subset(g, "{7,0,1}"), 4)
    assert w and w.h.is_trivial() and w.g in ((1,), (7,))
    r = classify.classify_triple_coset(g, parse_subset(g, "{0,1,2}"), 4)
    assert not r and isinstance(r, classify.Refusal)
    g = as_group((2, 8))
    h = subgroup_generated_by(g, [(1, 0)])
    a = triple_coset_set(g, h, (0, 1), 4).set
    w = classify.classify_triple_coset(g, a, 4)
    assert w and w.h == h


def test_triple_coset_classify_refuses_small_rho():
    g = as_group((8,))
    assert classify.classify_triple_coset(g, parse_subset(g, "{7,0,1}"), 3).reason == "rho < 4"


@pytest.mark.parametrize("moduli", [(8,), (16,), (2, 8)])
def test_every_bound_attaining_set_is_triple_coset(moduli):
    g = as_group(moduli)
    c = census(g)
    sel = c.s_selector(4) & (8 * c.size == 3 * g.order)
    found = {c.subset(int(m)) for m in np.flatnonzero(sel)}
    assert found == {a for _, _, a in triple_coset_sets(g, 4)}
    assert all(classify.classify_triple_coset(g, a, 4) for a in found)


def test_large_set_structure_examples():
    g = as_group((8,))
    w = classify.large_set_structure(g, parse_subset(g, "{1}"), 4)
    assert w and w.h.is_trivial() and w.h.quotient.order == 8
    g = as_group((2, 8))
    a = triple_coset_set(g, subgroup_generated_by(g, [(1, 0)]), (0, 1), 4).set
    w = classify.large_set_structure(g, a, 4)
    assert w and w.h.order == 2 and w.h.quotient.order == 8
    g = as_group((9,))
    r = classify.large_set_structure(g, parse_subset(g, "{1}"), 4)
    assert not r and "4|G|" in r.reason


@pytest.mark.parametrize("t", [t for t in group_types_up_to(16, 8) if diam_formula(t.group()) >= 4], ids=str)
def test_large_set_structure_sound_on_census(t):
    g = t.group()
    c = census(g)
    for m in np.flatnonzero(c.s_selector(4)).tolist():
        r = classify.large_set_structure(g, c.subset(m), 4)
        assert r or not r.reason.startswith("conclusion")


def test_witness_as_dict():
    g = as_group((8,))
    d = classify.classify_triple_coset(g, parse_subset(g, "{7,0,1}"), 4).as_dict()
    assert d["kind"] == "thm212" and d["quotient"] == [8]
