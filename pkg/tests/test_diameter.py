import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abdiam.diameter import (
    INF,
    ball,
    diam_brute,
    diam_formula,
    diam_of_set,
    direct_sum,
    embed,
    generates,
    size_diameter_bound,
    lcm_inequality,
    length,
    lift,
    project,
)
from abdiam.groups import DomainError, as_group, group_types_up_to
from abdiam.subgroups import subgroup_generated_by
from abdiam.subsets import GroupSubset, parse_subset, symmetric_closure

import oracles


def test_ball_layers_in_z10():
    g = as_group((10,))
    b = ball(g, parse_subset(g, "{1}"))
    assert b.layer(0).indices() == [0]
    assert b.layer(2).indices() == [0, 1, 2, 8, 9]
    assert diam_of_set(g, parse_subset(g, "{1}")) == 5


@pytest.mark.parametrize(
    "moduli, literal, element, expected",
    [((10,), "{1}", (5,), 5), ((10,), "{1}", (7,), 3), ((10,), "{3}", (1,), 3),
     ((2, 4), "{(1,0),(0,1)}", (1, 2), 3), ((6,), "{2}", (1,), INF)],
)
def test_length_examples(moduli, literal, element, expected):
    g = as_group(moduli)
    assert length(g, parse_subset(g, literal), element) == expected


def test_non_generating_set_has_infinite_diameter():
    g = as_group((2, 4))
    a = parse_subset(g, "{(0,1)}")
    assert diam_of_set(g, a) == INF and not generates(g, a)


@pytest.mark.parametrize("moduli, expected", [((7,), 3), ((2, 4), 3), ((3, 3, 3), 3), ((2, 2), 2), ((), 0), ((4, 12), 8)])
def test_diam_formula_examples(moduli, expected):
    assert diam_formula(moduli) == expected


@pytest.mark.parametrize("moduli", [(6,), (7,), (8,), (2, 4), (3, 3), (2, 2, 2), (9,), (10,)])
def test_diam_brute_matches_oracle(moduli):
    assert diam_brute(moduli).value == oracles.diam_brute(oracles.Grp(moduli)) == diam_formula(moduli)


@pytest.mark.parametrize("t", group_types_up_to(12, 2), ids=str)
def test_diam_brute_witnesses_attain(t):
    g = t.group()
    res = diam_brute(g)
    assert res.argmax_sets
    assert all(diam_of_set(g, a) == res.value for a in res.argmax_sets)


@pytest.mark.parametrize("moduli", [(12,), (2, 6), (3, 3), (2, 2, 2), (16,)])
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_diam_of_set_matches_oracle(moduli, data):
    g = as_group(moduli)
    a = GroupSubset.from_indices(g, data.draw(st.sets(st.integers(0, g.order - 1))))
    assert diam_of_set(g, a) == oracles.bfs_diam(oracles.Grp(moduli), {tuple(e) for e in a.elements()})


def test_lift_and_project_z12():
    g = as_group((12,))
    h = subgroup_generated_by(g, [(6,)])
    q = h.quotient
    a_bar = symmetric_closure(GroupSubset.from_elements(q, [(1,)]))
    a = lift(g, h, a_bar)
    assert a.indices() == [0, 1, 5, 6, 7, 11]
    assert diam_of_set(g, a) == diam_of_set(q, a_bar) == 3
    assert project(g, h, a) == a_bar


def test_project_rejects_sets_not_fixed_by_h():
    g = as_group((12,))
    h = subgroup_generated_by(g, [(6,)])
    with pytest.raises(DomainError):
        project(g, h, symmetric_closure(parse_subset(g, "{1}")))


@pytest.mark.parametrize("moduli", [(2, 4), (4, 4), (2, 2, 4), (3, 9)])
def test_lift_preserves_diameter_for_every_subgroup(moduli):
    from abdiam.subgroups import enumerate_subgroups

    g = as_group(moduli)
    for h in enumerate_subgroups(g):
        if h.is_whole():
            with pytest.raises(DomainError):
                lift(g, h, GroupSubset.full(h.quotient))
            continue
        q = h.quotient
        a_bar = GroupSubset.full(q)
        assert diam_of_set(g, lift(g, h, a_bar)) == diam_of_set(q, a_bar)


@pytest.mark.parametrize("ns", [(2, 3), (4, 6, 10), (3, 5, 7), (2, 4), (6, 10, 15)])
def test_lcm_inequality(ns):
    hyp, concl = lcm_inequality(ns)
    total = oracles.lcm(*ns)
    assert hyp == all(oracles.lcm(*(ns[:i] + ns[i + 1:])) < total for i in range(len(ns)))
    if hyp:
        assert concl


def test_lcm_inequality_exhaustive_small():
    for r in (2, 3):
        for ns in itertools.combinations_with_replacement(range(1, 16), r):
            hyp, concl = lcm_inequality(ns)
            assert concl or not hyp


def test_direct_sum_additivity_examples():
    g1, g2 = as_group((5,)), as_group((2, 4))
    total = direct_sum(g1, g2)
    a1 = parse_subset(g1, "{1}")
    a2 = parse_subset(g2, "{(1,0),(0,1)}")
    a = embed(total, a1, 0) | embed(total, a2, 1)
    assert diam_of_set(total, a) == diam_of_set(g1, a1) + diam_of_set(g2, a2) == 5


@pytest.mark.parametrize("moduli", [(8,), (2, 4), (3, 3), (10,), (2, 2, 2)])
def test_size_bound_holds_on_all_generating_sets(moduli):
    og = oracles.Grp(moduli)
    g = as_group(moduli)
    for a in oracles.all_subsets(og):
        d = oracles.bfs_diam(og, a)
        if a and d != math.inf:
            assert d <= size_diameter_bound(g, len(a))
