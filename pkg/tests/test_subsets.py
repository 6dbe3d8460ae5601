import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abdiam.groups import DomainError, as_group
from abdiam.subgroups import is_aperiodic, period
from abdiam.subsets import (
    GroupSubset,
    dilate,
    format_subset,
    multiple,
    parse_subset,
    sum_of,
    sumset,
    symmetric_closure,
)

import oracles

GROUPS = [(12,), (2, 4), (3, 3), (2, 2, 2), (2, 6)]


def subsets_of(moduli):
    g = as_group(moduli)
    return st.sets(st.integers(0, g.order - 1)).map(lambda s: GroupSubset.from_indices(g, s))


def as_tuples(a):
    return {tuple(e) for e in a.elements()}


def test_symmetric_closure_example():
    g = as_group((7,))
    assert symmetric_closure(parse_subset(g, "{1,2}")).indices() == [0, 1, 2, 5, 6]


def test_sumset_example():
    g = as_group((10,))
    a, b = parse_subset(g, "{0,1}"), parse_subset(g, "{0,3}")
    assert sumset(a, b).indices() == [0, 1, 3, 4]
    assert sumset(a, GroupSubset.empty(g)).is_empty()


def test_multiple_and_dilate():
    g = as_group((12,))
    a = parse_subset(g, "{0,1}")
    assert multiple(a, 3).indices() == [0, 1, 2, 3]
    assert dilate(a, 3).indices() == [0, 3]
    assert multiple(a, 0).indices() == [0]


@pytest.mark.parametrize(
    "moduli, literal, expected_order",
    [((12,), "{0,3,6,9}", 4), ((12,), "{0,1}", 1), ((2, 4), "{(0,0),(1,0),(0,1),(1,1)}", 2),
     ((6,), "{0,1,2,3,4,5}", 6), ((6,), "{}", 6)],
)
def test_period_examples(moduli, literal, expected_order):
    g = as_group(moduli)
    assert period(parse_subset(g, literal)).order == expected_order


@pytest.mark.parametrize("moduli", GROUPS)
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_period_matches_oracle(moduli, data):
    a = data.draw(subsets_of(moduli))
    g = oracles.Grp(moduli)
    expected = oracles.period(g, as_tuples(a))
    assert {tuple(e) for e in period(a).carrier.elements()} == expected
    assert period(a) == period(a.complement())
    assert is_aperiodic(a) == (len(expected) == 1)


@pytest.mark.parametrize("moduli", GROUPS)
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_sumset_matches_oracle_and_is_commutative(moduli, data):
    a = data.draw(subsets_of(moduli))
    b = data.draw(subsets_of(moduli))
    c = data.draw(subsets_of(moduli))
    g = oracles.Grp(moduli)
    assert as_tuples(sumset(a, b)) == oracles.sumset(g, as_tuples(a), as_tuples(b))
    assert sumset(a, b) == sumset(b, a)
    assert sumset(sumset(a, b), c) == sumset(a, sumset(b, c)) == sum_of([a, b, c])
    assert as_tuples(symmetric_closure(a)) == oracles.closure_pm(g, as_tuples(a))


@pytest.mark.parametrize("moduli", GROUPS)
@settings(max_examples=20, deadline=None)
@given(data=st.data())
def test_format_parse_roundtrip(moduli, data):
    a = data.draw(subsets_of(moduli))
    g = as_group(moduli)
    assert parse_subset(g, format_subset(a)) == a
    assert parse_subset(g, "idx:" + ",".join(map(str, a.indices()))) == a


def test_translate_and_set_algebra():
    g = as_group((2, 4))
    a = parse_subset(g, "{(0,1),(1,3)}")
    assert a.translate((1, 1)) == parse_subset(g, "{(1,2),(0,0)}")
    assert len(a | a.complement()) == g.order
    assert (a & a.complement()).is_empty()
    assert a.with_element((0, 0)).without_element((0, 0)) == a
    assert symmetric_closure(a).is_symmetric()


def test_parse_rejects_garbage():
    with pytest.raises(DomainError):
        parse_subset(as_group((5,)), "1,2")
