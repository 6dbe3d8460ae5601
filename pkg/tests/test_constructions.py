import pytest

from abdiam.diameter import ConsistencyError, diam_formula
from abdiam.extremal import t3_s3_formula, t_diam_formula, trho_srho_cyclic_formula
from abdiam.groups import DomainError, as_group, group_types_up_to
from abdiam import constructions as C
from abdiam.subgroups import subgroup_generated_by, trivial_subgroup

import oracles


def tuples(a):
    return {tuple(e) for e in a.elements()}


def independent_checks(cs, rho=None, maximal=False):
    """Recheck a certified set with the plain-tuple oracle."""
    g = oracles.Grp(cs.group.moduli)
    a = tuples(cs.set)
    d = oracles.bfs_diam(g, a)
    if rho is not None:
        assert d >= rho
    if maximal:
        assert oracles.is_maximal(g, a, rho)
    return g, a, d


def test_standard_examples():
    cs = C.standard_generating_set((2, 4))
    assert tuples(cs.set) == {(1, 0), (0, 1)} and cs.ok
    assert independent_checks(cs)[2] == 3
    assert C.standard_generating_set(()).set.is_empty()
    cs = C.standard_generating_set((9,))
    assert cs.set.indices() == [1] and independent_checks(cs)[2] == 4


@pytest.mark.parametrize("t", group_types_up_to(40, 2), ids=str)
def test_standard_set_attains_diameter(t):
    cs = C.standard_generating_set(t.group())
    assert cs.ok and dict((c.name, c.observed) for c in cs.claims)


def test_diam_extremal_examples():
    top = C.extremal_diam_family((3, 3))[-1]
    assert tuples(top.set) == {(0, 0), (1, 0), (2, 0), (0, 1), (0, 2), (1, 1), (2, 2)}
    assert C.extremal_diam_family((4,))[-1].set.indices() == [0, 1, 3]
    top = C.extremal_diam_family((3, 3, 3))[-1]
    assert len(top.set) == 9 and independent_checks(top)[2] == 3


@pytest.mark.parametrize("moduli", [(3, 3), (4,), (2, 2), (2, 6), (3, 3, 3), (3, 3, 3, 3), (5, 5), (2, 2, 2)])
def test_diam_extremal_family_members(moduli):
    fam = C.extremal_diam_family(moduli)
    assert all(cs.ok for cs in fam)
    assert len(fam[-1].set) == t_diam_formula(moduli)
    for cs in fam:
        assert independent_checks(cs)[2] == diam_formula(moduli)


@pytest.mark.parametrize("m, rho, expected", [(10, 3, [8, 9, 0, 1, 2]), (12, 4, [11, 0, 1]), (11, 2, [7, 8, 9, 10, 0, 1, 2, 3, 4])])
def test_cyclic_interval(m, rho, expected):
    cs = C.cyclic_interval_set(m, rho)
    assert cs.set.indices() == sorted(expected)
    assert len(cs.set) == trho_srho_cyclic_formula(m, rho)[0]
    g, a, _ = independent_checks(cs, rho, maximal=True)
    assert len(oracles.period(g, a)) == 1


def test_cyclic_interval_range():
    with pytest.raises(DomainError):
        C.cyclic_interval_set(10, 6)


@pytest.mark.parametrize("moduli, expected", [((7,), [1, 2, 3]), ((3,), [1])])
def test_odd_halfset_examples(moduli, expected):
    assert C.odd_halfset(moduli).set.indices() == expected


def test_odd_halfset_transversal():
    cs = C.odd_halfset((3, 3))
    g = oracles.Grp((3, 3))
    a = tuples(cs.set)
    assert len(a) == 4
    assert g.zero not in oracles.sumset(g, a, a)
    with pytest.raises(DomainError):
        C.odd_halfset((4,))


def test_even_coset_examples():
    cs = C.even_coset_set((2, 8), "ii")
    assert len(cs.set) == 8 and cs.ok
    g, a, _ = independent_checks(cs, 3, maximal=True)
    h = cs.params["h"]
    assert oracles.layer(g, a, 2) == set(g.els) - {tuple(h)}
    assert len(C.even_coset_set((16,), "iii").set) == 7
    cs = C.even_coset_set((2, 4), "8.10")
    assert tuples(cs.set) == {(0, 0), (1, 0), (0, 1), (0, 3)}
    assert len(cs.set) == t3_s3_formula((2, 4))[1]


def test_even_coset_preconditions():
    with pytest.raises(DomainError):
        C.even_coset_set((2, 2), "ii")
    with pytest.raises(DomainError):
        C.even_coset_set((2, 4), "iii")
    with pytest.raises(DomainError):
        C.even_coset_set((8,), "8.10")
    with pytest.raises(DomainError):
        C.even_coset_set((2, 8), "iv")


@pytest.mark.parametrize("moduli, size", [((3, 9), 11), ((3, 3, 3), 9), ((7, 7), 21), ((5, 5), 9)])
def test_odd_noncyclic(moduli, size):
    cs = C.odd_noncyclic_set(moduli)
    assert len(cs.set) == size == t3_s3_formula(moduli)[0]
    g, a, _ = independent_checks(cs, 3)
    assert len(oracles.period(g, a)) == 1


def test_odd_noncyclic_preconditions():
    with pytest.raises(DomainError):
        C.odd_noncyclic_set((9,))
    with pytest.raises(DomainError):
        C.odd_noncyclic_set((3, 3))


def test_homocyclic4_ball_and_size():
    cs = C.homocyclic4_set(2, strict=False)
    assert len(cs.set) == 6
    g = oracles.Grp((4, 4))
    a = tuples(cs.set)
    assert oracles.layer(g, a, 2) == set(g.els) - {(0, 2), (1, 2), (3, 2)}
    assert len(oracles.period(g, a)) == 1
    assert len(C.homocyclic4_set(3, strict=False).set) == 28


def test_homocyclic4_set_admits_extension():
    # (1,3) can be added without filling the 2-ball, so the set is not 3-maximal
    cs = C.homocyclic4_set(2, strict=False)
    g = oracles.Grp((4, 4))
    bigger = tuples(cs.set) | {(1, 3), (3, 1)}
    assert len(oracles.layer(g, bigger, 2)) < 16
    assert [c.name for c in cs.failed()] == ["3-maximal"]
    with pytest.raises(ConsistencyError):
        C.homocyclic4_set(2)


def test_triple_coset_examples():
    g = as_group((8,))
    cs = C.triple_coset_set(g, trivial_subgroup(g), (1,), 4)
    assert cs.set.indices() == [0, 1, 7]
    g = as_group((2, 8))
    cs = C.triple_coset_set(g, subgroup_generated_by(g, [(1, 0)]), (0, 1), 4)
    assert len(cs.set) == 6
    assert independent_checks(cs)[2] == 4
    g = as_group((12,))
    cs = C.triple_coset_set(g, subgroup_generated_by(g, [(6,)]), (1,), 3)
    assert len(cs.set) == 6


def test_triple_coset_preconditions():
    g = as_group((8,))
    with pytest.raises(DomainError):
        C.triple_coset_set(g, trivial_subgroup(g), (2,), 4)
    with pytest.raises(DomainError):
        C.triple_coset_set(g, trivial_subgroup(g), (1,), 3)


def test_triple_coset_sets_are_distinct():
    sets = C.triple_coset_sets((2, 8), 4)
    assert len({a for _, _, a in sets}) == len(sets) > 0


def test_maximal_sets_periodic_in_z2_z8():
    rep = C.maximal_sets_periodic_analysis(2)
    assert rep.diameter == 5
    assert rep.all_periodic and rep.t_value == 0
    assert rep.generator_triple_is_maximal
    assert sorted(rep.generator_triple_period) == [(0, 0), (1, 0)]
    with pytest.raises(DomainError):
        C.maximal_sets_periodic_analysis(1)


def test_certificate_serializes():
    d = C.cyclic_interval_set(10, 3).as_dict()
    assert d["family"] == "cyclic-interval" and all(c["ok"] for c in d["claims"])
