import pytest
from hypothesis import given
from hypothesis import strategies as st

from borelreg.borel import random_borel_ideal, symbolic_power
from borelreg.decomposition import (
    IrreducibleComponent,
    PrimaryComponent,
    associated_primes,
    chained_power_components,
    irreducible_decomposition,
    is_primary,
    primary_decomposition,
    verify_decomposition,
)
from borelreg.ideal import MonomialIdeal, intersect_all
from borelreg.monomial import RingContext
from borelreg.text import parse_ideal
from borelreg.worked_examples import staircase_decomposition, staircase_ideal
from conftest import box, ideals

XY = RingContext(2, ("x", "y"))
XYZ = RingContext(3, ("x", "y", "z"))


def I(text, ring=XY):
    return parse_ideal(ring, text)


def test_irreducible_two_generator():
    comps = irreducible_decomposition(I("x^2, x*y"))
    assert sorted(str(c.ideal()) for c in comps) == ["x", "y, x^2"]
    assert sorted((c.pure_powers for c in comps), key=len) == [{1: 1}, {1: 2, 2: 1}]


def test_irreducible_input_is_its_own_decomposition():
    comps = irreducible_decomposition(I("x^3, y^2"))
    assert len(comps) == 1 and comps[0].ideal() == I("x^3, y^2")


def test_staircase_decomposition_brute_force():
    q = I("x^10, x^6*y^3, x^2*y^7, y^8")
    comps = irreducible_decomposition(q)
    for u in box(25, 2):
        if sum(u) <= 25:
            assert q.contains(u) == all(c.ideal().contains(u) for c in comps)
    # one corner per inner step of the staircase
    assert sorted(c.exps for c in comps) == [(2, 8), (6, 7), (10, 3)]


def test_decomposition_rejects_improper():
    with pytest.raises(ValueError):
        irreducible_decomposition(MonomialIdeal.zero(XY))
    with pytest.raises(ValueError):
        irreducible_decomposition(MonomialIdeal.unit(XY))


def test_component_validation():
    with pytest.raises(ValueError):
        IrreducibleComponent(XY, (0, 0))
    with pytest.raises(ValueError):
        IrreducibleComponent.from_powers(XY, {1: 0})
    c = IrreducibleComponent.from_powers(XYZ, {1: 3, 2: 2})
    assert c.support == (1, 2) and c.regularity() == 4


def test_associated_primes_examples():
    assert associated_primes(staircase_ideal()) == [(1, 2), (1, 2, 3)]
    sym = symbolic_power(staircase_ideal(), 2, staircase_decomposition())
    assert associated_primes(sym) == [(1, 2)]
    assert associated_primes(I("x^3")) == [(1,)]


def test_primary_decomposition_two_generator():
    comps = primary_decomposition(I("x^2, x*y"))
    assert [(c.radical, str(c.ideal)) for c in comps] == [((1, 2), "y, x^2"), ((1,), "x")]


def test_primary_decomposition_irreducible_input():
    comps = primary_decomposition(I("x^3, y^2"))
    assert len(comps) == 1 and comps[0].ideal == I("x^3, y^2")


def test_primary_decomposition_staircase():
    E = staircase_ideal()
    comps = primary_decomposition(E)
    assert [c.radical for c in comps] == [(1, 2, 3), (1, 2)]
    assert verify_decomposition(E, comps).ok
    for u in box(12, 3):
        assert E.contains(u) == all(c.ideal.contains(u) for c in comps)


def test_supplied_staircase_decomposition_passes():
    assert verify_decomposition(staircase_ideal(), staircase_decomposition()).ok


def test_verify_flags_each_failure():
    J = I("x^2, x*y")
    wrong = verify_decomposition(J, [I("x")])
    assert not wrong.intersection_ok and wrong.primary_ok
    nonprimary = verify_decomposition(J, [J])
    assert nonprimary.intersection_ok and not nonprimary.primary_ok
    redundant = verify_decomposition(J, [I("x"), I("x^2, y"), I("x, y")])
    assert redundant.intersection_ok and not redundant.irredundant_ok


def test_is_primary():
    assert is_primary(I("x^2, x*y, y^3"))
    assert not is_primary(I("x^2, x*y"))
    assert not is_primary(MonomialIdeal.unit(XY))
    with pytest.raises(ValueError):
        PrimaryComponent.of(I("x*y"))


def test_chained_power_probe_two_generator():
    # Q_1 = (x^2, y), Q_2 = (x); probe both readings of the last exponent for q = 2.
    J = I("x^2, x*y")
    comps = primary_decomposition(J)
    J2 = J.power(2)
    for last in (2, 1):
        cand = chained_power_components(comps, 2, last)
        verdict = verify_decomposition(J2, cand)
        meet = intersect_all(XY, cand)
        same = all(J2.contains(u) == meet.contains(u) for u in box(8, 2))
        assert verdict.intersection_ok == same
        assert not same
    # reading q - 1 lets x^2*y in, reading q drops x^4
    assert intersect_all(XY, chained_power_components(comps, 2, 1)) == I("x^4, x^2*y")
    assert intersect_all(XY, chained_power_components(comps, 2, 2)) == I("x^5, x^4*y, x^3*y^2")


@given(ideals(max_n=3, max_gens=5, max_exp=4))
def test_irreducible_round_trip_and_irredundance(ideal):
    comps = [c.ideal() for c in irreducible_decomposition(ideal)]
    assert intersect_all(ideal.ring, comps) == ideal
    for i in range(len(comps)):
        others = intersect_all(ideal.ring, comps[:i] + comps[i + 1:])
        assert not others <= comps[i]


@given(ideals(max_n=3, max_gens=5, max_exp=4))
def test_primary_decomposition_is_valid(ideal):
    comps = primary_decomposition(ideal)
    assert verify_decomposition(ideal, comps).ok
    assert sorted(c.radical for c in comps) == sorted(associated_primes(ideal))


@given(st.integers(0, 10_000), st.integers(2, 4), st.integers(1, 3))
def test_borel_ass_relations(seed, n, q):
    J = random_borel_ideal(seed, n, 3, 4)
    ass = set(associated_primes(J))
    assert all(a == tuple(range(1, len(a) + 1)) for a in ass)
    sizes = sorted(len(a) for a in ass)
    assert len(set(sizes)) == len(sizes)  # prefixes: totally ordered
    assert set(associated_primes(J.power(q))) <= ass
    assert set(associated_primes(symbolic_power(J, q))) <= ass
    assert set(associated_primes(J.bracket_power(q))) == ass


def test_chained_power_probe_reversed_order():
    # (x) first, then (x^2, y): neither reading reaches I^2 = (x^4, x^3y, x^2y^2)
    comps = [I("x"), I("x^2, y")]
    assert intersect_all(XY, chained_power_components(comps, 2, 1)) == I("x^4, x^2*y")
    assert intersect_all(XY, chained_power_components(comps, 2, 2)) == I("x^6, x^4*y, x^3*y^2, x^2*y^3")
