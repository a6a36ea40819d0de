import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from borelreg.betti import (
    BettiTable,
    CapExceededError,
    SimplicialComplex,
    betti_numbers,
    integer_rank,
    multigraded_betti_numbers,
    reduced_homology_rank,
    regularity_oracle,
    upper_koszul_complex,
)
from borelreg.borel import random_borel_ideal, regularity_seq
from borelreg.ideal import MonomialIdeal
from borelreg.monomial import RingContext
from borelreg.text import parse_ideal
from conftest import ideals

XY = RingContext(2, ("x", "y"))


def I(text, ring=XY):
    return parse_ideal(ring, text)


def homology(cx):
    return [reduced_homology_rank(cx, d) for d in range(-1, 3)]


def test_koszul_complex_of_the_maximal_ideal():
    cx = upper_koszul_complex(I("x, y"), (1, 1))
    # x^(1,1 - F) in (x, y) for F = ∅, {x}, {y} but not {x, y}
    assert cx.facets == (frozenset({0}), frozenset({1}))
    assert homology(cx) == [0, 1, 0, 0]


def test_koszul_complex_outside_the_ideal_is_void():
    cx = upper_koszul_complex(I("x, y"), (0, 0))
    assert cx.is_void() and homology(cx) == [0, 0, 0, 0]
    with pytest.raises(ValueError):
        upper_koszul_complex(I("x, y"), (2, 0))


def test_homology_examples():
    assert homology(SimplicialComplex(2, (frozenset({0}), frozenset({1})))) == [0, 1, 0, 0]
    assert homology(SimplicialComplex(3, (frozenset({0, 1, 2}),))) == [0, 0, 0, 0]
    hollow = SimplicialComplex(3, tuple(frozenset(e) for e in ((0, 1), (1, 2), (0, 2))))
    assert homology(hollow) == [0, 0, 1, 0]
    # {∅} has reduced homology in dimension -1 only
    assert homology(SimplicialComplex(2, (frozenset(),))) == [1, 0, 0, 0]
    with pytest.raises(ValueError):
        reduced_homology_rank(hollow, -2)


def test_complex_validation():
    with pytest.raises(ValueError):
        SimplicialComplex.from_faces(3, [(0, 1), (0,)])
    ok = SimplicialComplex.from_faces(3, [(), (0,), (1,), (0, 1)])
    assert ok.facets == (frozenset({0, 1}),)
    with pytest.raises(ValueError):
        SimplicialComplex(2, (frozenset({2}),))
    with pytest.raises(CapExceededError):
        SimplicialComplex(13, ())


def test_facet_order_does_not_matter():
    a = SimplicialComplex(3, (frozenset({0, 1}), frozenset({2})))
    b = SimplicialComplex(3, (frozenset({2}), frozenset({1, 0}), frozenset({0})))
    assert a == b


def test_betti_two_generator():
    assert betti_numbers(I("x^2, x*y")).entries == {(0, 2): 2, (1, 3): 1}
    assert regularity_oracle(I("x^2, x*y")) == 2


def test_betti_principal_and_complete_intersection():
    assert betti_numbers(I("x^3*y")).entries == {(0, 4): 1}
    assert betti_numbers(I("x^3, y^2")).entries == {(0, 2): 1, (0, 3): 1, (1, 5): 1}
    assert multigraded_betti_numbers(I("x^3, y^2"))[((3, 2), 1)] == 1


def test_betti_table_helpers():
    t = BettiTable({(0, 2): 2, (1, 3): 1})
    assert t[(0, 2)] == 2 and t[(5, 5)] == 0 and t.total(0) == 2
    with pytest.raises(ValueError):
        BettiTable().regularity()
    assert betti_numbers(MonomialIdeal.zero(XY)).entries == {}


def test_caps():
    with pytest.raises(CapExceededError):
        betti_numbers(I("x^13"))
    assert betti_numbers(I("x^13"), caps=False).entries == {(0, 13): 1}
    with pytest.raises(CapExceededError):
        betti_numbers(MonomialIdeal(RingContext(7), [(1, 0, 0, 0, 0, 0, 0)]))


@given(ideals(max_n=3, max_gens=5, max_exp=3))
def test_beta_zero_counts_generators(ideal):
    table = betti_numbers(ideal)
    assert table.total(0) == len(ideal)
    for g in ideal.exps:
        assert multigraded_betti_numbers(ideal)[(g, 0)] == 1


@given(ideals(max_n=3, max_gens=5, max_exp=3))
def test_euler_characteristic_vanishes(ideal):
    # S/I has rank 0 for a nonzero proper ideal, so sum (-1)^i beta_i(I) = 1
    chi = sum((-1) ** i * v for (i, _), v in betti_numbers(ideal).entries.items())
    assert chi == 1


@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=5))
def test_integer_rank_matches_numpy(rows):
    assert integer_rank(rows) == np.linalg.matrix_rank(np.array(rows, dtype=float))


@settings(max_examples=25)
@given(st.integers(0, 10 ** 6), st.integers(2, 4), st.integers(1, 2))
def test_oracle_agrees_with_closed_form(seed, n, q):
    J = random_borel_ideal(seed, n, 3, 3)
    assert regularity_oracle(J) == regularity_seq(J)
    if q > 1 and max(J.lcm_exps()) * q <= 6:
        assert regularity_oracle(J.power(q)) == regularity_seq(J.power(q))
