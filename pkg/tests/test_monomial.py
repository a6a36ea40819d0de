import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from borelreg.monomial import (
    MAX_EXPONENT,
    ExponentOverflowError,
    Monomial,
    RingContext,
    RingMismatchError,
    monomials_of_degree,
)

R3 = RingContext(3, ("x", "y", "z"))
R2 = RingContext(2, ("x", "y"))


def m(*exps, ring=R3):
    return Monomial(ring, exps)


@st.composite
def monomial_pairs(draw, max_exp=5):
    n = draw(st.integers(1, 4))
    ring = RingContext(n)
    vec = st.lists(st.integers(0, max_exp), min_size=n, max_size=n)
    return Monomial(ring, draw(vec)), Monomial(ring, draw(vec))


def test_ring_defaults_and_validation():
    assert RingContext(3).names == ("x1", "x2", "x3")
    with pytest.raises(ValueError):
        RingContext(0)
    with pytest.raises(ValueError):
        RingContext(2, ("a", "a"))
    with pytest.raises(ValueError):
        RingContext(2, ("a",))
    # univariate rings are allowed for sub-ring work
    assert RingContext(1).n == 1


def test_divides_examples():
    assert m(1, 1, 0).divides(m(2, 1, 0))
    assert not m(2, 0, 0).divides(m(1, 1, 0))


def test_lcm_examples():
    assert m(2, 0, 0).lcm(m(1, 1, 0)) == m(2, 1, 0)


def test_power_examples():
    u = m(2, 1, 0)
    assert u ** 3 == m(6, 3, 0)
    assert u.power(1) == u
    assert u.power(0) == R3.one()


def test_max_var_index():
    assert m(2, 1, 0).max_var_index() == 2
    assert R3.one().max_var_index() is None
    assert m(0, 0, 5).max_var_index() == 3


def test_quotient_by_gcd():
    assert m(3, 1, 0).quotient_by_gcd(m(1, 2, 0)) == m(2, 0, 0)
    u = m(4, 0, 2)
    assert u.quotient_by_gcd(R3.one()) == u
    assert u.quotient_by_gcd(u) == R3.one()


def test_ring_mismatch():
    with pytest.raises(RingMismatchError):
        m(1, 0, 0).divides(Monomial(R2, (1, 0)))
    with pytest.raises(RingMismatchError):
        m(1, 0, 0).lcm(Monomial(RingContext(3), (1, 0, 0)))


def test_overflow_is_reported():
    big = m(MAX_EXPONENT, 0, 0)
    with pytest.raises(ExponentOverflowError):
        big * m(1, 0, 0)
    with pytest.raises(ExponentOverflowError):
        m(2 ** 30, 0, 0) ** 2


def test_bad_vectors():
    with pytest.raises(ValueError):
        Monomial(R3, (1, 2))
    with pytest.raises(ValueError):
        Monomial(R3, (1, -1, 0))


def test_canonical_order_is_graded_then_lex():
    mons = [m(0, 2, 0), m(1, 0, 0), m(2, 0, 0), m(1, 1, 0), m(0, 0, 1)]
    assert [u.exps for u in sorted(mons)] == [(1, 0, 0), (0, 0, 1), (2, 0, 0), (1, 1, 0), (0, 2, 0)]


def test_str():
    assert str(Monomial(RingContext(3), (2, 0, 1))) == "x1^2*x3"
    assert str(R3.one()) == "1"


def test_monomials_of_degree_counts():
    for n in range(1, 4):
        for d in range(5):
            got = list(monomials_of_degree(n, d))
            assert len(got) == len(set(got))
            assert all(sum(e) == d for e in got)
            assert len(got) == sum(1 for e in itertools.product(range(d + 1), repeat=n) if sum(e) == d)


@given(monomial_pairs())
def test_divides_reflexive_and_antisymmetric(pair):
    u, v = pair
    assert u.divides(u)
    if u.divides(v) and v.divides(u):
        assert u == v


@given(monomial_pairs(max_exp=3))
def test_lcm_is_least_common_multiple(pair):
    u, v = pair
    w = u.lcm(v)
    assert u.divides(w) and v.divides(w)
    assert u.lcm(u) == u and u.lcm(u.ring.one()) == u
    # every common multiple under the cap is a multiple of the lcm
    for e in itertools.product(range(4), repeat=u.ring.n):
        c = Monomial(u.ring, e)
        if u.divides(c) and v.divides(c):
            assert w.divides(c)


@given(monomial_pairs(), st.integers(0, 4))
def test_power_distributes_and_scales_degree(pair, q):
    u, v = pair
    assert (u * v) ** q == (u ** q) * (v ** q)
    assert (u ** q).degree == q * u.degree
