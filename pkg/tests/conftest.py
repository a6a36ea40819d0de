import itertools

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from borelreg.ideal import MonomialIdeal
from borelreg.monomial import RingContext

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


# -- brute force ----------------------------------------------------------


def box(bound, n):
    """All exponent vectors with every entry <= bound."""
    return itertools.product(range(bound + 1), repeat=n)


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def in_gens(gens, u):
    return any(divides(g, u) for g in gens)


def brute_in_product(I, J, u):
    # u in I*J iff u = a*b with a in I, b in J; it suffices to try a | u.
    for a in itertools.product(*(range(e + 1) for e in u)):
        b = tuple(x - y for x, y in zip(u, a))
        if in_gens(I.exps, a) and in_gens(J.exps, b):
            return True
    return False


def brute_saturated(I, u, j, bound):
    """u in (I : x_j^inf), trying x_j^k for k <= bound."""
    for k in range(bound + 1):
        v = list(u)
        v[j - 1] += k
        if in_gens(I.exps, v):
            return True
    return False


# -- strategies -----------------------------------------------------------


def rings(min_n=1, max_n=4):
    return st.integers(min_n, max_n).map(RingContext)


@st.composite
def exponent_vectors(draw, n, max_exp=4):
    return tuple(draw(st.lists(st.integers(0, max_exp), min_size=n, max_size=n)))


@st.composite
def ideals(draw, min_n=1, max_n=3, max_gens=5, max_exp=4, proper=True):
    ring = draw(rings(min_n, max_n))
    gens = draw(st.lists(exponent_vectors(ring.n, max_exp), min_size=1, max_size=max_gens))
    if proper:
        gens = [g if any(g) else (1,) + g[1:] for g in gens]
    return MonomialIdeal(ring, gens)


@st.composite
def ideal_pairs(draw, max_n=3, max_gens=4, max_exp=4):
    ring = draw(rings(1, max_n))
    a = draw(st.lists(exponent_vectors(ring.n, max_exp), min_size=1, max_size=max_gens))
    b = draw(st.lists(exponent_vectors(ring.n, max_exp), min_size=1, max_size=max_gens))
    return MonomialIdeal(ring, a), MonomialIdeal(ring, b)
