import random

from hypothesis import given, settings
from hypothesis import strategies as st

from bpaction.f2poly import F2Poly, substitute_linear
from bpaction.verify import random_gl

from oracles import naive_substitute, terms_of
import properties as props

PROFILE = settings(max_examples=500, derandomize=True, deadline=None)


@st.composite
def polys(draw, k=None, max_terms=6, max_exp=5):
    k = draw(st.integers(1, 4)) if k is None else k
    terms = draw(st.lists(st.tuples(*[st.integers(0, max_exp)] * k), max_size=max_terms))
    return F2Poly.from_terms(k, terms)


@st.composite
def same_k(draw, n, max_k=4, **kw):
    k = draw(st.integers(1, max_k))
    return tuple(draw(polys(k=k, **kw)) for _ in range(n))


def invertible(k):
    return st.integers(0, 2**32).map(lambda seed: random_gl(k, random.Random(seed)))


@PROFILE
@given(same_k(3))
def test_ring_axioms(t):
    assert props.ring_axioms(*t)


@PROFILE
@given(same_k(2))
def test_frobenius(t):
    assert props.frobenius(*t)


@PROFILE
@given(same_k(2))
def test_division_round_trip(t):
    assert props.division_round_trip(*t)


@PROFILE
@given(same_k(2, max_k=3, max_terms=4, max_exp=4), st.integers(0, 12))
def test_cartan(t, n):
    assert props.cartan(*t, n)


@PROFILE
@given(polys())
def test_format_round_trip(p):
    assert props.format_round_trip(p)


@settings(max_examples=200, derandomize=True, deadline=None)
@given(st.integers(2, 4).flatmap(lambda k: st.tuples(polys(k=k, max_exp=3), invertible(k), invertible(k))))
def test_substitution_is_right_action(t):
    p, A, B = t
    assert props.right_action(p, A, B)
    assert terms_of(substitute_linear(p, A)) == naive_substitute(terms_of(p), A, p.k)
