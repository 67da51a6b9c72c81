import itertools

import numpy as np
import pytest

from bpaction.f2poly import (F2Poly, NotDivisible, add, evaluate, exact_divide,
                             from_json, is_symmetric, mul, parse_text,
                             permute_variables, substitute_linear, to_json,
                             to_text)
from bpaction.symfun import monomial_symmetric

from oracles import exists_quotient, naive_mul, naive_substitute, terms_of


def P(k, *terms):
    return F2Poly.from_terms(k, terms)


x1, x2, x3 = (F2Poly.variable(3, t) for t in (1, 2, 3))


def test_add_cancels():
    assert (x1 + x2) + (x2 + x3) == x1 + x3


def test_add_self_is_zero():
    p = P(3, (1, 2, 0), (0, 0, 4), (0, 0, 0))
    assert not add(p, p)
    assert add(F2Poly.zero(3), p) == p


def test_duplicate_terms_cancel_on_construction():
    assert P(2, (1, 1), (1, 1), (2, 0)) == P(2, (2, 0))


def test_mismatched_k():
    with pytest.raises(ValueError):
        add(F2Poly.one(2), F2Poly.one(3))
    with pytest.raises(ValueError):
        mul(F2Poly.one(2), F2Poly.one(3))


def test_frobenius_example():
    s = F2Poly.variable(2, 1) + F2Poly.variable(2, 2)
    assert s * s == P(2, (2, 0), (0, 2))


def test_mul_m12_m21():
    m = monomial_symmetric(2, (1, 2))
    expected = naive_mul(terms_of(m), terms_of(m))
    assert expected == {(4, 2), (2, 4)}
    assert terms_of(mul(m, m)) == expected


def test_mul_by_zero():
    assert not mul(x1 + x2, F2Poly.zero(3))


def test_exact_divide_examples():
    num = P(2, (2, 4), (4, 2))
    den = P(2, (1, 2), (2, 1))
    q = exact_divide(num, den)
    assert q == P(2, (2, 1), (1, 2))
    assert mul(q, den) == num

    num = P(2, (3, 0), (0, 3))
    den = P(2, (1, 0), (0, 1))
    q = exact_divide(num, den)
    assert q == P(2, (2, 0), (1, 1), (0, 2))
    assert mul(q, den) == num

    assert exact_divide(num, num) == F2Poly.one(2)


def test_exact_divide_errors():
    with pytest.raises(ZeroDivisionError):
        exact_divide(x1, F2Poly.zero(3))
    with pytest.raises(NotDivisible):
        exact_divide(x1 * x1 + x2, x1)
    with pytest.raises(NotDivisible):
        exact_divide(P(2, (2, 0), (0, 2), (1, 1)), P(2, (1, 0), (0, 1)))


@pytest.mark.parametrize("k,dq", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)])
def test_division_failure_is_genuine(k, dq):
    # every homogeneous (num, den) pair that fails really has no quotient
    import random
    rng = random.Random(100 * k + dq)
    dens = [P(k, (1,) + (0,) * (k - 1), (0, 1) + (0,) * (k - 2)),
            P(k, (1,) + (1,) + (0,) * (k - 2), (2,) + (0,) * (k - 1))]
    basis = [m for m in itertools.product(range(dq + 3), repeat=k)]
    failures = 0
    for den in dens:
        dd = den.degree
        deg_basis = [m for m in basis if sum(m) == dd + dq]
        for _ in range(25):
            num = F2Poly.from_terms(k, rng.sample(deg_basis, rng.randint(1, min(4, len(deg_basis)))))
            try:
                q = exact_divide(num, den)
            except NotDivisible:
                failures += 1
                assert not exists_quotient(terms_of(num), terms_of(den), k, dq)
            else:
                assert mul(q, den) == num
    assert failures > 0


def test_substitute_examples():
    p = F2Poly.from_terms(2, [(2, 1)])
    assert substitute_linear(p, np.eye(2, dtype=int)) == p
    assert substitute_linear(p, [[0, 1], [1, 0]]) == P(2, (1, 2))
    c1 = P(2, (2, 0), (1, 1), (0, 2))
    assert substitute_linear(c1, [[1, 1], [0, 1]]) == c1


def test_substitute_errors():
    with pytest.raises(ValueError):
        substitute_linear(x1, np.eye(2, dtype=int))
    with pytest.raises(ValueError):
        substitute_linear(x1, 2 * np.eye(3, dtype=int))


def test_substitute_matches_naive_on_all_2x2_and_singular_3x3():
    p2 = P(2, (3, 1), (0, 5), (2, 2), (1, 0))
    for bits in itertools.product((0, 1), repeat=4):
        A = np.array(bits).reshape(2, 2)
        assert terms_of(substitute_linear(p2, A)) == naive_substitute(terms_of(p2), A, 2)
    p3 = P(3, (3, 1, 2), (0, 5, 0), (1, 1, 1), (0, 0, 0))
    for A in ([[1, 1, 0], [1, 1, 0], [0, 0, 1]], [[0, 0, 0], [1, 0, 1], [0, 1, 1]], [[1, 1, 1]] * 3):
        assert terms_of(substitute_linear(p3, A)) == naive_substitute(terms_of(p3), A, 3)


def test_evaluate():
    assert evaluate(F2Poly.zero(2), (1, 0)) == 0
    assert evaluate(P(2, (1, 0), (0, 1)), (1, 1)) == 0
    assert evaluate(P(2, (1, 1)), (1, 1)) == 1
    assert evaluate(P(2, (0, 0), (3, 0)), (0, 1)) == 1


def test_is_symmetric():
    assert is_symmetric(x1 + x2 + x3)
    assert not is_symmetric(P(2, (2, 1)))
    assert is_symmetric(monomial_symmetric(3, (4, 2, 1)))
    assert not is_symmetric(P(3, (1, 1, 0), (0, 1, 1)))


def test_permute_variables():
    assert permute_variables(P(3, (3, 2, 1)), [2, 0, 1]) == P(3, (2, 1, 3))


def test_canonical_text():
    assert to_text(F2Poly.zero(2)) == "0"
    assert to_text(F2Poly.one(2)) == "1"
    p = P(3, (1, 0, 0), (0, 2, 1), (4, 2, 1), (0, 0, 0))
    assert to_text(p) == "x1^4*x2^2*x3 + x2^2*x3 + x1 + 1"
    assert parse_text(to_text(p), 3) == p


def test_canonical_json():
    p = P(2, (0, 1), (2, 0))
    assert to_json(p) == '{"k": 2, "terms": [[2, 0], [0, 1]]}'
    assert from_json(to_json(p)) == p


def test_graded_lex_order():
    p = P(3, (0, 0, 3), (1, 1, 1), (3, 0, 0), (0, 4, 0), (2, 0, 1))
    assert p.terms == [(0, 4, 0), (3, 0, 0), (2, 0, 1), (1, 1, 1), (0, 0, 3)]
    assert p.leading_term() == (0, 4, 0)


def test_overflow_is_detected():
    big = F2Poly.monomial(4, (4000, 0, 0, 0))
    with pytest.raises(OverflowError):
        mul(big, big)
    with pytest.raises(OverflowError):
        F2Poly.monomial(4, (5000, 0, 0, 0))


def test_pow():
    s = x1 + x2
    assert s**4 == P(3, (4, 0, 0), (0, 4, 0))
    assert s**0 == F2Poly.one(3)
    assert s**3 == s * s * s
