import itertools

import pytest

from bpaction.combinat import heap_permutations, set_partitions, stirling2
from bpaction.f2poly import F2Poly, NotDivisible, exact_divide, is_symmetric, mul
from bpaction.plj import (BudgetExceeded, PljQuery, census_size, denominator,
                          expected_odd_tuples, numerator, odd_tuples,
                          p0_by_partitions, p0_by_surjections, p_by_division,
                          p_by_system, p_closed_ell_eq_k, p_closed_k3,
                          parity_census, system_residual)
from bpaction.symfun import (complete_homogeneous, monomial_symmetric,
                             two_power_monomial_sum)

from oracles import census_bruteforce

DISPLAY_P40 = [(12, 2, 1), (10, 4, 1), (8, 6, 1), (9, 4, 2), (8, 5, 2), (8, 4, 3)]


def msum(k, *part_lists):
    total = F2Poly.zero(k)
    for parts in part_lists:
        total = total + monomial_symmetric(k, parts)
    return total


def test_query_validation():
    with pytest.raises(ValueError):
        PljQuery(3, 2, 0)
    with pytest.raises(ValueError):
        PljQuery(3, 3, 3)
    with pytest.raises(ValueError):
        PljQuery(0, 1, 0)
    assert PljQuery(3, 4, 1).degree == 14


def test_division_examples():
    assert p_by_division(3, 3, 0) == monomial_symmetric(3, (4, 2, 1))
    assert p_by_division(3, 4, 0) == msum(3, *DISPLAY_P40)
    assert p_by_division(1, 3, 0) == F2Poly.monomial(1, (7,))


def test_system_examples():
    p0, p1 = p_by_system(2, 2)
    assert p0 == monomial_symmetric(2, (2, 1))
    assert p1 == complete_homogeneous(2, 2, 2)
    assert p_by_system(3, 3) == [two_power_monomial_sum(3, 8 - 2**j) for j in range(3)]
    assert p_by_system(1, 4) == [F2Poly.monomial(1, (15,))]


def test_closed_k3_examples():
    assert p_closed_k3(3, 0) == monomial_symmetric(3, (4, 2, 1))
    assert p_closed_k3(4, 0) == msum(3, *DISPLAY_P40)
    # partitions of 4 with odd coefficient: (4), (2,2), (2,1,1)
    assert p_closed_k3(3, 2) == msum(3, (4,), (2, 2), (2, 1, 1))
    assert p_closed_k3(3, 2) == p_by_division(3, 3, 2)
    with pytest.raises(ValueError):
        p_closed_k3(2, 0)


def test_closed_ell_eq_k_examples():
    assert p_closed_ell_eq_k(3, 0) == monomial_symmetric(3, (4, 2, 1))
    assert p_closed_ell_eq_k(2, 1) == p_by_division(2, 2, 1)
    assert p_closed_ell_eq_k(1, 0) == F2Poly.monomial(1, (1,))


def test_surjection_examples():
    assert p0_by_surjections(3, 4) == msum(3, *DISPLAY_P40)
    assert p0_by_surjections(4, 4) == monomial_symmetric(4, (8, 4, 2, 1))
    assert p0_by_surjections(1, 2) == F2Poly.monomial(1, (3,))


def test_partition_examples():
    # S1={8,2}, S2={4}, S3={1} contributes m_{10,4,1}
    sums = set()
    for rgs in set_partitions(4, 3):
        blocks = [sum(2**i for i, b in enumerate(rgs) if b == v) for v in range(3)]
        sums.add(tuple(sorted(blocks, reverse=True)))
    assert (10, 4, 1) in sums
    assert p0_by_partitions(3, 3) == monomial_symmetric(3, (4, 2, 1))
    expected = msum(2, (6, 1), (5, 2), (4, 3))
    assert p0_by_partitions(2, 3) == expected == p_by_division(2, 3, 0)


def test_set_partitions_are_rgs_and_complete():
    for n in range(1, 7):
        for k in range(1, n + 1):
            seen = list(set_partitions(n, k))
            assert len(seen) == len(set(seen)) == stirling2(n, k)
            for a in seen:
                assert a[0] == 0
                assert max(a) == k - 1
                assert all(a[i] <= 1 + max(a[:i]) for i in range(1, n))


def test_heap_permutations():
    for n in range(0, 6):
        perms = list(heap_permutations(range(n)))
        assert sorted(perms) == sorted(itertools.permutations(range(n)))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_defining_and_system_identity(k):
    for ell in range(k, k + 4):
        ps = [p_by_division(k, ell, j) for j in range(k)]
        for j, p in enumerate(ps):
            assert mul(p, denominator(k)) == numerator(k, ell, j)
            assert is_symmetric(p)
            assert p.is_homogeneous() and p.degree == 2**ell - 2**j
        for i in range(k):
            assert not system_residual(k, ell, ps, i)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_surjections_equal_partitions(k):
    for ell in range(k, k + 4):
        assert p0_by_surjections(k, ell) == p0_by_partitions(k, ell)


def test_surjection_monomials_are_distinct():
    # binary expansions of the exponents encode f, so nothing cancels
    assert len(p0_by_surjections(3, 5)) == 150 == 6 * stirling2(5, 3)


def test_negative_control_non_two_power():
    with pytest.raises(NotDivisible):
        exact_divide(monomial_symmetric(3, (2, 4, 6)), denominator(3))


@pytest.mark.parametrize("k,ell", [(2, 2), (2, 3), (2, 4), (3, 3), (3, 4), (3, 5)])
def test_census_matches_bruteforce(k, ell):
    census = parity_census(k, ell)
    assert census == census_bruteforce(k, ell)
    assert odd_tuples(census) == expected_odd_tuples(k, ell)


def test_census_small_cases():
    assert odd_tuples(parity_census(2, 2)) == {(2, 4), (4, 2)}
    assert odd_tuples(parity_census(3, 3)) == set(itertools.permutations((2, 4, 8)))
    assert odd_tuples(parity_census(3, 4)) == set(itertools.permutations((2, 4, 16)))


def test_census_budget():
    assert census_size(3, 4) == 6 * 36
    with pytest.raises(BudgetExceeded):
        parity_census(3, 5, budget=10)
    with pytest.raises(BudgetExceeded):
        p0_by_surjections(4, 7, budget=100)
