"""The action polynomials p_{l,j}, computed several independent ways.

p_{l,j} is the v_l-component of the v_j-action on tensor classes z_I,
mod higher filtration.  It is the exact quotient of two 2-power
Vandermonde determinants; the closed forms below are checked against it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .combinat import heap_permutations, set_partitions, stirling2
from .f2poly import F2Poly, add, exact_divide, mul
from .symfun import (binom_mod2, monomial_symmetric, two_power_monomial_sum,
                     vandermonde_2power)

DEFAULT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed the configured size cap."""


@dataclass(frozen=True)
class PljQuery:
    k: int
    ell: int
    j: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.ell < self.k:
            raise ValueError(f"need ell >= k, got ell={self.ell}, k={self.k}")
        if not 0 <= self.j <= self.k - 1:
            raise ValueError(f"need 0 <= j <= k-1, got j={self.j}, k={self.k}")

    @property
    def degree(self) -> int:
        return 2**self.ell - 2**self.j


def denominator(k: int) -> F2Poly:
    """m_{1,2,...,2^{k-1}}, the product of the nonzero linear forms."""
    return monomial_symmetric(k, [2**t for t in range(k)])


def numerator(k: int, ell: int, j: int) -> F2Poly:
    parts = [2**t for t in range(k) if t != j] + [2**ell]
    return monomial_symmetric(k, parts)


@lru_cache(maxsize=None)
def _p_by_division(k: int, ell: int, j: int) -> F2Poly:
    return exact_divide(numerator(k, ell, j), denominator(k))


def p_by_division(k: int, ell: int, j: int) -> F2Poly:
    q = PljQuery(k, ell, j)
    return _p_by_division(q.k, q.ell, q.j)


def p_by_system(k: int, ell: int) -> list[F2Poly]:
    """Solve sum_j p_j x_i^{2^j} = x_i^{2^l} (i = 1..k) by Cramer's rule.

    Both determinants are expanded independently of monomial_symmetric, by
    summing over placements of the column exponents.
    """
    PljQuery(k, ell, 0)
    columns = [2**t for t in range(k)]
    det = vandermonde_2power(k, columns)
    solution = []
    for j in range(k):
        replaced = list(columns)
        replaced[j] = 2**ell
        solution.append(exact_divide(vandermonde_2power(k, replaced), det))
    return solution


def _partitions_3(n: int, min_last: int):
    """(a, b, c) with a >= b >= c >= min_last and a + b + c == n."""
    for c in range(min_last, n // 3 + 1):
        for b in range(c, (n - c) // 2 + 1):
            yield n - b - c, b, c


def p_closed_k3(ell: int, j: int) -> F2Poly:
    """Closed form of p_{l,j} for three variables (l >= 3)."""
    if ell < 3:
        raise ValueError(f"the k=3 closed form needs ell >= 3, got {ell}")
    result = F2Poly.zero(3)
    if j == 0:
        for a, b, c in _partitions_3(2**ell - 1, 1):
            if binom_mod2(b + c, c):
                result = add(result, monomial_symmetric(3, (a, b, c)))
    elif j == 1:
        for a, b, c in _partitions_3(2**ell - 2, 0):
            if b == 0:
                continue
            if c == 0:
                coeff = (1 + b) & 1
            else:
                coeff = (1 + binom_mod2(b + c, c - 1) + binom_mod2(b + c + 1, c + 1)) & 1
            if coeff:
                result = add(result, monomial_symmetric(3, (a, b, c)))
    elif j == 2:
        for a, b, c in _partitions_3(2**ell - 4, 0):
            if (1 + binom_mod2(b + c + 2, c + 1)) & 1:
                result = add(result, monomial_symmetric(3, (a, b, c)))
    else:
        raise ValueError(f"j must be 0, 1 or 2 for k=3, got {j}")
    return result


def p_closed_ell_eq_k(k: int, j: int) -> F2Poly:
    PljQuery(k, k, j)
    return two_power_monomial_sum(k, 2**k - 2**j)


def surjection_count(ell: int, k: int) -> int:
    return math.factorial(k) * stirling2(ell, k)


def p0_by_surjections(k: int, ell: int, budget: int = DEFAULT_BUDGET) -> F2Poly:
    """Sum over surjections f: {0..l-1} -> {1..k} of prod x_{f(i)}^{2^i}."""
    PljQuery(k, ell, 0)
    if k**ell > budget:
        raise BudgetExceeded(f"{k}^{ell} functions exceed the budget {budget}")
    rows = []
    for f in product(range(k), repeat=ell):
        if len(set(f)) < k:
            continue
        exps = [0] * k
        for i, t in enumerate(f):
            exps[t] += 2**i
        rows.append(exps)
    return F2Poly.from_terms(k, rows)


def _block_sums(rgs: tuple[int, ...], k: int) -> list[int]:
    sums = [0] * k
    for i, block in enumerate(rgs):
        sums[block] += 2**i
    return sums


def p0_by_partitions(k: int, ell: int, budget: int = DEFAULT_BUDGET) -> F2Poly:
    """Sum of m_{|S_1|,...,|S_k|} over partitions of {1,2,...,2^{l-1}} into k blocks."""
    PljQuery(k, ell, 0)
    if stirling2(ell, k) > budget:
        raise BudgetExceeded(f"S({ell},{k}) partitions exceed the budget {budget}")
    result = F2Poly.zero(k)
    for rgs in set_partitions(ell, k):
        result = add(result, monomial_symmetric(k, _block_sums(rgs, k)))
    return result


def census_size(k: int, ell: int) -> int:
    """Number of (S, t) matrices enumerated by parity_census."""
    return stirling2(ell, k) * math.factorial(k) ** 2


def parity_census(k: int, ell: int, budget: int = DEFAULT_BUDGET) -> dict[tuple[int, ...], int]:
    """Parity of the number of ways each k-tuple n splits as n_i = |S_i| + t_i.

    S_1..S_k runs over ordered partitions of {1, 2, ..., 2^{l-1}} into k
    nonempty blocks and t over permutations of (1, 2, ..., 2^{k-1}).  Every
    achievable tuple is a key; the value is its count mod 2.
    """
    PljQuery(k, ell, 0)
    size = census_size(k, ell)
    if size > budget:
        raise BudgetExceeded(f"census of {size} matrices exceeds the budget {budget}")
    twos = [2**t for t in range(k)]
    census: dict[tuple[int, ...], int] = {}
    for rgs in set_partitions(ell, k):
        sums = _block_sums(rgs, k)
        for order in heap_permutations(range(k)):
            s = [sums[b] for b in order]
            for t in heap_permutations(twos):
                n = tuple(si + ti for si, ti in zip(s, t))
                census[n] = census.get(n, 0) ^ 1
    return census


def odd_tuples(census: dict[tuple[int, ...], int]) -> set[tuple[int, ...]]:
    return {n for n, parity in census.items() if parity}


def expected_odd_tuples(k: int, ell: int) -> set[tuple[int, ...]]:
    """Permutations of (2, 4, ..., 2^{k-1}, 2^l)."""
    base = [2**t for t in range(1, k)] + [2**ell]
    return set(heap_permutations(base))


def system_residual(k: int, ell: int, ps: list[F2Poly], i: int) -> F2Poly:
    """sum_j p_j x_i^{2^j - 1} + x_i^{2^l - 1}; zero when the row identity holds."""
    total = F2Poly.zero(k)
    for j, p in enumerate(ps):
        exps = [0] * k
        exps[i] = 2**j - 1
        total = add(total, mul(p, F2Poly.monomial(k, exps)))
    exps = [0] * k
    exps[i] = 2**ell - 1
    return add(total, F2Poly.monomial(k, exps))
