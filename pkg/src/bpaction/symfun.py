"""Symmetric-function building blocks over GF(2)."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable

from .f2poly import F2Poly, symmetrize_orbit


def _is_two_power(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


@lru_cache(maxsize=4096)
def _monomial_symmetric(k: int, parts: tuple[int, ...]) -> F2Poly:
    return symmetrize_orbit(k, parts + (0,) * (k - len(parts)))


def monomial_symmetric(k: int, parts: Iterable[int]) -> F2Poly:
    """m_{parts} in x1..xk; zero parts are dropped, as in m_{i,j,0}."""
    parts = tuple(sorted((int(p) for p in parts if p != 0), reverse=True))
    if any(p < 0 for p in parts):
        raise ValueError(f"parts must be non-negative: {parts}")
    if len(parts) > k:
        raise ValueError(f"{len(parts)} nonzero parts do not fit {k} variables")
    return _monomial_symmetric(k, parts)


def complete_homogeneous(k: int, r: int, d: int) -> F2Poly:
    """h_d(x1..xr) viewed in k variables."""
    if not 1 <= r <= k:
        raise ValueError(f"need 1 <= r <= k, got r={r}, k={k}")
    if d < 0:
        raise ValueError("degree must be non-negative")
    rows = []
    # stars and bars: bar positions among d + r - 1 slots
    for bars in combinations(range(d + r - 1), r - 1):
        prev = -1
        exps = []
        for b in bars:
            exps.append(b - prev - 1)
            prev = b
        exps.append(d + r - 2 - prev)
        rows.append(exps + [0] * (k - r))
    return F2Poly.from_terms(k, rows)


def vandermonde_2power(k: int, exponents: Iterable[int]) -> F2Poly:
    """det[x_i^{t_j}] for distinct 2-powers t_j, expanded over all placements.

    Signs vanish mod 2, so this is the permanent: one term per permutation.
    """
    exponents = [int(t) for t in exponents]
    if len(exponents) != k:
        raise ValueError(f"need {k} exponents, got {len(exponents)}")
    if len(set(exponents)) != k:
        raise ValueError(f"repeated exponents {exponents}: the determinant vanishes")
    if not all(_is_two_power(t) for t in exponents):
        raise ValueError(f"exponents {exponents} are not all powers of two")
    return F2Poly.from_terms(k, permutations(exponents))


def two_power_monomial_sum(k: int, d: int) -> F2Poly:
    """Sum of the degree-d monomials whose nonzero exponents are 2-powers."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    rows: list[list[int]] = []
    prefix: list[int] = []

    def extend(remaining: int) -> None:
        if len(prefix) == k:
            if remaining == 0:
                rows.append(list(prefix))
            return
        options = [0]
        p = 1
        while p <= remaining:
            options.append(p)
            p <<= 1
        for e in options:
            prefix.append(e)
            extend(remaining - e)
            prefix.pop()

    extend(d)
    return F2Poly.from_terms(k, rows)


def binom_mod2(n: int, r: int) -> int:
    """C(n, r) mod 2 by Lucas: odd iff the bits of r are a subset of n's."""
    if r < 0 or n < 0 or r > n:
        return 0
    return int(r & n == r)
