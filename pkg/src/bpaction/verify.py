"""Identity checks grouped into suites, shared by the CLI and the tests.

Each suite yields Check records; a suite passes when every check does.
Default bounds are the ones the acceptance run uses.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterator

import numpy as np

from .dickson import (DicksonWord, dickson_generator, expand, hung_overlaps,
                      hung_rhs, sq, subduct)
from .f2poly import (F2Poly, NotDivisible, exact_divide, is_symmetric, mul,
                     substitute_linear)
from .plj import (DEFAULT_BUDGET, denominator, expected_odd_tuples, numerator,
                  odd_tuples, p0_by_partitions, p0_by_surjections,
                  p_by_division, p_by_system, p_closed_ell_eq_k, p_closed_k3,
                  parity_census, system_residual)
from .symfun import monomial_symmetric

SUITES = ("pdef", "system", "thm2", "thm3", "thm4", "biglem", "dickson", "steenrod")

BIGLEM_CASES = ((2, 2), (2, 3), (2, 4), (3, 3), (3, 4), (3, 5))


@dataclass
class Check:
    suite: str
    name: str
    params: dict
    ok: bool
    detail: str = ""

    def line(self) -> str:
        params = " ".join(f"{key}={value}" for key, value in self.params.items())
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.suite}:{self.name} {params}".rstrip() + (f"  ({self.detail})" if self.detail else "")


@dataclass
class Bounds:
    k_max: int | None = None
    k: int | None = None
    ell: int | None = None
    budget: int = DEFAULT_BUDGET
    seed: int = 2018
    extra: dict = field(default_factory=dict)


def _ks(bounds: Bounds, default_max: int, low: int = 1) -> range:
    if bounds.k is not None:
        return range(bounds.k, bounds.k + 1)
    return range(low, (bounds.k_max or default_max) + 1)


def _ells(bounds: Bounds, k: int, span: int) -> range:
    if bounds.ell is not None:
        return range(bounds.ell, bounds.ell + 1)
    return range(k, k + span + 1)


def gf2_rank(A: np.ndarray) -> int:
    M = np.array(A, dtype=np.int64) % 2
    rank = 0
    for col in range(M.shape[1]):
        hits = [r for r in range(rank, M.shape[0]) if M[r, col]]
        if not hits:
            continue
        M[[rank, hits[0]]] = M[[hits[0], rank]]
        for r in range(M.shape[0]):
            if r != rank and M[r, col]:
                M[r] ^= M[rank]
        rank += 1
    return rank


def gl_matrices(k: int) -> list[np.ndarray]:
    """All invertible k x k bit matrices (exhaustive; use for k <= 3)."""
    mats = []
    for bits in itertools.product((0, 1), repeat=k * k):
        A = np.array(bits, dtype=np.int64).reshape(k, k)
        if gf2_rank(A) == k:
            mats.append(A)
    return mats


def random_gl(k: int, rng: random.Random) -> np.ndarray:
    while True:
        A = np.array([[rng.randint(0, 1) for _ in range(k)] for _ in range(k)], dtype=np.int64)
        if gf2_rank(A) == k:
            return A


def suite_pdef(b: Bounds) -> Iterator[Check]:
    for k in _ks(b, 4):
        for ell in _ells(b, k, 3):
            for j in range(k):
                p = p_by_division(k, ell, j)
                ok = mul(p, denominator(k)) == numerator(k, ell, j)
                yield Check("pdef", "defining-identity", dict(k=k, ell=ell, j=j), ok)
                ok = p.is_homogeneous() and p.degree == 2**ell - 2**j
                yield Check("pdef", "homogeneous-degree", dict(k=k, ell=ell, j=j), ok)
                yield Check("pdef", "symmetric", dict(k=k, ell=ell, j=j), is_symmetric(p))
    # the ratio with a non-2-power top exponent is not a polynomial for k >= 3
    try:
        exact_divide(monomial_symmetric(3, (2, 4, 6)), denominator(3))
    except NotDivisible:
        yield Check("pdef", "negative-control", dict(k=3, top=6), True)
    else:
        yield Check("pdef", "negative-control", dict(k=3, top=6), False, "division succeeded")


def suite_system(b: Bounds) -> Iterator[Check]:
    for k in _ks(b, 4):
        for ell in _ells(b, k, 3):
            ps = [p_by_division(k, ell, j) for j in range(k)]
            for i in range(k):
                ok = not system_residual(k, ell, ps, i)
                yield Check("system", "row-identity", dict(k=k, ell=ell, i=i + 1), ok)
            ok = p_by_system(k, ell) == ps
            yield Check("system", "cramer-vs-division", dict(k=k, ell=ell), ok)


def suite_thm2(b: Bounds) -> Iterator[Check]:
    ells = range(b.ell, b.ell + 1) if b.ell is not None else range(3, 8)
    for ell in ells:
        for j in range(3):
            ok = p_closed_k3(ell, j) == p_by_division(3, ell, j)
            yield Check("thm2", "closed-form-k3", dict(k=3, ell=ell, j=j), ok)


def suite_thm3(b: Bounds) -> Iterator[Check]:
    for k in _ks(b, 5):
        for j in range(k):
            ok = p_closed_ell_eq_k(k, j) == p_by_division(k, k, j)
            yield Check("thm3", "two-power-sum", dict(k=k, ell=k, j=j), ok)


def suite_thm4(b: Bounds) -> Iterator[Check]:
    for k in _ks(b, 4, low=2):
        for ell in _ells(b, k, 3):
            surj = p0_by_surjections(k, ell, b.budget)
            part = p0_by_partitions(k, ell, b.budget)
            div = p_by_division(k, ell, 0)
            yield Check("thm4", "surjections-vs-partitions", dict(k=k, ell=ell), surj == part)
            yield Check("thm4", "partitions-vs-division", dict(k=k, ell=ell), part == div)


def suite_biglem(b: Bounds) -> Iterator[Check]:
    if b.k is not None and b.ell is not None:
        cases = [(b.k, b.ell)]
    else:
        cases = list(BIGLEM_CASES)
    for k, ell in cases:
        odd = odd_tuples(parity_census(k, ell, b.budget))
        expected = expected_odd_tuples(k, ell)
        yield Check("biglem", "odd-tuples", dict(k=k, ell=ell), odd == expected, f"{len(odd)} odd tuples")
    for k in ([b.k] if b.k is not None else range(1, 4)):
        for ell in ([b.ell] if b.ell is not None else range(k, 6)):
            lhs = monomial_symmetric(k, [2**t for t in range(1, k)] + [2**ell])
            ok = lhs == mul(denominator(k), p0_by_partitions(k, ell, b.budget))
            yield Check("biglem", "product-identity", dict(k=k, ell=ell), ok)


def suite_dickson(b: Bounds) -> Iterator[Check]:
    for k in _ks(b, 5):
        for j in range(k):
            c = dickson_generator(k, j)
            yield Check("dickson", "kjprop", dict(k=k, j=j), c == p_by_division(k, k, j))
            yield Check("dickson", "subduct-generator", dict(k=k, j=j), subduct(c) == DicksonWord.generator(k, j))
    for k in _ks(b, 4):
        for ell in range(k + 1, k + 4):
            q = p_by_division(k, ell - 1, k - 1)
            ok = p_by_division(k, ell, 0) == mul(dickson_generator(k, 0), mul(q, q))
            yield Check("dickson", "p0-squaring", dict(k=k, ell=ell), ok)
    for k in _ks(b, 4, low=2):
        c = [DicksonWord.generator(k, t) for t in range(k)]
        cc = lambda t: c[t] if t >= 0 else DicksonWord(k)  # noqa: E731
        for j in range(k):
            rhs_a = cc(j - 1) ** 2 + cc(j) * c[k - 1] ** 2
            rhs_b = (cc(j) * cc(k - 2) ** 4 + cc(j) * c[k - 1] ** 6
                     + cc(j - 1) ** 2 * c[k - 1] ** 4 + cc(j - 2) ** 4)
            pa = p_by_division(k, k + 1, j)
            pb = p_by_division(k, k + 2, j)
            yield Check("dickson", "k+1-expand", dict(k=k, j=j), expand(rhs_a) == pa)
            yield Check("dickson", "k+1-subduct", dict(k=k, j=j), subduct(pa) == rhs_a)
            yield Check("dickson", "k+2-expand", dict(k=k, j=j), expand(rhs_b) == pb)
            yield Check("dickson", "k+2-subduct", dict(k=k, j=j), subduct(pb) == rhs_b)
    for k in (2, 3):
        if b.k is not None and b.k != k:
            continue
        mats = gl_matrices(k)
        for j in range(k):
            c = dickson_generator(k, j)
            ok = all(substitute_linear(c, A) == c for A in mats)
            yield Check("dickson", "gl-generator", dict(k=k, j=j, matrices=len(mats)), ok)
        for ell in range(k, k + 3):
            for j in range(k):
                p = p_by_division(k, ell, j)
                ok = all(substitute_linear(p, A) == p for A in mats)
                yield Check("dickson", "gl-plj", dict(k=k, ell=ell, j=j, matrices=len(mats)), ok)
    rng = random.Random(b.seed)
    if b.k is None or b.k == 4:
        mats = [random_gl(4, rng) for _ in range(50)]
        for ell in range(4, 7):
            for j in range(4):
                p = p_by_division(4, ell, j)
                ok = all(substitute_linear(p, A) == p for A in mats)
                yield Check("dickson", "gl-plj-random", dict(k=4, ell=ell, j=j, matrices=50), ok)


def suite_steenrod(b: Bounds) -> Iterator[Check]:
    for k in _ks(b, 4):
        overlaps = hung_overlaps(k)
        yield Check("steenrod", "hung-cases-disjoint", dict(k=k), not overlaps, f"{len(overlaps)} overlaps")
        for s in range(k):
            c = dickson_generator(k, s)
            bad = [i for i in range(2**k + 1) if expand(hung_rhs(k, i, s)) != sq(i, c)]
            yield Check("steenrod", "hung", dict(k=k, s=s), not bad, f"failing i={bad}" if bad else "")
    for k in _ks(b, 4):
        for ell in _ells(b, k, 2):
            for j in range(k):
                p = p_by_division(k, ell, j)
                for i in range(k - 1):
                    expected = p_by_division(k, ell, j - 1) if i == j - 1 else F2Poly.zero(k)
                    ok = sq(2**i, p) == expected
                    yield Check("steenrod", "prop1", dict(k=k, ell=ell, j=j, i=i), ok)
            p = p_by_division(k, ell, k - 1)
            total = F2Poly.zero(k)
            for j in range(k):
                total = total + mul(dickson_generator(k, j), sq(2**ell - 2**k + 2**j, p))
            yield Check("steenrod", "prop2", dict(k=k, ell=ell), total == p_by_division(k, ell + 1, k - 1))
    rng = random.Random(b.seed)
    ok = True
    for _ in range(50):
        k = rng.randint(1, 3)
        p = random_poly(k, rng, max_terms=6, max_exp=5)
        q = random_poly(k, rng, max_terms=6, max_exp=5)
        n = rng.randint(0, 12)
        rhs = F2Poly.zero(k)
        for i in range(n + 1):
            rhs = rhs + mul(sq(i, p), sq(n - i, q))
        ok = ok and sq(n, mul(p, q)) == rhs
    yield Check("steenrod", "cartan-random", dict(cases=50, seed=b.seed), ok)


def random_poly(k: int, rng: random.Random, max_terms: int = 20, max_exp: int = 6) -> F2Poly:
    n = rng.randint(0, max_terms)
    return F2Poly.from_terms(k, [[rng.randint(0, max_exp) for _ in range(k)] for _ in range(n)])


RUNNERS: dict[str, Callable[[Bounds], Iterator[Check]]] = {
    "pdef": suite_pdef,
    "system": suite_system,
    "thm2": suite_thm2,
    "thm3": suite_thm3,
    "thm4": suite_thm4,
    "biglem": suite_biglem,
    "dickson": suite_dickson,
    "steenrod": suite_steenrod,
}


def run_suite(name: str, bounds: Bounds) -> list[Check]:
    return list(RUNNERS[name](bounds))
