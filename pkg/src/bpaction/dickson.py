"""Dickson generators, Steenrod squares, and rewriting in the c_j."""

from __future__ import annotations

import json
from functools import lru_cache

import numpy as np

from . import kernels
from .f2poly import (F2Poly, add, from_json, max_exponent, mul, parse_text,
                     to_text)
from .symfun import two_power_monomial_sum


class NotInAlgebra(ValueError):
    """The polynomial is not a polynomial in the Dickson generators."""


class DicksonWord:
    """Polynomial in abstract generators c_0..c_{k-1} over GF(2).

    Stored as an F2Poly whose t-th variable stands for c_t.
    """

    __slots__ = ("k", "poly")

    def __init__(self, k: int, poly: F2Poly | None = None):
        if poly is not None and poly.k != k:
            raise ValueError("word and generator count disagree")
        self.k = k
        self.poly = poly if poly is not None else F2Poly.zero(k)

    @classmethod
    def generator(cls, k: int, j: int) -> "DicksonWord":
        """c_j; a negative index denotes 0."""
        if j < 0:
            return cls(k)
        if j >= k:
            raise ValueError(f"generator c{j} does not exist for k={k}")
        return cls(k, F2Poly.variable(k, j + 1))

    @classmethod
    def one(cls, k: int) -> "DicksonWord":
        return cls(k, F2Poly.one(k))

    @property
    def terms(self) -> list[tuple[int, ...]]:
        return self.poly.terms

    def __add__(self, other: "DicksonWord") -> "DicksonWord":
        return DicksonWord(self.k, add(self.poly, other.poly))

    def __mul__(self, other: "DicksonWord") -> "DicksonWord":
        return DicksonWord(self.k, mul(self.poly, other.poly))

    def __pow__(self, n: int) -> "DicksonWord":
        return DicksonWord(self.k, self.poly**n)

    def __eq__(self, other) -> bool:
        return isinstance(other, DicksonWord) and self.k == other.k and self.poly == other.poly

    def __hash__(self) -> int:
        return hash(("DicksonWord", self.poly))

    def __bool__(self) -> bool:
        return bool(self.poly)

    def __str__(self) -> str:
        return to_text(self.poly, [f"c{t}" for t in range(self.k)])

    def __repr__(self) -> str:
        return f"DicksonWord(k={self.k}, {self})"

    def to_json(self) -> str:
        return json.dumps({"k": self.k, "terms": [list(t) for t in self.terms]})

    @classmethod
    def from_json(cls, data) -> "DicksonWord":
        poly = from_json(data)
        return cls(poly.k, poly)

    @classmethod
    def parse(cls, text: str, k: int) -> "DicksonWord":
        return cls(k, parse_text(text, k, prefix="c", offset=0))


@lru_cache(maxsize=None)
def dickson_generator(k: int, j: int) -> F2Poly:
    """c_j as a polynomial: degree 2^k - 2^j monomials with 2-power exponents."""
    if not 0 <= j <= k - 1:
        raise ValueError(f"need 0 <= j <= k-1, got j={j}, k={k}")
    return two_power_monomial_sum(k, 2**k - 2**j)


def _check_doubling(p: F2Poly) -> None:
    if p and 2 * int(p.max_exponents().max()) > max_exponent(p.k):
        raise OverflowError("Steenrod square exponent exceeds the key layout")


def total_square(p: F2Poly) -> F2Poly:
    """The ring map x_t -> x_t + x_t^2; its degree-(d+i) part on degree d is Sq^i."""
    _check_doubling(p)
    if not p:
        return p
    return F2Poly(p.k, kernels.total_square_keys(p.keys, p.k, kernels.field_bits(p.k)))


def sq(i: int, p: F2Poly) -> F2Poly:
    """Sq^i, applied to each homogeneous component."""
    if i < 0:
        raise ValueError("Sq^i needs i >= 0")
    if i == 0 or not p:
        return p
    _check_doubling(p)
    return F2Poly(p.k, kernels.sq_keys(p.keys, p.k, kernels.field_bits(p.k), i))


def hung_cases(k: int, i: int, s: int) -> list[DicksonWord]:
    """Every case of Hung's formula for Sq^i c_s that fires, one word each."""
    if not 0 <= s <= k - 1:
        raise ValueError(f"need 0 <= s <= k-1, got s={s}, k={k}")
    if i < 0:
        raise ValueError("Sq^i needs i >= 0")
    c = [DicksonWord.generator(k, t) for t in range(k)]
    words = []
    for r in range(s + 1):
        if i == 2**s - 2**r:
            words.append(c[r])
    for r in range(s + 1):
        for t in range(s + 1, k):
            if i == 2**k - 2**t + 2**s - 2**r:
                words.append(c[r] * c[t])
    if i == 2**k - 2**s:
        words.append(c[s] ** 2)
    return words


def hung_rhs(k: int, i: int, s: int) -> DicksonWord:
    """Sq^i c_s written in the generators; overlapping cases are summed mod 2."""
    total = DicksonWord(k)
    for w in hung_cases(k, i, s):
        total = total + w
    return total


def hung_overlaps(k: int) -> list[tuple[int, int, int]]:
    """(k, i, s) triples, 0 <= i <= 2^k, where more than one case fires."""
    return [(k, i, s) for s in range(k) for i in range(2**k + 1) if len(hung_cases(k, i, s)) > 1]


@lru_cache(maxsize=None)
def _generator_power(k: int, j: int, e: int) -> F2Poly:
    return dickson_generator(k, j) ** e


def expand(w: DicksonWord, k: int | None = None) -> F2Poly:
    """Substitute the generator polynomials for c_0..c_{k-1}."""
    k = w.k if k is None else k
    if k != w.k:
        raise ValueError(f"word over {w.k} generators expanded with k={k}")
    result = F2Poly.zero(k)
    for exps in w.terms:
        term = F2Poly.one(k)
        for j, e in enumerate(exps):
            if e:
                term = mul(term, _generator_power(k, j, e))
        result = add(result, term)
    return result


def generator_leading_terms(k: int) -> np.ndarray:
    """Row j: exponents of the graded-lex leading term of c_j."""
    lead = np.zeros((k, k), dtype=np.int64)
    for j in range(k):
        for t in range(k - j):
            lead[j, t] = 2 ** (k - 1 - t)
    return lead


def _word_for_leading_term(lt, k: int) -> list[int] | None:
    """Exponents a with prod c_j^{a_j} having leading term lt, if any."""
    # position t collects 2^{k-1-t} * (a_0 + ... + a_{k-1-t})
    partial = []
    for t in range(k):
        weight = 2 ** (k - 1 - t)
        if lt[t] % weight:
            return None
        partial.append(lt[t] // weight)
    a = [0] * k
    for t in range(k):
        nxt = partial[t + 1] if t + 1 < k else 0
        a[k - 1 - t] = partial[t] - nxt
        if a[k - 1 - t] < 0:
            return None
    return a


def subduct(p: F2Poly) -> DicksonWord:
    """Rewrite p in the Dickson generators by leading-term elimination."""
    k = p.k
    word = F2Poly.zero(k)
    residual = p
    while residual:
        lt = residual.leading_term()
        a = _word_for_leading_term(lt, k)
        if a is None:
            raise NotInAlgebra(f"leading term {to_text(F2Poly.monomial(k, lt))} is no product of generator leading terms")
        term = DicksonWord(k, F2Poly.monomial(k, a))
        residual = add(residual, expand(term))
        word = add(word, term.poly)
    return DicksonWord(k, word)
