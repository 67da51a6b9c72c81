"""Sparse polynomials over GF(2) in a fixed number of variables.

Terms are packed monomial keys (see ``kernels._layout``) held in a
read-only int64 array sorted descending in graded-lex order, so the
leading term is always ``keys[0]``.  Coefficients are implicit: a key is
either present (coefficient 1) or absent.
"""

from __future__ import annotations

import json
import re
from itertools import permutations
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .kernels import field_bits, max_degree, max_exponent, unit_key, var_shift


class NotDivisible(ArithmeticError):
    """Raised by exact_divide when the quotient is not a polynomial."""


def _pack(k: int, exps) -> np.ndarray:
    exps = np.asarray(exps, dtype=np.int64).reshape(-1, k)
    if exps.size and exps.min() < 0:
        raise ValueError("exponents must be non-negative")
    if exps.size and exps.max() > max_exponent(k):
        raise OverflowError(f"exponent {exps.max()} exceeds {max_exponent(k)} for k={k}")
    deg = exps.sum(axis=1)
    if deg.size and deg.max() > max_degree(k):
        raise OverflowError(f"degree {deg.max()} exceeds {max_degree(k)} for k={k}")
    keys = deg << kernels.deg_shift(k)
    for t in range(k):
        keys = keys | (exps[:, t] << var_shift(k, t))
    return keys


def _unpack(k: int, keys: np.ndarray) -> np.ndarray:
    mask = (1 << field_bits(k)) - 1
    if keys.size == 0:
        return np.empty((0, k), dtype=np.int64)
    return np.stack([(keys >> var_shift(k, t)) & mask for t in range(k)], axis=1)


class F2Poly:
    """Immutable polynomial in x1..xk over GF(2)."""

    __slots__ = ("k", "keys", "_exps")

    def __init__(self, k: int, keys: np.ndarray):
        # keys must already be unique and descending; use the constructors
        field_bits(k)
        keys = np.asarray(keys, dtype=np.int64)
        keys.setflags(write=False)
        self.k = k
        self.keys = keys
        self._exps = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def from_terms(cls, k: int, terms: Iterable[Sequence[int]]) -> "F2Poly":
        """Sum of the given monomials; repeated monomials cancel in pairs."""
        rows = [tuple(t) for t in terms]
        for row in rows:
            if len(row) != k:
                raise ValueError(f"exponent vector {row} does not have length k={k}")
        if not rows:
            return cls.zero(k)
        return cls(k, kernels.parity_reduce(_pack(k, rows)))

    @classmethod
    def zero(cls, k: int) -> "F2Poly":
        return cls(k, np.empty(0, dtype=np.int64))

    @classmethod
    def one(cls, k: int) -> "F2Poly":
        return cls(k, np.zeros(1, dtype=np.int64))

    @classmethod
    def monomial(cls, k: int, exps: Sequence[int]) -> "F2Poly":
        return cls.from_terms(k, [exps])

    @classmethod
    def variable(cls, k: int, index: int) -> "F2Poly":
        """The variable x_index, 1-based like the printed names."""
        if not 1 <= index <= k:
            raise ValueError(f"variable index {index} outside 1..{k}")
        return cls(k, np.array([unit_key(k, index - 1)], dtype=np.int64))

    # -- views ------------------------------------------------------------
    @property
    def exponents(self) -> np.ndarray:
        """(n, k) array of exponent vectors in canonical order."""
        if self._exps is None:
            exps = _unpack(self.k, self.keys)
            exps.setflags(write=False)
            self._exps = exps
        return self._exps

    @property
    def terms(self) -> list[tuple[int, ...]]:
        return [tuple(int(e) for e in row) for row in self.exponents]

    @property
    def degrees(self) -> np.ndarray:
        return self.keys >> kernels.deg_shift(self.k)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return int(self.keys[0] >> kernels.deg_shift(self.k)) if self.keys.size else -1

    def is_zero(self) -> bool:
        return self.keys.size == 0

    def is_homogeneous(self) -> bool:
        d = self.degrees
        return d.size == 0 or bool((d == d[0]).all())

    def leading_term(self) -> tuple[int, ...]:
        if self.is_zero():
            raise ValueError("the zero polynomial has no leading term")
        return tuple(int(e) for e in self.exponents[0])

    def max_exponents(self) -> np.ndarray:
        if self.is_zero():
            return np.zeros(self.k, dtype=np.int64)
        return self.exponents.max(axis=0)

    def homogeneous_component(self, d: int) -> "F2Poly":
        return F2Poly(self.k, self.keys[self.degrees == d])

    # -- protocol ---------------------------------------------------------
    def __len__(self) -> int:
        return int(self.keys.size)

    def __bool__(self) -> bool:
        return self.keys.size > 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, F2Poly):
            return NotImplemented
        return self.k == other.k and np.array_equal(self.keys, other.keys)

    def __hash__(self) -> int:
        return hash((self.k, self.keys.tobytes()))

    def __add__(self, other: "F2Poly") -> "F2Poly":
        return add(self, other)

    __sub__ = __add__

    def __mul__(self, other: "F2Poly") -> "F2Poly":
        return mul(self, other)

    def __pow__(self, n: int) -> "F2Poly":
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = F2Poly.one(self.k)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"F2Poly(k={self.k}, {to_text(self)})"


def _check_k(a: F2Poly, b: F2Poly) -> None:
    if a.k != b.k:
        raise ValueError(f"variable counts differ: {a.k} != {b.k}")


def add(a: F2Poly, b: F2Poly) -> F2Poly:
    _check_k(a, b)
    if not a:
        return b
    if not b:
        return a
    return F2Poly(a.k, np.setxor1d(a.keys, b.keys, assume_unique=True)[::-1])


def _check_product_fits(a: F2Poly, b: F2Poly) -> None:
    if (a.max_exponents() + b.max_exponents()).max() > max_exponent(a.k):
        raise OverflowError("product exponent exceeds the key layout")
    if a.degree + b.degree > max_degree(a.k):
        raise OverflowError("product degree exceeds the key layout")


def mul(a: F2Poly, b: F2Poly) -> F2Poly:
    _check_k(a, b)
    if not a or not b:
        return F2Poly.zero(a.k)
    _check_product_fits(a, b)
    if len(b) == 1:
        return F2Poly(a.k, a.keys + b.keys[0])
    if len(a) == 1:
        return F2Poly(a.k, b.keys + a.keys[0])
    return F2Poly(a.k, kernels.mul_keys(a.keys, b.keys))


def exact_divide(num: F2Poly, den: F2Poly) -> F2Poly:
    """Return q with q*den == num, else raise NotDivisible."""
    _check_k(num, den)
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    if not num:
        return F2Poly.zero(num.k)
    q, status = kernels.divide_keys(num.keys, den.keys, num.k, field_bits(num.k))
    if status:
        raise NotDivisible(f"leading term of remainder is not divisible by {to_text(F2Poly.monomial(den.k, den.leading_term()))}")
    return F2Poly(num.k, q)


def permute_variables(p: F2Poly, perm: Sequence[int]) -> F2Poly:
    """Send x_{t+1} to x_{perm[t]+1} (0-based perm)."""
    if sorted(perm) != list(range(p.k)):
        raise ValueError(f"{perm} is not a permutation of 0..{p.k - 1}")
    if not p:
        return p
    new = np.empty_like(p.exponents)
    new[:, list(perm)] = p.exponents
    return F2Poly(p.k, np.sort(_pack(p.k, new))[::-1])


def _kill_variable(p: F2Poly, t: int) -> F2Poly:
    return F2Poly(p.k, p.keys[p.exponents[:, t] == 0])


def _transvect(p: F2Poly, src: int, dst: int) -> F2Poly:
    if not p:
        return p
    if p.max_exponents()[src] + p.max_exponents()[dst] > max_exponent(p.k):
        raise OverflowError("substitution exponent exceeds the key layout")
    return F2Poly(p.k, kernels.transvect_keys(p.keys, p.k, field_bits(p.k), src, dst))


def _elementary_factors(A: np.ndarray) -> list[tuple]:
    """Write the bit matrix A as a product of elementary bit matrices.

    Returns factors F_1..F_m (A = F_1 @ ... @ F_m mod 2), each one of
    ("swap", a, b), ("add", a, b) meaning I + E_ab, or ("diag", d).
    """
    k = A.shape[0]
    M = A.copy() % 2
    left = []
    # row reduction: R_r ... R_1 A = E; each R is its own inverse
    row = 0
    pivots = []
    for col in range(k):
        hits = [r for r in range(row, k) if M[r, col]]
        if not hits:
            continue
        if hits[0] != row:
            M[[row, hits[0]]] = M[[hits[0], row]]
            left.append(("swap", row, hits[0]))
        for r in range(k):
            if r != row and M[r, col]:
                M[r] ^= M[row]
                left.append(("add", r, row))
        pivots.append(col)
        row += 1
    # column reduction of the echelon form: E C_1 ... C_q = D
    right = []
    for r, col in enumerate(pivots):
        if col != r:
            M[:, [r, col]] = M[:, [col, r]]
            right.append(("swap", r, col))
        for c in range(k):
            if c != r and M[r, c]:
                M[:, c] ^= M[:, r]
                right.append(("add", r, c))
    diag = tuple(int(M[t, t]) for t in range(k))
    # A = R_1 ... R_r D C_q ... C_1
    return left + [("diag", diag)] + right[::-1]


def substitute_linear(p: F2Poly, A) -> F2Poly:
    """Replace each x_t by sum_s A[t][s] x_s (bit matrix, rows indexed by t).

    This is a right action: substitute(substitute(p, B), A) equals
    substitute(p, B @ A mod 2).
    """
    A = np.asarray(A, dtype=np.int64)
    if A.shape != (p.k, p.k):
        raise ValueError(f"matrix shape {A.shape} does not match k={p.k}")
    if not np.isin(A, (0, 1)).all():
        raise ValueError("matrix entries must be bits")
    # A = F_1 ... F_m, so substituting A means substituting F_1 first
    for factor in _elementary_factors(A):
        if factor[0] == "swap":
            _, a, b = factor
            perm = list(range(p.k))
            perm[a], perm[b] = b, a
            p = permute_variables(p, perm)
        elif factor[0] == "add":
            # row a of I + E_ab: x_a -> x_a + x_b
            _, a, b = factor
            p = _transvect(p, a, b)
        else:
            for t, d in enumerate(factor[1]):
                if not d:
                    p = _kill_variable(p, t)
    return p


def evaluate(p: F2Poly, point: Sequence[int]) -> int:
    if len(point) != p.k:
        raise ValueError(f"point has {len(point)} coordinates, need {p.k}")
    if not p:
        return 0
    zeros = np.array([int(v) % 2 == 0 for v in point])
    surviving = ~((p.exponents[:, zeros] > 0).any(axis=1))
    return int(surviving.sum() & 1)


def is_symmetric(p: F2Poly) -> bool:
    """Invariance under a transposition and a k-cycle, which generate S_k."""
    if p.k == 1:
        return True
    swap = [1, 0] + list(range(2, p.k))
    cycle = [(t + 1) % p.k for t in range(p.k)]
    return permute_variables(p, swap) == p and permute_variables(p, cycle) == p


def symmetrize_orbit(k: int, exps: Sequence[int]) -> F2Poly:
    """Sum of the distinct monomials in the S_k-orbit of exps."""
    return F2Poly.from_terms(k, set(permutations(exps)))


# -- canonical forms ------------------------------------------------------

def _term_text(exps: Sequence[int], names: Sequence[str]) -> str:
    factors = []
    for name, e in zip(names, exps):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors) or "1"


def to_text(p: F2Poly, names: Sequence[str] | None = None) -> str:
    if not p:
        return "0"
    names = names or [f"x{t + 1}" for t in range(p.k)]
    return " + ".join(_term_text(row, names) for row in p.terms)


_FACTOR = re.compile(r"^([a-z]+)(\d+)(?:\^(\d+))?$")


def parse_text(text: str, k: int, prefix: str = "x", offset: int = 1) -> F2Poly:
    """Inverse of to_text; variables are ``<prefix><index>`` with 1-based index by default."""
    text = text.strip()
    if text == "0":
        return F2Poly.zero(k)
    rows = []
    for term in text.split("+"):
        term = term.strip()
        exps = [0] * k
        if term != "1":
            for factor in term.split("*"):
                m = _FACTOR.match(factor.strip())
                if not m or m.group(1) != prefix:
                    raise ValueError(f"cannot parse factor {factor!r}")
                t = int(m.group(2)) - offset
                if not 0 <= t < k:
                    raise ValueError(f"variable {factor!r} outside the {k} variables")
                exps[t] += int(m.group(3) or 1)
        rows.append(exps)
    return F2Poly.from_terms(k, rows)


def to_json(p: F2Poly) -> str:
    return json.dumps({"k": p.k, "terms": [list(t) for t in p.terms]})


def from_json(data: str | dict) -> F2Poly:
    if isinstance(data, str):
        data = json.loads(data)
    return F2Poly.from_terms(int(data["k"]), data["terms"])
