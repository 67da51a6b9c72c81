"""The v_j-action on tensor classes z_I, mod higher filtration.

A polynomial acts on z_I by lowering indices: x^E . z_I = z_{I-E}, and
z_J = 0 as soon as some entry of J is <= 0.  Only the single step
F_s/F_{s+1} -> F_{s+1}/F_{s+2} is modelled.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .f2poly import F2Poly
from .plj import p_by_division
from .symfun import two_power_monomial_sum

IndexTuple = tuple[int, ...]


def index_tuple(entries: Iterable[int]) -> IndexTuple:
    I = tuple(int(i) for i in entries)
    if not I:
        raise ValueError("an index tuple needs at least one entry")
    if min(I) < 1:
        raise ValueError(f"index entries must be >= 1: {I}")
    return I


@dataclass(frozen=True)
class GradedElement:
    """F2-sum of v_ell * z_I summands of filtration one."""

    terms: frozenset[tuple[int, IndexTuple]] = frozenset()

    def __post_init__(self):
        for ell, I in self.terms:
            if ell < len(I):
                raise ValueError(f"v{ell} with k={len(I)} is not a basis element (need ell >= k)")

    @classmethod
    def from_components(cls, components: dict[int, Iterable[IndexTuple]]) -> "GradedElement":
        terms: set = set()
        for ell, zs in components.items():
            terms ^= {(ell, tuple(I)) for I in zs}
        return cls(frozenset(terms))

    def __add__(self, other: "GradedElement") -> "GradedElement":
        return GradedElement(self.terms ^ other.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def component(self, ell: int) -> frozenset[IndexTuple]:
        return frozenset(I for l, I in self.terms if l == ell)

    def sorted_terms(self) -> list[tuple[int, IndexTuple]]:
        return sorted(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"v{ell} * z({','.join(map(str, I))})" for ell, I in self.sorted_terms())

    def to_json(self) -> str:
        return json.dumps({"terms": [{"ell": ell, "z": list(I)} for ell, I in self.sorted_terms()]})

    @classmethod
    def from_json(cls, data: str | dict) -> "GradedElement":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(frozenset((int(t["ell"]), index_tuple(t["z"])) for t in data["terms"]))


def act_polynomial(p: F2Poly, I: Sequence[int]) -> frozenset[IndexTuple]:
    """The F2-sum p . z_I as a set of index tuples."""
    I = index_tuple(I)
    if p.k != len(I):
        raise ValueError(f"polynomial in {p.k} variables cannot act on a {len(I)}-tuple")
    if not p:
        return frozenset()
    lowered = np.asarray(I, dtype=np.int64) - p.exponents
    alive = lowered[(lowered >= 1).all(axis=1)]
    # distinct exponent vectors give distinct tuples, so nothing cancels here
    return frozenset(tuple(int(i) for i in row) for row in alive)


def max_level(j: int, I: Sequence[int]) -> int:
    """Largest ell whose p_{ell,j} can still act nontrivially on z_I (k-1 if none)."""
    k = len(I)
    room = sum(i - 1 for i in I)
    ell = k - 1
    while 2 ** (ell + 1) - 2**j <= room:
        ell += 1
    return ell


def _level(ell: int, j: int, I: IndexTuple) -> frozenset[IndexTuple]:
    return act_polynomial(p_by_division(len(I), ell, j), I)


def vj_action(j: int, I: Sequence[int]) -> GradedElement:
    """v_j . z_I = sum_{ell >= k} v_ell p_{ell,j} . z_I, mod higher filtration."""
    I = index_tuple(I)
    k = len(I)
    if not 0 <= j <= k - 1:
        raise ValueError(f"need 0 <= j <= k-1, got j={j}, k={k}")
    components = {ell: _level(ell, j, I) for ell in range(k, max_level(j, I) + 1)}
    return GradedElement.from_components(components)


def bp_k_action(j: int, I: Sequence[int]) -> frozenset[IndexTuple]:
    """v_k-coefficient of v_j . z_I in the Johnson-Wilson truncation."""
    I = index_tuple(I)
    k = len(I)
    if not 0 <= j <= k - 1:
        raise ValueError(f"need 0 <= j <= k-1, got j={j}, k={k}")
    return act_polynomial(two_power_monomial_sum(k, 2**k - 2**j), I)


def two_times(I: Sequence[int]) -> GradedElement:
    """Multiplication by 2 (= v_0) mod higher filtration."""
    return vj_action(0, I)


def parse_index_line(line: str) -> IndexTuple:
    return index_tuple(int(part) for part in line.strip().split(","))
