"""Bit layout of packed monomial keys.

A monomial x1^e1 ... xk^ek is stored as one non-negative int64::

    key = deg << (k*bits) | e1 << ((k-1)*bits) | ... | ek

so integer comparison of keys is graded-lex comparison of monomials
(x1 > x2 > ... > xk), and multiplying monomials is adding keys as long
as no field overflows.
"""

from functools import lru_cache


@lru_cache(maxsize=None)
def field_bits(k: int) -> int:
    if k < 1:
        raise ValueError(f"need at least one variable, got k={k}")
    bits = (63 - (k - 1).bit_length()) // (k + 1)
    if bits < 2:
        raise OverflowError(f"k={k} variables do not fit a 64-bit key")
    return bits


def deg_shift(k: int) -> int:
    return k * field_bits(k)


def max_exponent(k: int) -> int:
    return (1 << field_bits(k)) - 1


def max_degree(k: int) -> int:
    return (1 << (63 - deg_shift(k))) - 1


def var_shift(k: int, t: int) -> int:
    """Shift of the exponent field of variable index t (0-based)."""
    return (k - 1 - t) * field_bits(k)


def unit_key(k: int, t: int) -> int:
    """Key of the monomial x_{t+1}."""
    return (1 << deg_shift(k)) | (1 << var_shift(k, t))
