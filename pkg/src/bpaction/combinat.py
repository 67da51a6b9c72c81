"""Enumeration helpers: set partitions and permutations."""

from __future__ import annotations

from typing import Iterator, Sequence


def set_partitions(n: int, blocks: int) -> Iterator[tuple[int, ...]]:
    """Restricted growth strings of length n using exactly `blocks` values.

    a[0] = 0 and a[i] <= 1 + max(a[:i]); element i belongs to block a[i].
    Generated in lexicographic order.
    """
    if blocks < 1 or blocks > n:
        return
    a = [0] * n

    def fill(i: int, used: int) -> Iterator[tuple[int, ...]]:
        if n - i < blocks - used:
            return
        if i == n:
            yield tuple(a)
            return
        for v in range(min(used + 1, blocks)):
            a[i] = v
            yield from fill(i + 1, max(used, v + 1))

    a[0] = 0
    yield from fill(1, 1)


def heap_permutations(items: Sequence) -> Iterator[tuple]:
    """All permutations of items via Heap's algorithm (iterative form)."""
    a = list(items)
    n = len(a)
    c = [0] * n
    yield tuple(a)
    i = 0
    while i < n:
        if c[i] < i:
            if i % 2 == 0:
                a[0], a[i] = a[i], a[0]
            else:
                a[c[i]], a[i] = a[i], a[c[i]]
            yield tuple(a)
            c[i] += 1
            i = 0
        else:
            c[i] = 0
            i += 1


def stirling2(n: int, k: int) -> int:
    """Number of partitions of an n-set into k nonempty blocks."""
    row = [1] + [0] * k
    for m in range(1, n + 1):
        new = [0] * (k + 1)
        for j in range(1, min(m, k) + 1):
            new[j] = j * row[j] + row[j - 1]
        row = new
    return row[k]
