"""numba-compiled versions of the packed-key kernels.

Same contracts as the numpy module; the two are checked against each
other in the test-suite.
"""

import heapq

import numpy as np
from numba import njit, types
from numba.typed import Dict


@njit(cache=True)
def _reduce_sorted(s):
    out = np.empty(s.size, dtype=np.int64)
    n = 0
    i = 0
    while i < s.size:
        j = i
        while j < s.size and s[j] == s[i]:
            j += 1
        if (j - i) & 1:
            out[n] = s[i]
            n += 1
        i = j
    return out[:n][::-1].copy()


def parity_reduce(keys):
    # numpy's vectorized sort beats the compiled quicksort on large inputs
    return _reduce_sorted(np.sort(keys))


@njit(cache=True)
def _outer_sum(a, b):
    out = np.empty(a.size * b.size, dtype=np.int64)
    n = 0
    for i in range(a.size):
        for j in range(b.size):
            out[n] = a[i] + b[j]
            n += 1
    return out


def mul_keys(a, b):
    return parity_reduce(_outer_sum(a, b))


@njit(cache=True)
def divide_keys(num, den, k, bits):
    mask = (np.int64(1) << bits) - 1
    lead = den[0]
    lead_f = np.empty(k, dtype=np.int64)
    for t in range(k):
        lead_f[t] = (lead >> ((k - 1 - t) * bits)) & mask
    # numba's reflected set degrades on long add/discard churn; a typed dict does not
    rem = Dict.empty(key_type=types.int64, value_type=types.boolean)
    heap = [-num[0]]
    rem[num[0]] = True
    for i in range(1, num.size):
        rem[num[i]] = True
        heap.append(-num[i])
    heapq.heapify(heap)
    quotient = np.empty(16, dtype=np.int64)
    nq = 0
    while len(heap) > 0:
        x = -heapq.heappop(heap)
        if x not in rem:
            continue
        for t in range(k):
            if ((x >> ((k - 1 - t) * bits)) & mask) < lead_f[t]:
                return quotient[:nq].copy(), 1
        q = x - lead
        if nq == quotient.size:
            grown = np.empty(2 * nq, dtype=np.int64)
            grown[:nq] = quotient
            quotient = grown
        quotient[nq] = q
        nq += 1
        for d in den:
            y = q + d
            if y in rem:
                del rem[y]
            else:
                rem[y] = True
                heapq.heappush(heap, -y)
    return quotient[:nq].copy(), 0


@njit(cache=True)
def _transvect(keys, mask, src_shift, delta):
    total = 0
    for i in range(keys.size):
        a = (keys[i] >> src_shift) & mask
        pop = 0
        while a:
            pop += a & 1
            a >>= 1
        total += np.int64(1) << pop
    out = np.empty(total, dtype=np.int64)
    n = 0
    for i in range(keys.size):
        a = (keys[i] >> src_shift) & mask
        c = a
        # every binary submask c of a, including 0
        while True:
            out[n] = keys[i] + c * delta
            n += 1
            if c == 0:
                break
            c = (c - 1) & a
    return out


def transvect_keys(keys, k, bits, src, dst):
    mask = (1 << bits) - 1
    src_shift = (k - 1 - src) * bits
    delta = (1 << ((k - 1 - dst) * bits)) - (1 << src_shift)
    return parity_reduce(_transvect(keys, np.int64(mask), np.int64(src_shift), np.int64(delta)))


@njit(cache=True)
def _atoms(key, k, bits, dshift, amt, inc):
    mask = (np.int64(1) << bits) - 1
    n = 0
    for b in range(bits - 1, -1, -1):
        for t in range(k):
            e = (key >> ((k - 1 - t) * bits)) & mask
            if (e >> b) & 1:
                amt[n] = np.int64(1) << b
                inc[n] = ((np.int64(1) << dshift) | (np.int64(1) << ((k - 1 - t) * bits))) << b
                n += 1
    return n


@njit(cache=True)
def _sq(keys, k, bits, dshift, i):
    amt = np.empty(k * bits, dtype=np.int64)
    inc = np.empty(k * bits, dtype=np.int64)
    suffix = np.empty(k * bits + 1, dtype=np.int64)
    took = np.zeros(k * bits, dtype=np.bool_)
    out = np.empty(max(16, keys.size), dtype=np.int64)
    nout = 0
    for r in range(keys.size):
        n = _atoms(keys[r], k, bits, dshift, amt, inc)
        suffix[n] = 0
        for a in range(n - 1, -1, -1):
            suffix[a] = suffix[a + 1] + amt[a]
        idx = 0
        need = i
        key = keys[r]
        while True:
            forward = True
            if need == 0:
                if nout == out.size:
                    grown = np.empty(2 * nout, dtype=np.int64)
                    grown[:nout] = out
                    out = grown
                out[nout] = key
                nout += 1
                forward = False
            elif idx == n or suffix[idx] < need:
                forward = False
            if forward:
                if amt[idx] <= need:
                    took[idx] = True
                    need -= amt[idx]
                    key += inc[idx]
                else:
                    took[idx] = False
                idx += 1
                continue
            # backtrack to the last level that still has an exclude branch
            resumed = False
            while idx > 0:
                idx -= 1
                if took[idx]:
                    took[idx] = False
                    need += amt[idx]
                    key -= inc[idx]
                    idx += 1
                    resumed = True
                    break
            if not resumed:
                break
    return out[:nout]


def sq_keys(keys, k, bits, i):
    if keys.size == 0 or i < 0:
        return np.empty(0, dtype=np.int64)
    return parity_reduce(_sq(keys, np.int64(k), np.int64(bits), np.int64(k * bits), np.int64(i)))


@njit(cache=True)
def _total_square(keys, k, bits, dshift):
    amt = np.empty(k * bits, dtype=np.int64)
    inc = np.empty(k * bits, dtype=np.int64)
    total = 0
    for r in range(keys.size):
        total += np.int64(1) << _atoms(keys[r], k, bits, dshift, amt, inc)
    out = np.empty(total, dtype=np.int64)
    nout = 0
    for r in range(keys.size):
        n = _atoms(keys[r], k, bits, dshift, amt, inc)
        for subset in range(np.int64(1) << n):
            key = keys[r]
            for a in range(n):
                if (subset >> a) & 1:
                    key += inc[a]
            out[nout] = key
            nout += 1
    return out


def total_square_keys(keys, k, bits):
    if keys.size == 0:
        return keys.copy()
    return parity_reduce(_total_square(keys, np.int64(k), np.int64(bits), np.int64(k * bits)))
