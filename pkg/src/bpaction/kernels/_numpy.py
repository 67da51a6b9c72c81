"""Pure numpy / Python implementations of the packed-key kernels.

Every kernel takes and returns int64 key arrays; returned arrays are unique
and sorted descending (leading term first).
"""

import heapq

import numpy as np

from ._layout import deg_shift, field_bits, var_shift


def parity_reduce(keys):
    """Keep keys that occur an odd number of times, descending."""
    keys = np.asarray(keys, dtype=np.int64)
    if keys.size == 0:
        return keys.copy()
    uniq, counts = np.unique(keys, return_counts=True)
    return uniq[(counts & 1) == 1][::-1].copy()


def mul_keys(a, b):
    if a.size == 0 or b.size == 0:
        return np.empty(0, dtype=np.int64)
    return parity_reduce(np.add.outer(a, b).ravel())


def _fields(keys, k, bits):
    mask = (1 << bits) - 1
    return np.stack([(keys >> var_shift(k, t)) & mask for t in range(k)], axis=1)


def divide_keys(num, den, k, bits):
    """Leading-term division of num by den.

    Returns (quotient, status); status 0 means exact, 1 means a leading term
    of the running remainder was not divisible by lead(den).
    """
    mask = (1 << bits) - 1
    shifts = [(k - 1 - t) * bits for t in range(k)]
    den_list = [int(d) for d in den]
    lead = den_list[0]
    lead_f = [(lead >> s) & mask for s in shifts]
    rem = set(int(x) for x in num)
    heap = [-x for x in rem]
    heapq.heapify(heap)
    quotient = []
    while heap:
        x = -heapq.heappop(heap)
        if x not in rem:
            continue
        for s, lf in zip(shifts, lead_f):
            if ((x >> s) & mask) < lf:
                return np.asarray(quotient, dtype=np.int64), 1
        q = x - lead
        quotient.append(q)
        for d in den_list:
            y = q + d
            if y in rem:
                rem.remove(y)
            else:
                rem.add(y)
                heapq.heappush(heap, -y)
    return np.asarray(quotient, dtype=np.int64), 0


def transvect_keys(keys, k, bits, src, dst):
    """Substitute x_src -> x_src + x_dst (0-based variable indices)."""
    if keys.size == 0:
        return keys.copy()
    mask = (1 << bits) - 1
    delta = (1 << var_shift(k, dst)) - (1 << var_shift(k, src))
    base = (keys >> var_shift(k, src)) & mask
    out = keys.copy()
    for b in range(bits):
        sel = ((base >> b) & 1) == 1
        if not sel.any():
            continue
        out = np.concatenate([out, out[sel] + (delta << b)])
        base = np.concatenate([base, base[sel]])
    return parity_reduce(out)


def sq_keys(keys, k, bits, i):
    """Homogeneous Steenrod square Sq^i, applied termwise.

    On a monomial, Sq^i(x^e) = sum over a with a_t a binary submask of e_t
    and sum(a) == i of x^(e+a).
    """
    if keys.size == 0 or i < 0:
        return np.empty(0, dtype=np.int64)
    dshift = deg_shift(k)
    cur = keys.copy()
    orig = _fields(keys, k, bits)
    cap = keys >> dshift
    need = np.full(keys.size, i, dtype=np.int64)
    alive = cap >= need
    cur, orig, cap, need = cur[alive], orig[alive], cap[alive], need[alive]
    for b in range(bits - 1, -1, -1):
        amount = 1 << b
        for t in range(k):
            sel = ((orig[:, t] >> b) & 1) == 1
            if not sel.any():
                continue
            cap = cap - np.where(sel, amount, 0)
            take = sel & (need >= amount)
            add_key = (1 << dshift) | (1 << var_shift(k, t))
            new_cur = cur[take] + add_key * amount
            new_need = need[take] - amount
            keep = ~(sel & (need > cap))
            cur = np.concatenate([cur[keep], new_cur])
            orig = np.concatenate([orig[keep], orig[take]])
            cap = np.concatenate([cap[keep], cap[take]])
            need = np.concatenate([need[keep], new_need])
    return parity_reduce(cur[need == 0])


def total_square_keys(keys, k, bits):
    """Ring map x_t -> x_t + x_t^2 on every variable."""
    if keys.size == 0:
        return keys.copy()
    dshift = deg_shift(k)
    cur = keys.copy()
    orig = _fields(keys, k, bits)
    for t in range(k):
        add_key = (1 << dshift) | (1 << var_shift(k, t))
        for b in range(bits):
            sel = ((orig[:, t] >> b) & 1) == 1
            if not sel.any():
                continue
            cur = np.concatenate([cur, cur[sel] + (add_key << b)])
            orig = np.concatenate([orig, orig[sel]])
    return parity_reduce(cur)
