"""Time the numba kernels against the pure-numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Both backends run in this process by importing the kernel modules directly,
so the env flag does not matter here.  Numba timings exclude compilation.
"""

import argparse
import time

from bpaction.f2poly import F2Poly
from bpaction.kernels import _numba, _numpy, field_bits
from bpaction.plj import denominator, numerator, p_by_division


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def cases():
    for k, ell in [(3, 7), (4, 6), (4, 7)]:
        num, den = numerator(k, ell, 0), denominator(k)
        bits = field_bits(k)
        yield f"divide p_{{{ell},0}} k={k}", lambda m, n=num, d=den, b=bits, k=k: m.divide_keys(n.keys, d.keys, k, b)
    a = p_by_division(3, 6, 1)
    b = p_by_division(3, 5, 2)
    yield "mul p_{6,1}*p_{5,2} k=3", lambda m: m.parity_reduce(m.mul_keys(a.keys, b.keys))
    p = p_by_division(4, 5, 0)
    bits4 = field_bits(4)
    yield "transvect p_{5,0} k=4", lambda m: m.transvect_keys(p.keys, 4, bits4, 3, 0)
    yield "Sq^16 p_{5,0} k=4", lambda m: m.sq_keys(p.keys, 4, bits4, 16)
    yield "total square p_{5,0} k=4", lambda m: m.total_square_keys(p.keys, 4, bits4)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    rows = []
    for name, fn in cases():
        fn(_numba)  # compile
        t_nb = best_of(lambda: fn(_numba), args.repeat)
        t_np = best_of(lambda: fn(_numpy), args.repeat)
        rows.append((name, t_nb, t_np))
    width = max(len(r[0]) for r in rows)
    print(f"{'case':<{width}}  {'numba':>9}  {'numpy':>9}  speedup")
    for name, t_nb, t_np in rows:
        print(f"{name:<{width}}  {t_nb:9.4f}  {t_np:9.4f}  {t_np / t_nb:6.1f}x")


if __name__ == "__main__":
    main()
