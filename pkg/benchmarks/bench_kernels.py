"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import random
import timeit

from daehee_kit import _kernels_py

try:
    from daehee_kit import _kernels as compiled
except ImportError:
    compiled = None


def cases():
    rng = random.Random(20131017)
    # series numerators over a common denominator, as series_mul produces them
    a = [rng.randrange(-10**40, 10**40) for _ in range(41)]
    b = [rng.randrange(-10**40, 10**40) for _ in range(41)]
    return [
        ("power_sums 5^8 terms, exp 6", "power_sums", (5**8, 6)),
        ("power_sums 2*10^6 terms, exp 3", "power_sums", (2_000_000, 3)),
        ("power_sums 3^8 terms, exp 12", "power_sums", (3**8, 12)),
        ("convolve order 40, 130-bit ints", "convolve", (a, b, 40)),
        ("stirling rows to 200", "stirling1_rows", (200,)),
        ("stirling2 rows to 200", "stirling2_rows", (200,)),
    ]


def bench(fn, args, repeat):
    return min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    opts = ap.parse_args()

    if compiled is None:
        print("compiled kernels are not built; only timing the fallback")
    print(f"{'case':38s} {'python [s]':>11s} {'cython [s]':>11s} {'speedup':>8s}")
    for label, name, args in cases():
        py_fn = getattr(_kernels_py, name)
        t_py = bench(py_fn, args, opts.repeat)
        if compiled is None:
            print(f"{label:38s} {t_py:11.4f} {'-':>11s} {'-':>8s}")
            continue
        c_fn = getattr(compiled, name)
        assert c_fn(*args) == py_fn(*args), label
        t_c = bench(c_fn, args, opts.repeat)
        print(f"{label:38s} {t_py:11.4f} {t_c:11.4f} {t_py / t_c:7.1f}x")


if __name__ == "__main__":
    main()
