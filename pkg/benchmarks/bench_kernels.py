"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Both kernels are imported directly, so the comparison does not depend on
which backend the package selected at import.
"""
import argparse
import timeit

import numpy as np

from hooksums import _kernels_py
from hooksums.partitions import HookShape, enumerate_hook

try:
    from hooksums import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def cases():
    shapes = list(enumerate_hook(HookShape(2, 1), 120))
    yield "f_lambda over H(2,1;120)", lambda k: [k.f_lambda(s) for s in shapes]
    big = list(enumerate_hook(HookShape(1, 1), 2000))[::50]
    yield "f_lambda, 40 hooks of n=2000", lambda k: [k.f_lambda(s) for s in big]
    x = np.random.default_rng(0).standard_normal((1 << 16, 5))
    yield "vandermonde 65536 x 5, beta=1", lambda k: k.vandermonde_power_sums(x, 5, 1.0)
    yield "vandermonde 65536 x 5, split 3, beta=2", lambda k: k.vandermonde_power_sums(x, 3, 2.0)
    yield "vandermonde 65536 x 5, beta=0.7", lambda k: k.vandermonde_power_sums(x, 5, 0.7)


def best_of(fn, kernels, repeat):
    fn(kernels)  # warm caches (prime sieve)
    return min(timeit.repeat(lambda: fn(kernels), number=1, repeat=repeat))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if _kernels_c is None:
        print("compiled kernels not built; only the fallback can be timed")
    print(f"{'case':<42}{'python [ms]':>12}{'cython [ms]':>13}{'speedup':>9}")
    for name, fn in cases():
        t_py = best_of(fn, _kernels_py, args.repeat)
        if _kernels_c is None:
            print(f"{name:<42}{t_py * 1e3:>12.2f}{'-':>13}{'-':>9}")
            continue
        t_c = best_of(fn, _kernels_c, args.repeat)
        print(f"{name:<42}{t_py * 1e3:>12.2f}{t_c * 1e3:>13.2f}{t_py / t_c:>8.1f}x")


if __name__ == "__main__":
    main()
