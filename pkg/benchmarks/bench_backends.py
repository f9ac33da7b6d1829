"""Compare the numba kernels with their pure-numpy fallbacks.

    python benchmarks/bench_backends.py [--repeat 3]

Both backends are imported in one process; the JIT kernels are warmed up
before timing so compilation is not counted.
"""
import argparse
import time

import numpy as np

from specialsu import _kernels
from specialsu.spectra import spectra_array, units


def best_of(fn, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t)
    return best, result


def walk_case(n, m):
    sizes = np.ones(m - 1, dtype=np.int64)
    weights = np.arange(1, m, dtype=np.int64)
    return sizes, weights, n, m


def canonical_case(n, m):
    S = spectra_array(n, m, special=True)
    return S, _kernels.unit_permutations(m, units(m))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    _kernels.walk_count_jit(*walk_case(4, 4), 0)
    _kernels.canonical_forms_jit(*canonical_case(3, 3))

    print(f"{'kernel':<16}{'case':<12}{'numba s':>10}{'numpy s':>10}{'speedup':>9}")
    for n, m in [(10, 10), (12, 10), (14, 11)]:
        s, w, n_, m_ = walk_case(n, m)
        tj, rj = best_of(lambda: _kernels.walk_count_jit(s, w, n_, m_, 0), args.repeat)
        tn, rn = best_of(lambda: _kernels.walk_count_numpy(list(s), list(w), n_, m_, 0),
                         args.repeat)
        assert rj == rn, (n, m, rj, rn)
        print(f"{'walk_count':<16}{f'({n},{m})':<12}{tj:>10.4f}{tn:>10.4f}{tn / tj:>9.1f}")
    for n, m in [(7, 7), (11, 11), (9, 13)]:
        S, perms = canonical_case(n, m)
        tj, (kj, zj) = best_of(lambda: _kernels.canonical_forms_jit(S, perms), args.repeat)
        tn, (kn, zn) = best_of(lambda: _kernels.canonical_forms_numpy(S, perms), args.repeat)
        assert np.array_equal(kj, kn) and np.array_equal(zj, zn), (n, m)
        print(f"{'canonical_forms':<16}{f'({n},{m})':<12}{tj:>10.4f}{tn:>10.4f}{tn / tj:>9.1f}")


if __name__ == "__main__":
    main()
