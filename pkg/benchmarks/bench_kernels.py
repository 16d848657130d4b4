"""Compare the compiled enumeration kernel against the numpy fallback.

Runs the packed sphere enumeration for each preset over a range of
radii, times both implementations, and checks that they emit identical
arrays.  Invoke from the repository root:

    python3 benchmarks/bench_kernels.py [--max-n 7]
"""

import argparse
import time

import numpy as np

from bscoding._kernels import HAVE_SPEEDUPS, pure
from bscoding.domain import get_preset
from bscoding.markov import MarkovCoding
from bscoding.words import _csr, letter_alphabet

try:
    from bscoding._kernels import _speedups
except ImportError:
    _speedups = None


def _arrays(coding):
    indptr, indices = _csr(coding)
    alphabet = letter_alphabet(coding)
    codes = np.array([alphabet.index(name) for name in coding.letters],
                     dtype=np.uint8)
    return indptr, indices, codes


def bench(preset, n_max):
    coding = MarkovCoding(get_preset(preset))
    indptr, indices, codes = _arrays(coding)
    print("%s (%d intervals)" % (preset, coding.size))
    print("  %3s %12s %10s %10s %8s" %
          ("n", "sequences", "pure", "compiled", "ratio"))
    for n in range(1, n_max + 1):
        t0 = time.perf_counter()
        a = pure.enumerate_packed(indptr, indices, codes, n)
        t_pure = time.perf_counter() - t0
        if _speedups is not None:
            t0 = time.perf_counter()
            b = _speedups.enumerate_packed(indptr, indices, codes, n)
            t_fast = time.perf_counter() - t0
            if not np.array_equal(a, b):
                raise SystemExit("kernels disagree at %s n=%d" % (preset, n))
            ratio = t_pure / t_fast if t_fast > 0 else float("inf")
            print("  %3d %12d %9.4fs %9.4fs %7.2fx"
                  % (n, len(a), t_pure, t_fast, ratio))
        else:
            print("  %3d %12d %9.4fs %10s" % (n, len(a), t_pure, "-"))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=7)
    parser.add_argument("--presets", nargs="*",
                        default=["sl2z", "triangle", "octagon"])
    args = parser.parse_args()
    print("compiled kernel available: %s" % HAVE_SPEEDUPS)
    for preset in args.presets:
        bench(preset, args.max_n)


if __name__ == "__main__":
    main()
