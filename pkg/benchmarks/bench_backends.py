"""Compare the compiled enumeration kernel against the pure-Python one.

Usage:
    python benchmarks/bench_backends.py [--repeats N]

Scans whole program-length classes for a few targets with both kernels and
reports wall-clock times plus the speedup.  The compiled kernel is optional;
if it is not built the script times the fallback alone.
"""

import argparse
import time

from reachcalc import _core_py

try:
    from reachcalc import _core
except ImportError:
    _core = None

CASES = [
    ("0", 8),
    ("0101", 9),
    ("01010101", 10),
    ("0000000000000000", 12),
]


def _time(kernel, target, n_opcodes, repeats):
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = kernel.scan_length_class(n_opcodes, target, 64)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    print(f"{'target':<18}{'class':>6}{'pure (s)':>12}{'compiled (s)':>14}{'speedup':>9}")
    for target, n_opcodes in CASES:
        pure_t, pure_r = _time(_core_py, target, n_opcodes, args.repeats)
        if _core is None:
            print(f"{target!r:<18}{n_opcodes:>6}{pure_t:>12.4f}{'n/a':>14}{'n/a':>9}")
            continue
        core_t, core_r = _time(_core, target, n_opcodes, args.repeats)
        assert core_r == pure_r, f"kernel disagreement on {target!r}"
        print(
            f"{target!r:<18}{n_opcodes:>6}{pure_t:>12.4f}{core_t:>14.4f}"
            f"{pure_t / core_t:>8.1f}x"
        )
    if _core is None:
        print("compiled kernel not built; timed the pure-Python fallback only")


if __name__ == "__main__":
    main()
