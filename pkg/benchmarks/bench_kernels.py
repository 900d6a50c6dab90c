"""Compare the compiled oracle kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit

from metaplectic import _backend, _kernels_py

CASES = [
    # Pairs with symbol -1, so the search is exhaustive.
    ("hilbert_search p=3 k=9", "hilbert_search", (2, 3, 3, 9)),
    ("hilbert_search p=2 k=15", "hilbert_search", (-1, -1, 2, 15)),
    ("hilbert_search p=7 k=6", "hilbert_search", (3, 7, 7, 6)),
    ("gauss_phase_sum p=3 n=18", "gauss_phase_sum", (2, 3, 18)),
    ("gauss_phase_sum p=5 n=13", "gauss_phase_sum", (2, 5, 13)),
    ("gauss_phase_sum p=2 n=30", "gauss_phase_sum", (3, 2, 30)),
]


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)
    compiled = _backend._compiled
    if compiled is None:
        print("compiled kernels not built; only the Python timings are shown")
    print(f"{'case':<28}{'python (ms)':>14}{'cython (ms)':>14}{'speedup':>10}")
    for label, name, call in CASES:
        py = min(timeit.repeat(lambda: getattr(_kernels_py, name)(*call), number=1, repeat=args.repeat))
        if compiled is not None:
            expect = getattr(_kernels_py, name)(*call)
            got = getattr(compiled, name)(*call)
            assert abs(complex(got) - complex(expect)) < 1e-6 * max(1.0, abs(complex(expect)))
            cy = min(timeit.repeat(lambda: getattr(compiled, name)(*call), number=1, repeat=args.repeat))
            print(f"{label:<28}{py * 1e3:>14.2f}{cy * 1e3:>14.3f}{py / cy:>9.0f}x")
        else:
            print(f"{label:<28}{py * 1e3:>14.2f}{'-':>14}{'-':>10}")


if __name__ == "__main__":
    main()
