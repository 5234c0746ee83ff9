"""Compare the compiled enumeration kernels with their pure-Python sources.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

import numpy as np

from invseq import _kernels

CASES = [
    ("ggm n=10", _kernels.walk_ggm, (10,)),
    ("aw n=10", _kernels.walk_kaw, (10, 2)),
    ("asc210 n=10", _kernels.walk_ascent, (10, True, False)),
    ("inv n=9", _kernels.walk_inversions, (9,)),
]
CEILING = 10**8


def count_only(walker, args):
    n = args[0]
    return walker(*args, CEILING, np.zeros((0, n), np.int64), False)


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if not _kernels.JIT_ENABLED:
        print(f"note: {_kernels.ENV_FLAG} is set; both columns run Python")

    rows = []
    for name, kernel, kargs in CASES:
        count_only(kernel, kargs)  # compile outside the timing
        t_jit, fast = best_of(lambda: count_only(kernel, kargs), args.repeat)
        t_py, slow = best_of(lambda: count_only(_kernels.py_func(kernel), kargs), args.repeat)
        assert fast == slow, (name, fast, slow)
        rows.append((name, fast, t_py, t_jit))

    crossing = _kernels.count_rgf_avoiders
    crossing(9, 3, True, CEILING)
    t_jit, fast = best_of(lambda: crossing(9, 3, True, CEILING), args.repeat)
    # The Python outer loop looks up the inner kernel as a module global.
    inner = _kernels.has_crossing_rgf
    _kernels.has_crossing_rgf = _kernels.py_func(inner)
    try:
        t_py, slow = best_of(lambda: _kernels.py_func(crossing)(9, 3, True, CEILING), 1)
    finally:
        _kernels.has_crossing_rgf = inner
    assert fast == slow
    rows.append(("E_3 n=9", fast, t_py, t_jit))

    print(f"{'case':<14}{'count':>10}{'python s':>12}{'numba s':>12}{'speedup':>10}")
    for name, count, t_py, t_jit in rows:
        print(f"{name:<14}{count:>10}{t_py:>12.4f}{t_jit:>12.4f}{t_py / t_jit:>9.1f}x")


if __name__ == "__main__":
    main()
