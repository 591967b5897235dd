"""Compare the compiled collision prefilter with the pure-Python fallback.

    python benchmarks/bench_collisions.py [--holes 50 200 800] [--repeat 5]
"""

import argparse
import array
import random
import timeit

from nonarch.swiss_cheese import _kernels_py

try:
    from nonarch.swiss_cheese import _kernels
except ImportError:
    _kernels = None


def inputs(n, seed=0):
    rng = random.Random(seed)
    xs = [rng.uniform(-1.15, 1.15) for _ in range(n)]
    ys = [rng.uniform(-1.15, 1.15) for _ in range(n)]
    rs = [rng.uniform(1e-3, 0.9 / n) for _ in range(n)]
    return xs, ys, rs


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--holes", type=int, nargs="+", default=[50, 200, 800])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    print(f"{'holes':>6} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for n in args.holes:
        xs, ys, rs = inputs(n)
        t_py = min(timeit.repeat(
            lambda: _kernels_py.collision_candidates(xs, ys, rs, 0.0, 0.0, 1.0, 1e-9),
            number=1, repeat=args.repeat))
        if _kernels is None:
            print(f"{n:>6} {t_py * 1e3:>10.2f} {'n/a':>10} {'n/a':>8}")
            continue
        ax, ay, ar = (array.array("d", v) for v in (xs, ys, rs))
        ref = _kernels_py.collision_candidates(xs, ys, rs, 0.0, 0.0, 1.0, 1e-9)
        assert [tuple(p) for p in _kernels.collision_candidates(ax, ay, ar, 0.0, 0.0, 1.0,
                                                                1e-9)] == ref
        t_cy = min(timeit.repeat(
            lambda: _kernels.collision_candidates(ax, ay, ar, 0.0, 0.0, 1.0, 1e-9),
            number=1, repeat=args.repeat))
        print(f"{n:>6} {t_py * 1e3:>10.2f} {t_cy * 1e3:>10.2f} {t_py / t_cy:>7.1f}x")


if __name__ == "__main__":
    main()
