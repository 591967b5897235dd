"""The compiled prefilter and its pure-Python twin must agree exactly."""

import random

import pytest

from nonarch.swiss_cheese import _accel, _kernels_py

try:
    from nonarch.swiss_cheese import _kernels
except ImportError:  # pragma: no cover
    _kernels = None


def _inputs(seed, n):
    rng = random.Random(seed)
    xs = [rng.uniform(-1.2, 1.2) for _ in range(n)]
    ys = [rng.uniform(-1.2, 1.2) for _ in range(n)]
    rs = [rng.uniform(0.001, 0.1) for _ in range(n)]
    return xs, ys, rs


def test_backend_name():
    assert _accel.BACKEND in ("cython", "python")


@pytest.mark.skipif(_kernels is None, reason="compiled kernel not built")
@pytest.mark.parametrize("seed", range(20))
def test_compiled_matches_python(seed):
    import array
    xs, ys, rs = _inputs(seed, 1 + seed * 5)
    ref = _kernels_py.collision_candidates(xs, ys, rs, 0.0, 0.0, 1.0, 1e-9)
    got = _kernels.collision_candidates(array.array("d", xs), array.array("d", ys),
                                        array.array("d", rs), 0.0, 0.0, 1.0, 1e-9)
    assert [tuple(p) for p in got] == ref


def test_python_kernel_examples():
    # two touching holes and one crossing the boundary
    xs, ys, rs = [-0.2, 0.2, 0.95], [0.0, 0.0, 0.0], [0.2, 0.2, 0.1]
    assert _kernels_py.collision_candidates(xs, ys, rs, 0.0, 0.0, 1.0, 1e-9) == [(0, 3), (1, 2)]


def test_accel_dispatch_uses_plain_lists():
    xs, ys, rs = _inputs(1, 10)
    assert _accel.collision_candidates(xs, ys, rs, 0.0, 0.0, 1.0, 1e-9) == \
        _kernels_py.collision_candidates(xs, ys, rs, 0.0, 0.0, 1.0, 1e-9)
