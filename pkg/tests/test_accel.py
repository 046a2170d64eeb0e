import os
import subprocess
import sys

import numpy as np
import pytest

from gentle_orders import _accel
from gentle_orders._accel import numba_kernels, numpy_kernels

needs_numba = pytest.mark.skipif(numba_kernels is None, reason="numba not importable")


def _perm(rng, n, holes=0.0):
    p = rng.permutation(n).astype(np.int64)
    if holes:
        # undefine whole cycles so the result stays a partial bijection
        drop = rng.random(n) < holes
        for x in np.nonzero(drop)[0]:
            y = x
            while p[y] >= 0:
                nxt = p[y]
                p[y] = -1
                y = nxt
    return p


@needs_numba
@pytest.mark.parametrize("n", [0, 1, 2, 7, 64, 500])
def test_orbit_kernels_agree(n):
    rng = np.random.default_rng(n)
    for holes in (0.0, 0.2):
        p = _perm(rng, n, holes)
        assert np.array_equal(numba_kernels.orbit_labels(p), numpy_kernels.orbit_labels(p))
        o1, off1 = numba_kernels.cycle_order(p)
        o2, off2 = numpy_kernels.cycle_order(p)
        assert np.array_equal(o1, o2) and np.array_equal(off1, off2)


@needs_numba
@pytest.mark.parametrize("n", [1, 5, 40, 300])
def test_next_marked_agree(n):
    rng = np.random.default_rng(n + 1)
    for frac in (0.0, 0.1, 0.5, 1.0):
        p = _perm(rng, n)
        marked = rng.random(n) < frac
        assert np.array_equal(numba_kernels.next_marked(p, marked),
                              numpy_kernels.next_marked(p, marked))


@needs_numba
@pytest.mark.parametrize("n", [1, 6, 80, 400])
def test_component_labels_agree(n):
    rng = np.random.default_rng(n + 2)
    a = _perm(rng, n)
    b = np.arange(n, dtype=np.int64)
    k = rng.permutation(n)[: n // 3 * 2]
    b[k[0::2]], b[k[1::2]] = k[1::2], k[0::2]
    assert np.array_equal(numba_kernels.component_labels(a, b), numpy_kernels.component_labels(a, b))


def test_numpy_cycle_order_small():
    order, off = numpy_kernels.cycle_order(np.array([2, 0, 1, 4, 3], dtype=np.int64))
    assert order.tolist() == [0, 2, 1, 3, 4]
    assert off.tolist() == [0, 3, 5]


def test_next_marked_semantics():
    # 0 -> 1 -> 2 -> 0 with 0 and 2 marked
    p = np.array([1, 2, 0], dtype=np.int64)
    marked = np.array([True, False, True])
    out = numpy_kernels.next_marked(p, marked)
    assert out[0] == 2 and out[2] == 0


def _backend_in_subprocess(value):
    env = dict(os.environ, GENTLE_ORDERS_BACKEND=value)
    return subprocess.run([sys.executable, "-c", "import gentle_orders; print(gentle_orders.BACKEND)"],
                          env=env, capture_output=True, text=True)


def test_env_flag_selects_numpy():
    out = _backend_in_subprocess("numpy")
    assert out.returncode == 0 and out.stdout.strip() == "numpy"


def test_env_flag_rejects_unknown():
    out = _backend_in_subprocess("fortran")
    assert out.returncode != 0 and "GENTLE_ORDERS_BACKEND" in out.stderr


def test_active_backend_is_named():
    assert _accel.BACKEND in ("numba", "numpy")
