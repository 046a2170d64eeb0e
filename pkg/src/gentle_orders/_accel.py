"""Array kernels for permutation orbits, with a numba path and a pure-numpy path.

The backend is chosen once at import from ``GENTLE_ORDERS_BACKEND``
(``numba`` or ``numpy``). The default is ``numba`` when it imports cleanly.
Both implementations stay importable as ``numba_kernels`` and
``numpy_kernels`` so the benchmark and the tests can run them side by side.
"""

import os
from types import SimpleNamespace

import numpy as np

INDEX = np.int64


# ----------------------------------------------------------------------
# pure numpy: pointer doubling, O(n log n) work, no python-level loop over n
# ----------------------------------------------------------------------

def _np_orbit_labels(images):
    """Minimal element of the orbit of every point (-1 on undefined points)."""
    n = images.shape[0]
    defined = images >= 0
    label = np.where(defined, np.arange(n, dtype=INDEX), -1)
    if n == 0:
        return label
    jump = np.where(defined, images, np.arange(n, dtype=INDEX))
    span = 1
    while span < n:
        label = np.minimum(label, label[jump])
        jump = jump[jump]
        span *= 2
    return np.where(defined, label, -1)


def _np_cycle_order(images):
    """Flattened orbits (each from its minimum, orbits by minimum) plus offsets."""
    n = images.shape[0]
    label = _np_orbit_labels(images)
    defined = label >= 0
    inv = np.full(n, -1, dtype=INDEX)
    pts = np.nonzero(defined)[0]
    inv[images[pts]] = pts
    # list ranking towards the orbit minimum along the inverse permutation
    root = label == np.arange(n)
    nxt = np.where(root | ~defined, np.arange(n, dtype=INDEX), inv)
    dist = np.where(root | ~defined, 0, 1).astype(INDEX)
    span = 1
    while span < n:
        dist = dist + dist[nxt]
        nxt = nxt[nxt]
        span *= 2
    order = pts[np.lexsort((dist[pts], label[pts]))]
    reps = np.nonzero(root & defined)[0]
    sizes = np.bincount(label[pts], minlength=n)[reps]
    offsets = np.zeros(reps.shape[0] + 1, dtype=INDEX)
    np.cumsum(sizes, out=offsets[1:])
    return order.astype(INDEX), offsets


def _np_next_marked(images, marked):
    """For each point x, the first marked point among images(x), images^2(x), ...

    Returns -1 where the forward orbit never meets a marked point.
    """
    n = images.shape[0]
    hit = np.where(marked[images], images, -1)
    jump = images.copy()
    span = 1
    while span < n:
        open_ = hit < 0
        hit = np.where(open_, hit[jump], hit)
        jump = jump[jump]
        span *= 2
    return hit.astype(INDEX)


def _np_component_labels(a, b):
    """Minimal point of each orbit of the group generated by ``a`` and ``b``."""
    n = a.shape[0]
    label = np.arange(n, dtype=INDEX)
    if n == 0:
        return label
    a_inv = np.empty_like(a)
    a_inv[a] = np.arange(n, dtype=INDEX)
    b_inv = np.empty_like(b)
    b_inv[b] = np.arange(n, dtype=INDEX)
    while True:
        new = np.minimum.reduce([label, label[a], label[a_inv], label[b], label[b_inv]])
        # hooking: roots adopt the smallest label seen by any member
        np.minimum.at(new, label, new)
        new = new[new]
        if np.array_equal(new, label):
            return label
        label = new


numpy_kernels = SimpleNamespace(
    name="numpy",
    orbit_labels=_np_orbit_labels,
    cycle_order=_np_cycle_order,
    next_marked=_np_next_marked,
    component_labels=_np_component_labels,
)


# ----------------------------------------------------------------------
# numba: straight linear walks
# ----------------------------------------------------------------------

def _build_numba_kernels():
    from numba import njit

    @njit(cache=True)
    def orbit_labels(images):
        n = images.shape[0]
        label = np.full(n, -1, dtype=np.int64)
        for x in range(n):
            if images[x] < 0 or label[x] >= 0:
                continue
            y = x
            while label[y] < 0:
                label[y] = x
                y = images[y]
        return label

    @njit(cache=True)
    def cycle_order(images):
        n = images.shape[0]
        seen = np.zeros(n, dtype=np.bool_)
        order = np.empty(n, dtype=np.int64)
        offsets = np.zeros(n + 1, dtype=np.int64)
        k = 0
        m = 0
        for x in range(n):
            if images[x] < 0 or seen[x]:
                continue
            y = x
            while not seen[y]:
                seen[y] = True
                order[k] = y
                k += 1
                y = images[y]
            m += 1
            offsets[m] = k
        return order[:k], offsets[: m + 1]

    @njit(cache=True)
    def next_marked(images, marked):
        # one pass per cycle: walk it backwards twice, carrying the last mark seen
        n = images.shape[0]
        hit = np.full(n, -1, dtype=np.int64)
        seen = np.zeros(n, dtype=np.bool_)
        cyc = np.empty(n, dtype=np.int64)
        for x in range(n):
            if seen[x]:
                continue
            L = 0
            y = x
            while not seen[y]:
                seen[y] = True
                cyc[L] = y
                L += 1
                y = images[y]
            cur = -1
            for i in range(2 * L - 1, -1, -1):
                y = cyc[i % L]
                if i < L:
                    hit[y] = cur
                if marked[y]:
                    cur = y
        return hit

    @njit(cache=True)
    def _find(parent, x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    @njit(cache=True)
    def component_labels(a, b):
        n = a.shape[0]
        parent = np.arange(n)
        for x in range(n):
            for y in (a[x], b[x]):
                rx = _find(parent, x)
                ry = _find(parent, y)
                if rx < ry:
                    parent[ry] = rx
                elif ry < rx:
                    parent[rx] = ry
        label = np.empty(n, dtype=np.int64)
        for x in range(n):
            label[x] = _find(parent, x)
        return label

    return SimpleNamespace(
        name="numba",
        orbit_labels=orbit_labels,
        cycle_order=cycle_order,
        next_marked=next_marked,
        component_labels=component_labels,
    )


try:
    numba_kernels = _build_numba_kernels()
except ImportError:  # pragma: no cover - numba is optional
    numba_kernels = None


def _select():
    wanted = os.environ.get("GENTLE_ORDERS_BACKEND", "numba").strip().lower()
    if wanted not in ("numba", "numpy"):
        raise ValueError(f"GENTLE_ORDERS_BACKEND must be 'numba' or 'numpy', got {wanted!r}")
    if wanted == "numba" and numba_kernels is not None:
        return numba_kernels
    return numpy_kernels


kernels = _select()
BACKEND = kernels.name
