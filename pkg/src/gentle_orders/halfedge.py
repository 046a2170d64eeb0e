"""Permutations on half-edges and the derived permutations phi, kappa and rho.

Points are ``0 .. n-1``. A permutation may be *partial*: undefined points
carry the image ``-1`` (kappa and rho are defined on subsets only).
Cycle strings in the public text format are 1-based.
"""

import re
from dataclasses import dataclass

import numpy as np

from ._accel import kernels
from .errors import FormatError


class Permutation:
    r"""
    A (possibly partial) permutation of ``{0, ..., n-1}`` stored as an image array.

    Composition follows function notation: ``(p * q)(x) == p(q(x))``.

    >>> p = Permutation.from_cycles(3, [(0, 2, 1)])
    >>> p.images.tolist()
    [2, 0, 1]
    >>> p.cycle_string()
    '(1 3 2)'
    """

    __slots__ = ("_images",)

    def __init__(self, images, check=True):
        arr = np.array(images, dtype=np.int64).reshape(-1)
        if check:
            defined = arr[arr >= 0]
            n = arr.shape[0]
            if np.any(arr < -1) or np.any(arr >= n):
                raise ValueError("images out of range")
            dom = np.nonzero(arr >= 0)[0]
            if not np.array_equal(np.sort(defined), dom):
                raise ValueError("not a bijection of its domain")
        arr.setflags(write=False)
        self._images = arr

    @classmethod
    def identity(cls, n):
        return cls(np.arange(n), check=False)

    @classmethod
    def from_cycles(cls, n, cycles, partial=False):
        """Build from disjoint cycles over 0-based points; omitted points are
        fixed, or undefined when ``partial`` is set."""
        images = np.full(n, -1, dtype=np.int64) if partial else np.arange(n, dtype=np.int64)
        seen = set()
        for cyc in cycles:
            for a in cyc:
                if not 0 <= a < n:
                    raise ValueError(f"point {a} out of range 0..{n - 1}")
                if a in seen:
                    raise ValueError(f"point {a} appears twice")
                seen.add(a)
            for i, a in enumerate(cyc):
                images[a] = cyc[(i + 1) % len(cyc)]
        return cls(images, check=False)

    @property
    def images(self):
        return self._images

    @property
    def n(self):
        return self._images.shape[0]

    def __len__(self):
        return self.n

    def __call__(self, x):
        return int(self._images[x])

    def __mul__(self, other):
        if self.n != other.n:
            raise ValueError("size mismatch")
        a, b = self._images, other._images
        out = np.where(b >= 0, a[np.maximum(b, 0)], -1)
        return Permutation(out, check=False)

    def inverse(self):
        inv = np.full(self.n, -1, dtype=np.int64)
        dom = self.domain()
        inv[self._images[dom]] = dom
        return Permutation(inv, check=False)

    def domain(self):
        return np.nonzero(self._images >= 0)[0]

    def is_partial(self):
        return bool(np.any(self._images < 0))

    def is_identity(self):
        return bool(np.array_equal(self._images, np.arange(self.n)))

    def is_involution(self):
        if self.is_partial():
            return False
        return (self * self).is_identity()

    def fixed_points(self):
        return np.nonzero(self._images == np.arange(self.n))[0]

    def restrict(self, points):
        """Partial permutation agreeing with ``self`` on ``points`` (which must be
        a union of orbits) and undefined elsewhere."""
        keep = np.zeros(self.n, dtype=bool)
        keep[np.asarray(points, dtype=np.int64)] = True
        if not np.all(keep[self._images[keep]]):
            raise ValueError("points are not a union of orbits")
        return Permutation(np.where(keep, self._images, -1), check=False)

    def relabel(self, mapping):
        """Conjugate by the bijection ``x -> mapping[x]``."""
        mapping = np.asarray(mapping, dtype=np.int64)
        out = np.full(self.n, -1, dtype=np.int64)
        dom = self.domain()
        out[mapping[dom]] = mapping[self._images[dom]]
        return Permutation(out, check=False)

    def cycles(self):
        return orbits(self).orbits

    def cycle_type(self):
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def cycle_string(self, one_based=True, singletons=True):
        shift = 1 if one_based else 0
        parts = [
            "(" + " ".join(str(x + shift) for x in c) + ")"
            for c in self.cycles()
            if singletons or len(c) > 1
        ]
        return "".join(parts) if parts else "()"

    def __eq__(self, other):
        return isinstance(other, Permutation) and np.array_equal(self._images, other._images)

    def __hash__(self):
        return hash(self._images.tobytes())

    def __repr__(self):
        return f"Permutation({self._images.tolist()})"


@dataclass(frozen=True)
class OrbitPartition:
    """Orbits sorted by minimal element, each starting at its minimum."""

    orbits: tuple
    index: tuple  # point -> orbit number, -1 off the domain

    def __len__(self):
        return len(self.orbits)

    def sizes(self):
        return tuple(len(o) for o in self.orbits)

    def orbit_of(self, x):
        return self.orbits[self.index[x]]


def orbits(p):
    """Orbit partition of a (possibly partial) permutation.

    >>> orbits(Permutation.from_cycles(3, [(0, 2, 1)])).orbits
    ((0, 2, 1),)
    """
    order, offsets = kernels.cycle_order(p.images)
    order = order.tolist()
    offsets = offsets.tolist()
    orbs = tuple(tuple(order[offsets[k]:offsets[k + 1]]) for k in range(len(offsets) - 1))
    index = [-1] * p.n
    for k, orb in enumerate(orbs):
        for x in orb:
            index[x] = k
    return OrbitPartition(orbs, tuple(index))


@dataclass(frozen=True, eq=False)
class HalfEdgeSystem:
    """A permutation ``sigma`` and an involution ``theta`` on ``n`` half-edges."""

    sigma: Permutation
    theta: Permutation

    def __post_init__(self):
        if self.sigma.n != self.theta.n:
            raise ValueError("sigma and theta act on different sets")
        if self.sigma.n < 1:
            raise ValueError("a half-edge system needs at least one half-edge")
        if self.sigma.is_partial() or self.theta.is_partial():
            raise ValueError("sigma and theta must be total")
        if not self.theta.is_involution():
            raise ValueError("theta is not an involution")

    @classmethod
    def from_cycles(cls, n, sigma, theta):
        return cls(Permutation.from_cycles(n, sigma), Permutation.from_cycles(n, theta))

    @property
    def n(self):
        return self.sigma.n

    def theta_fixed(self):
        return self.theta.images == np.arange(self.n)

    def relabel(self, mapping):
        return HalfEdgeSystem(self.sigma.relabel(mapping), self.theta.relabel(mapping))

    def component_labels(self):
        return kernels.component_labels(self.sigma.images, self.theta.images)

    def components(self):
        """Half-edge sets of the connected components, ordered by minimum."""
        labels = self.component_labels()
        comps = {}
        for x, lab in enumerate(labels.tolist()):
            comps.setdefault(lab, []).append(x)
        return [tuple(comps[k]) for k in sorted(comps)]

    def is_connected(self):
        return bool(np.all(self.component_labels() == 0))

    def restrict(self, points):
        """The subsystem on a union of components, relabelled to ``0 .. k-1``."""
        points = sorted(points)
        new = {x: i for i, x in enumerate(points)}
        try:
            s = [new[self.sigma(x)] for x in points]
            t = [new[self.theta(x)] for x in points]
        except KeyError:
            raise ValueError("points are not closed under sigma and theta") from None
        return HalfEdgeSystem(Permutation(s), Permutation(t))

    def __eq__(self, other):
        return (isinstance(other, HalfEdgeSystem)
                and self.sigma == other.sigma and self.theta == other.theta)

    def __hash__(self):
        return hash((self.sigma, self.theta))

    def __repr__(self):
        return (f"HalfEdgeSystem(n={self.n}, sigma={self.sigma.cycle_string()}, "
                f"theta={self.theta.cycle_string()})")


def phi(h):
    """The face permutation ``theta o sigma``."""
    return h.theta * h.sigma


def kappa(h):
    """Partial permutation on the theta-fixed half-edges.

    From a fixed half-edge, follow phi until the next fixed half-edge.
    Under the identification of fixed half-edges with transition vertices
    this is the forbidden-thread successor of a transition vertex.
    """
    marked = h.theta_fixed()
    hit = kernels.next_marked(phi(h).images, marked)
    return Permutation(np.where(marked, hit, -1), check=False)


def rho(h):
    """phi restricted to the phi-orbits that contain no theta-fixed half-edge."""
    f = phi(h)
    part = orbits(f)
    marked = h.theta_fixed()
    points = [x for orb in part.orbits if not any(marked[y] for y in orb) for x in orb]
    return f.restrict(points)


def face_split(h):
    """phi-orbits split into (boundary, punctured) by presence of a theta-fixed point."""
    marked = h.theta_fixed()
    boundary, punctured = [], []
    for orb in orbits(phi(h)).orbits:
        (boundary if any(marked[x] for x in orb) else punctured).append(orb)
    return boundary, punctured


def canonical_form(h):
    """Label-free key of ``h``: the lexicographically least relabelling, by
    brute force over all ``n!`` relabellings. Only for very small ``n``."""
    from itertools import permutations

    n = h.n
    s, t = h.sigma.images, h.theta.images
    best = None
    for perm in permutations(range(n)):
        m = np.array(perm)
        ss = np.empty(n, dtype=np.int64)
        tt = np.empty(n, dtype=np.int64)
        ss[m] = m[s]
        tt[m] = m[t]
        key = (tuple(ss.tolist()), tuple(tt.tolist()))
        if best is None or key < best:
            best = key
    return best


# ----------------------------------------------------------------------
# .hep text format
# ----------------------------------------------------------------------

_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text, n, lineno=0):
    """Parse ``(1 3 2)(4)`` over 1-based points into 0-based cycle tuples."""
    body = text.strip()
    if body in ("", "()"):
        return []
    rest = _CYCLE.sub("", body).strip()
    if rest:
        raise FormatError(f"unexpected text {rest!r} in cycle notation", lineno, 1)
    cycles = []
    for m in _CYCLE.finditer(body):
        items = m.group(1).replace(",", " ").split()
        if not items:
            continue
        try:
            pts = [int(x) - 1 for x in items]
        except ValueError:
            raise FormatError(f"non-integer point in {m.group(0)!r}", lineno, m.start() + 1) from None
        if any(not 0 <= p < n for p in pts):
            raise FormatError(f"point out of range 1..{n} in {m.group(0)!r}", lineno, m.start() + 1)
        cycles.append(tuple(pts))
    return cycles


def parse_hep(text):
    """Parse the ``.hep`` permutation format into a :class:`HalfEdgeSystem`."""
    n = None
    perms = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        if key == "halfedges":
            if n is not None:
                raise FormatError("duplicate 'halfedges' line", lineno, 1)
            try:
                n = int(rest)
            except ValueError:
                raise FormatError(f"bad half-edge count {rest.strip()!r}", lineno, len(key) + 2) from None
            if n < 1:
                raise FormatError("half-edge count must be at least 1", lineno, len(key) + 2)
        elif key in ("sigma", "theta"):
            if n is None:
                raise FormatError(f"'{key}' before 'halfedges'", lineno, 1)
            if key in perms:
                raise FormatError(f"duplicate '{key}' line", lineno, 1)
            try:
                perms[key] = Permutation.from_cycles(n, parse_cycles(rest, n, lineno))
            except ValueError as exc:
                raise FormatError(str(exc), lineno, len(key) + 2) from None
        else:
            raise FormatError(f"unknown keyword {key!r}", lineno, 1)
    if n is None:
        raise FormatError("missing 'halfedges' line", 0, 0)
    sigma = perms.get("sigma", Permutation.identity(n))
    theta = perms.get("theta", Permutation.identity(n))
    try:
        return HalfEdgeSystem(sigma, theta)
    except ValueError as exc:
        raise FormatError(str(exc), 0, 0) from None


def format_hep(h):
    return (f"halfedges {h.n}\n"
            f"sigma {h.sigma.cycle_string()}\n"
            f"theta {h.theta.cycle_string()}\n")
