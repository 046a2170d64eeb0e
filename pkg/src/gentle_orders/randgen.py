"""Random gentle orders, sampled as labelled (sigma, theta) pairs.

Sampling is uniform over labelled pairs for a fixed theta cycle type, not
over isomorphism classes.
"""

from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .errors import GenerationFailed
from .halfedge import HalfEdgeSystem, Permutation


@dataclass(frozen=True)
class GenConfig:
    n: int
    seed: int = 0
    connected: bool = False
    transition_fraction: float = 0.5
    max_attempts: int = 10_000

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one half-edge")
        if not 0.0 <= self.transition_fraction <= 1.0:
            raise ValueError("transition_fraction must lie in [0, 1]")


def random_involution(rng, n, fixed_fraction):
    """Each point is fixed with probability ``fixed_fraction``; the remaining
    points are paired uniformly. An odd leftover point is fixed as well."""
    theta = np.arange(n)
    moved = np.nonzero(rng.random(n) >= fixed_fraction)[0]
    moved = rng.permutation(moved)
    for a, b in zip(moved[0::2], moved[1::2]):
        theta[a], theta[b] = b, a
    return theta


def sample(rng, n, transition_fraction=0.5):
    sigma = rng.permutation(n)
    theta = random_involution(rng, n, transition_fraction)
    return HalfEdgeSystem(Permutation(sigma, check=False), Permutation(theta, check=False))


def generate(cfg):
    """Deterministic in ``cfg``; rejection-samples until connected if asked."""
    rng = np.random.default_rng(cfg.seed)
    for _ in range(cfg.max_attempts):
        h = sample(rng, cfg.n, cfg.transition_fraction)
        if not cfg.connected or h.is_connected():
            return h
    raise GenerationFailed(f"no connected sample in {cfg.max_attempts} attempts (n={cfg.n})")


def random_relabeling(rng, h):
    return h.relabel(rng.permutation(h.n))


def all_systems(n, up_to_theta_conjugacy=True):
    """Every (sigma, theta) on ``n`` points. With ``up_to_theta_conjugacy``,
    theta runs over one representative ``(0 1)(2 3)...`` per cycle type, which
    still meets every isomorphism class."""
    if up_to_theta_conjugacy:
        thetas = []
        for k in range(n // 2 + 1):
            t = list(range(n))
            for i in range(k):
                t[2 * i], t[2 * i + 1] = 2 * i + 1, 2 * i
            thetas.append(Permutation(t, check=False))
    else:
        thetas = [Permutation(t, check=False) for t in _involutions(n)]
    for theta in thetas:
        for s in permutations(range(n)):
            yield HalfEdgeSystem(Permutation(s, check=False), theta)


def _involutions(n):
    def rec(rest):
        if not rest:
            yield {}
            return
        a, tail = rest[0], rest[1:]
        for sub in rec(tail):
            yield {a: a, **sub}
        for i, b in enumerate(tail):
            for sub in rec(tail[:i] + tail[i + 1:]):
                yield {a: b, b: a, **sub}

    for m in rec(list(range(n))):
        yield [m[i] for i in range(n)]


def system_from_graph(n_vertices, edges, rng=None):
    """Realise a truncated graph as a half-edge system.

    ``edges`` are vertex tuples: ``(u, v)`` ordinary, ``(v, v)`` loop, ``(v,)``
    truncated. Each edge end becomes a half-edge at its vertex, theta pairs
    the two ends of a glued edge, and sigma cycles the half-edges at every
    vertex (in random order when ``rng`` is given). Every graph vertex needs
    at least one edge end.
    """
    at = [[] for _ in range(n_vertices)]
    theta = []
    for e in edges:
        ids = []
        for v in e:
            ids.append(len(theta))
            at[v].append(len(theta))
            theta.append(len(theta))
        if len(ids) == 2:
            theta[ids[0]], theta[ids[1]] = ids[1], ids[0]
    sigma = list(range(len(theta)))
    for v, hs in enumerate(at):
        if not hs:
            raise ValueError(f"graph vertex {v} has no edge")
        if rng is not None:
            hs = list(rng.permutation(hs))
        for i, x in enumerate(hs):
            sigma[x] = hs[(i + 1) % len(hs)]
    return HalfEdgeSystem(Permutation(sigma), Permutation(theta))


def random_tree(rng, p):
    """Uniform labelled tree on ``p`` vertices (Pruefer decoding)."""
    if p == 1:
        return []
    if p == 2:
        return [(0, 1)]
    seq = rng.integers(0, p, size=p - 2).tolist()
    degree = [1] * p
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(p) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [v for v in range(p) if degree[v] == 1]
    edges.append((u, v))
    return edges


def hereditary_cycle(ell):
    """The equioriented cycle with ``ell`` vertices: sigma an ``ell``-cycle,
    theta the identity."""
    return HalfEdgeSystem(Permutation([(i + 1) % ell for i in range(ell)]), Permutation.identity(ell))
