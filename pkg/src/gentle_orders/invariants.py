"""Quiver-level derived invariants of a gentle order.

Orbit-based quantities (pc, profile, AG multisets) are computed from the
half-edge system and are defined for disconnected input as well. The
bicolorability parameter and the hereditary/ribbon classification need a
connected quiver.
"""

from collections import Counter, deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import NamedTuple


from .errors import DisconnectedInput, NotKappaStable, NotTransitionVertex
from .halfedge import HalfEdgeSystem, face_split, kappa, orbits, rho
from .presentation import TRANSITION, from_half_edges, to_half_edges, validate_gentle_order


class AGEntry(NamedTuple):
    m: int
    n: int


def _multiset(entries):
    return tuple(sorted(AGEntry(int(m), int(n)) for m, n in entries))


# ----------------------------------------------------------------------
# orbit-based invariants
# ----------------------------------------------------------------------

def permitted_cycles(h):
    """``(pc, profile)``: number of sigma-orbits and their sorted sizes."""
    sizes = orbits(h.sigma).sizes()
    return len(sizes), tuple(sorted(sizes))


def ag_first(h):
    """AG-invariants of the first type, one ``(m, n)`` per phi-orbit that meets
    a theta-fixed half-edge: ``m`` its size, ``n`` its number of fixed points."""
    fixed = h.theta_fixed()
    boundary, _ = face_split(h)
    return _multiset((len(f), int(sum(fixed[x] for x in f))) for f in boundary)


def ag_second(h):
    """AG-invariants of the second type, ``(|orbit|, 0)`` per rho-orbit."""
    return _multiset((len(o), 0) for o in orbits(rho(h)).orbits)


def kappa_orbits(h):
    """kappa-orbits as tuples of theta-fixed half-edges."""
    return orbits(kappa(h)).orbits


# ----------------------------------------------------------------------
# path-walking on the presentation
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class ForbiddenThread:
    start: str
    arrows: tuple  # path order: first arrow first
    end: str

    def __len__(self):
        return len(self.arrows)


def forbidden_threads(p, c=None):
    """Forbidden threads by walking relations: from every transition vertex
    take its out-arrow, then keep taking the arrow that composes to zero,
    until a transition vertex is reached."""
    if c is None:
        c = validate_gentle_order(p)
    tags = c.as_dict()
    out = []
    for j in c.transition:
        (beta,) = p.out_arrows(j)
        path = [beta]
        for _ in range(len(p.arrows)):
            t = p.arrow(path[-1]).target
            if tags[t] == TRANSITION:
                break
            (nxt,) = p.successors(path[-1], permitted=False)
            path.append(nxt)
        else:
            raise AssertionError(f"forbidden thread from {j!r} does not terminate")
        out.append(ForbiddenThread(j, tuple(path), p.arrow(path[-1]).target))
    return out


def forbidden_cycles(p, c=None):
    """Forbidden cycles by walking relations from arrows left over by the
    forbidden threads; each as a tuple of arrows starting at its first
    declared arrow."""
    on_thread = {a for f in forbidden_threads(p, c) for a in f.arrows}
    seen, out = set(), []
    for a in p.arrows:
        if a.name in on_thread or a.name in seen:
            continue
        cyc = [a.name]
        seen.add(a.name)
        while True:
            (nxt,) = p.successors(cyc[-1], permitted=False)
            if nxt == a.name:
                break
            cyc.append(nxt)
            seen.add(nxt)
        out.append(tuple(cyc))
    return out


def ag_first_from_threads(p, c=None):
    """AG-invariants of the first type by chasing kappa on transition vertices
    through explicit forbidden threads. Independent of the phi-orbit route."""
    threads = {f.start: f for f in forbidden_threads(p, c)}
    seen, entries = set(), []
    for j in threads:
        if j in seen:
            continue
        m = n = 0
        v = j
        while True:
            seen.add(v)
            m += len(threads[v])
            n += 1
            v = threads[v].end
            if v == j:
                break
        entries.append((m, n))
    return _multiset(entries)


def bicolorability(p, c=None):
    """``(bc, coloring)``; the coloring maps arrows to 1/2 and is ``None``
    when ``bc == 0``. Needs a connected quiver.

    Colours are propagated over composable pairs: equal across a permitted
    composite, different across a relation. A transition vertex blocks
    bicolorability outright: it stands for a deleted arrow pair whose
    relation pattern no colouring can honour (on the truncated graph it is
    a truncated edge, which pins the kernel of the incidence matrix to zero).
    """
    comps = p.components()
    if len(comps) != 1:
        raise DisconnectedInput(len(comps), "bicolorability")
    if c is None:
        c = validate_gentle_order(p)
    if c.transition:
        return 0, None
    # same colour across a permitted composite, different across a relation
    nbrs = {a.name: [] for a in p.arrows}
    for a in p.arrows:
        for b in p.out_arrows(a.target):
            diff = p.is_relation(b, a.name)
            nbrs[a.name].append((b, diff))
            nbrs[b].append((a.name, diff))
    colour = {}
    for a in p.arrows:
        if a.name in colour:
            continue
        colour[a.name] = 1
        queue = deque([a.name])
        while queue:
            x = queue.popleft()
            for y, diff in nbrs[x]:
                want = 3 - colour[x] if diff else colour[x]
                if y not in colour:
                    colour[y] = want
                    queue.append(y)
                elif colour[y] != want:
                    return 0, None
    return 1, colour


# ----------------------------------------------------------------------
# classification
# ----------------------------------------------------------------------

HEREDITARY = "hereditary"
RIBBON = "ribbon"
GENERAL = "general"


@dataclass(frozen=True)
class Classification:
    tag: str
    witness: object

    def __str__(self):
        return self.tag


def _require_connected(h, what):
    if not h.is_connected():
        raise DisconnectedInput(len(h.components()), what)


def hereditary_routes(h):
    """Three independent hereditary tests on a connected system: theta is the
    identity; some phi-route AG entry has m == n; some thread-route AG entry
    has m == n."""
    by_theta = h.theta.is_identity()
    by_faces = any(e.m == e.n for e in ag_first(h))
    by_threads = any(e.m == e.n for e in ag_first_from_threads(from_half_edges(h)))
    return by_theta, by_faces, by_threads


def classify(h):
    _require_connected(h, "classify")
    routes = hereditary_routes(h)
    if len(set(routes)) != 1:
        raise AssertionError(f"hereditary tests disagree: {routes}")
    n_fixed = int(h.theta_fixed().sum())
    if routes[0]:
        entry = next(e for e in ag_first(h) if e.m == e.n)
        return Classification(HEREDITARY, entry)
    if n_fixed == 0:
        return Classification(RIBBON, {"theta_fixed": 0, "theta_moved": h.n})
    return Classification(GENERAL, {"theta_fixed": n_fixed, "theta_moved": h.n - n_fixed})


# ----------------------------------------------------------------------
# signs, Nakayama data, resolutions, ideals
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class SignInvolution:
    sgn: dict
    xi: dict  # arrow -> (coefficient, arrow)

    def apply(self, signed):
        coeff, a = signed
        c, b = self.xi[a]
        return coeff * c, b


def sign_involution(p, char2=False, c=None):
    """Canonical signs: at each vertex the first declared out-arrow gets +1,
    the second -1. In characteristic two every sign is +1."""
    if c is None:
        c = validate_gentle_order(p)
    h = to_half_edges(p, c)
    sgn = {}
    for v in p.vertices:
        for k, a in enumerate(p.out_arrows(v)):
            sgn[a] = 1 if (char2 or k == 0) else -1
    names = [a.name for a in p.arrows]
    xi = {a: (sgn[names[h.sigma(i)]] * sgn[a], a) for i, a in enumerate(names)}
    return SignInvolution(sgn, xi)


@dataclass(frozen=True)
class NakayamaData:
    vertex_tag: dict  # vertex -> "rad" | "id"
    arrow_sign: dict  # arrow -> +1 | -1


def nakayama_data(p, char2=False, c=None):
    """The Nakayama functor sends P_j to rad P_j at transition vertices and
    to P_j at crossing vertices, twisting arrows by xi."""
    if c is None:
        c = validate_gentle_order(p)
    xi = sign_involution(p, char2, c).xi
    tags = {v: ("rad" if t == TRANSITION else "id") for v, t in c.as_dict().items()}
    return NakayamaData(tags, {a: coeff for a, (coeff, _) in xi.items()})


@dataclass(frozen=True)
class SimpleResolution:
    vertex: str
    terms: tuple  # vertices of the projectives, highest degree first
    cy_dim: tuple


def simple_resolution(p, j, c=None):
    """Minimal projective resolution of the simple at a transition vertex,
    read off the forbidden thread leaving ``j``: P_{kappa(j)} -> ... -> P_j."""
    if c is None:
        c = validate_gentle_order(p)
    if j not in c.transition:
        raise NotTransitionVertex(j)
    threads = {f.start: f for f in forbidden_threads(p, c)}
    f = threads[j]
    terms = tuple(p.arrow(a).target for a in reversed(f.arrows)) + (j,)
    m = n = 0
    v = j
    while True:
        m += len(threads[v])
        n += 1
        v = threads[v].end
        if v == j:
            break
    return SimpleResolution(j, terms, (m, n))


@dataclass(frozen=True)
class IdealGenerators:
    idempotents: tuple
    arrows: tuple
    b: int


def _kappa_on_vertices(p, c):
    return {f.start: f.end for f in forbidden_threads(p, c)}


def kappa_stable_subsets(p, c=None, limit=1 << 12):
    """All kappa-stable subsets of transition vertices (unions of kappa-orbits)."""
    if c is None:
        c = validate_gentle_order(p)
    k = _kappa_on_vertices(p, c)
    orbs, seen = [], set()
    for j in c.transition:
        if j in seen:
            continue
        orb, v = [], j
        while v not in seen:
            seen.add(v)
            orb.append(v)
            v = k[v]
        orbs.append(tuple(orb))
    if 2 ** len(orbs) > limit:
        raise ValueError(f"{2 ** len(orbs)} kappa-stable subsets exceed the limit {limit}")
    out = []
    for r in range(len(orbs) + 1):
        for combo in combinations(orbs, r):
            out.append(frozenset(v for o in combo for v in o))
    return out


def ideal_generators(p, X, c=None):
    """Generators of the ideal I(X): idempotents off ``X`` and arrows leaving
    ``X``. Accepts a presentation or a half-edge system."""
    if isinstance(p, HalfEdgeSystem):
        p = from_half_edges(p)
    if c is None:
        c = validate_gentle_order(p)
    X = set(X)
    bad = X - set(c.transition)
    if bad:
        raise NotTransitionVertex(sorted(bad)[0])
    k = _kappa_on_vertices(p, c)
    for j in sorted(X, key=p.vertex_index.get):
        if k[j] not in X:
            raise NotKappaStable(j)
    b = len(ag_first_from_threads(p, c))
    return IdealGenerators(
        tuple(v for v in p.vertices if v not in X),
        tuple(a.name for a in p.arrows if a.source in X),
        b,
    )


# ----------------------------------------------------------------------
# bundle
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class InvariantBundle:
    pc: int
    bc: object  # 0/1, None when disconnected
    ag1: tuple
    ag2: tuple
    counts: dict
    profile: tuple
    cls: object  # Classification, None when disconnected
    components: int = 1
    coloring: dict = field(default=None, compare=False)

    @property
    def hereditary(self):
        return self.cls is not None and self.cls.tag == HEREDITARY

    @property
    def ribbon(self):
        return self.cls is not None and self.cls.tag == RIBBON

    def to_json(self):
        return {
            "pc": self.pc,
            "bc": self.bc,
            "ag1": [list(e) for e in self.ag1],
            "ag2": [list(e) for e in self.ag2],
            "counts": dict(self.counts),
            "profile": list(self.profile),
            "class": None if self.cls is None else self.cls.tag,
        }


def counts(p, c, h):
    fixed = h.theta_fixed()
    boundary, punctured = face_split(h)
    return {
        "q0": len(p.vertices),
        "q1": len(p.arrows),
        "q0t": len(c.transition),
        "q0c": len(c.crossing),
        "q1ft": sum(len(f) for f in boundary),
        "q1fc": sum(len(f) for f in punctured),
        "theta_fixed": int(fixed.sum()),
    }


def compute_invariants(p, c=None, h=None):
    if c is None:
        c = validate_gentle_order(p)
    if h is None:
        h = to_half_edges(p, c)
    pc, profile = permitted_cycles(h)
    n_comp = len(p.components())
    if n_comp == 1:
        bc, colouring = bicolorability(p, c)
        cls = classify(h)
    else:
        bc, colouring, cls = None, None, None
    cnt = counts(p, c, h)
    del cnt["theta_fixed"]
    return InvariantBundle(pc, bc, ag_first(h), ag_second(h), cnt, profile, cls, n_comp, colouring)


def ag_census(entries):
    """Multiplicity view of an AG multiset, e.g. ``{(2, 1): 3}``."""
    return dict(Counter(entries))
