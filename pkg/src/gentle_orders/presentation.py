"""Gentle quivers with relations: parsing, validation, and conversion to and
from the half-edge form.

The ``.gq`` format is line oriented, ``#`` starts a comment::

    vertex <id>
    arrow <id> <source> <target>
    rel <beta> <alpha>        # the path "alpha then beta" is zero

Relations are monomial and of length two only.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

import numpy as np

from .errors import FormatError, NotGentle, NotGentleOrder, PresentationError
from .halfedge import HalfEdgeSystem, Permutation, orbits

TRANSITION = "transition"
CROSSING = "crossing"


class Arrow(NamedTuple):
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class GentlePresentation:
    """A quiver with monomial length-two relations.

    ``relations`` holds pairs ``(beta, alpha)`` of arrow names with
    ``source(beta) == target(alpha)``, meaning ``beta . alpha`` is zero.
    Vertex and arrow order is the order of declaration.
    """

    vertices: tuple
    arrows: tuple
    relations: frozenset

    def __post_init__(self):
        if not self.vertices:
            raise PresentationError("a gentle order needs at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise PresentationError("duplicate vertex identifier")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise PresentationError("duplicate arrow identifier")
        known = set(self.vertices)
        for a in self.arrows:
            for v in (a.source, a.target):
                if v not in known:
                    raise PresentationError(f"arrow {a.name!r}: unknown vertex {v!r}")
        by_name = {a.name: a for a in self.arrows}
        for beta, alpha in self.relations:
            for x in (beta, alpha):
                if x not in by_name:
                    raise PresentationError(f"relation {beta} {alpha}: unknown arrow {x!r}")
            if by_name[beta].source != by_name[alpha].target:
                raise PresentationError(f"relation {beta} {alpha} is not composable")

    @cached_property
    def arrow_index(self):
        return {a.name: i for i, a in enumerate(self.arrows)}

    @cached_property
    def vertex_index(self):
        return {v: i for i, v in enumerate(self.vertices)}

    def arrow(self, name):
        return self.arrows[self.arrow_index[name]]

    @cached_property
    def _adjacency(self):
        outs = {v: [] for v in self.vertices}
        ins = {v: [] for v in self.vertices}
        for a in self.arrows:
            outs[a.source].append(a.name)
            ins[a.target].append(a.name)
        return outs, ins

    def out_arrows(self, v):
        return list(self._adjacency[0][v])

    def in_arrows(self, v):
        return list(self._adjacency[1][v])

    def is_relation(self, beta, alpha):
        return (beta, alpha) in self.relations

    def successors(self, alpha, permitted=True):
        """Arrows ``beta`` composable after ``alpha`` whose composite is (not)
        a relation."""
        t = self.arrow(alpha).target
        return [b for b in self.out_arrows(t) if ((b, alpha) in self.relations) != permitted]

    def predecessors(self, beta, permitted=True):
        s = self.arrow(beta).source
        return [a for a in self.in_arrows(s) if ((beta, a) in self.relations) != permitted]

    def components(self):
        """Vertex sets of the connected components of the underlying graph."""
        parent = {v: v for v in self.vertices}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for a in self.arrows:
            ra, rb = find(a.source), find(a.target)
            if ra != rb:
                parent[max(ra, rb, key=self.vertex_index.get)] = min(ra, rb, key=self.vertex_index.get)
        groups = {}
        for v in self.vertices:
            groups.setdefault(find(v), []).append(v)
        return list(groups.values())

    def is_connected(self):
        return len(self.components()) == 1

    def relabel(self, vertex_map, arrow_map, vertex_order=None, arrow_order=None):
        """Rename vertices and arrows; optionally reorder declarations."""
        vs = vertex_order if vertex_order is not None else self.vertices
        ars = arrow_order if arrow_order is not None else [a.name for a in self.arrows]
        return GentlePresentation(
            tuple(vertex_map[v] for v in vs),
            tuple(Arrow(arrow_map[n], vertex_map[self.arrow(n).source], vertex_map[self.arrow(n).target])
                  for n in ars),
            frozenset((arrow_map[b], arrow_map[a]) for b, a in self.relations),
        )


def parse_presentation(text):
    """Parse ``.gq`` text. Gentleness is not checked here.

    >>> p = parse_presentation("vertex 1\\narrow a 1 1\\n")
    >>> len(p.vertices), len(p.arrows), len(p.relations)
    (1, 1, 0)
    """
    vertices, arrows, rels = [], [], []
    seen_v, seen_a = {}, {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        toks = line.split()
        if not toks:
            continue
        col = line.index(toks[0]) + 1
        kw, args = toks[0], toks[1:]
        arity = {"vertex": 1, "arrow": 3, "rel": 2}.get(kw)
        if arity is None:
            raise FormatError(f"unknown keyword {kw!r}", lineno, col)
        if len(args) != arity:
            raise FormatError(f"'{kw}' takes {arity} argument(s), got {len(args)}", lineno, col)
        if kw == "vertex":
            if args[0] in seen_v:
                raise PresentationError(f"duplicate vertex {args[0]!r}", lineno)
            seen_v[args[0]] = lineno
            vertices.append(args[0])
        elif kw == "arrow":
            name, s, t = args
            if name in seen_a:
                raise PresentationError(f"duplicate arrow {name!r}", lineno)
            for v in (s, t):
                if v not in seen_v:
                    raise PresentationError(f"unknown vertex {v!r}", lineno)
            seen_a[name] = (s, t)
            arrows.append(Arrow(name, s, t))
        else:
            beta, alpha = args
            for x in (beta, alpha):
                if x not in seen_a:
                    raise PresentationError(f"unknown arrow {x!r}", lineno)
            if seen_a[beta][0] != seen_a[alpha][1]:
                raise PresentationError(
                    f"relation {beta} {alpha}: source of {beta} is not the target of {alpha}", lineno)
            rels.append((beta, alpha))
    if not vertices:
        raise PresentationError("empty quiver: no vertices declared")
    return GentlePresentation(tuple(vertices), tuple(arrows), frozenset(rels))


def format_presentation(p):
    lines = [f"vertex {v}" for v in p.vertices]
    lines += [f"arrow {a.name} {a.source} {a.target}" for a in p.arrows]
    idx = p.arrow_index
    for beta, alpha in sorted(p.relations, key=lambda r: (idx[r[1]], idx[r[0]])):
        lines.append(f"rel {beta} {alpha}")
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------
# validation
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class VertexClass:
    """Tag of every vertex, in declaration order."""

    vertices: tuple
    tags: tuple

    def __getitem__(self, v):
        return self.tags[self.vertices.index(v)]

    def as_dict(self):
        return dict(zip(self.vertices, self.tags))

    @property
    def transition(self):
        return tuple(v for v, t in zip(self.vertices, self.tags) if t == TRANSITION)

    @property
    def crossing(self):
        return tuple(v for v, t in zip(self.vertices, self.tags) if t == CROSSING)


def check_gentle(p):
    """Raise :class:`NotGentle` at the first vertex violating the local rules."""
    for v in p.vertices:
        ins, outs = p.in_arrows(v), p.out_arrows(v)
        if len(ins) > 2:
            raise NotGentle(v, f"{len(ins)} incoming arrows")
        if len(outs) > 2:
            raise NotGentle(v, f"{len(outs)} outgoing arrows")
        for a in ins:
            if len(p.successors(a, permitted=True)) > 1:
                raise NotGentle(v, f"two arrows compose with {a} outside the relations")
            if len(p.successors(a, permitted=False)) > 1:
                raise NotGentle(v, f"two relations start with {a}")
        for b in outs:
            if len(p.predecessors(b, permitted=True)) > 1:
                raise NotGentle(v, f"two arrows compose into {b} outside the relations")
            if len(p.predecessors(b, permitted=False)) > 1:
                raise NotGentle(v, f"two relations end with {b}")


def classify_vertex(p, v):
    """``transition``, ``crossing`` or ``None`` from the local pattern."""
    ins, outs = p.in_arrows(v), p.out_arrows(v)
    if len(ins) == 1 and len(outs) == 1:
        return TRANSITION if not p.is_relation(outs[0], ins[0]) else None
    if len(ins) == 2 and len(outs) == 2:
        a1, a2 = ins
        b1, b2 = outs
        r = [[p.is_relation(b, a) for a in ins] for b in outs]
        # diagonal pattern, up to renaming the outgoing pair
        if (r[0][0] and r[1][1] and not r[0][1] and not r[1][0]) or \
           (r[0][1] and r[1][0] and not r[0][0] and not r[1][1]):
            return CROSSING
    return None


def _permitted_chains(p):
    """Split arrows along the permitted-successor partial injection into
    (cycles, threads); each is a tuple of arrow names in path order."""
    succ = {}
    has_pred = set()
    for a in p.arrows:
        s = p.successors(a.name, permitted=True)
        if s:
            succ[a.name] = s[0]
            has_pred.add(s[0])
    threads, used = [], set()
    for a in p.arrows:
        if a.name in has_pred:
            continue
        chain = [a.name]
        while chain[-1] in succ:
            chain.append(succ[chain[-1]])
        used.update(chain)
        threads.append(tuple(chain))
    cycles = []
    for a in p.arrows:
        if a.name in used:
            continue
        cyc = [a.name]
        while succ[cyc[-1]] != a.name:
            cyc.append(succ[cyc[-1]])
        used.update(cyc)
        cycles.append(tuple(cyc))
    return cycles, threads


def permitted_threads(p):
    """All permitted threads: arrow chains plus stationary threads at
    isolated vertices (as ``(vertex, ())``)."""
    _, threads = _permitted_chains(p)
    out = [(p.arrow(t[0]).source, t) for t in threads]
    touched = {x for a in p.arrows for x in (a.source, a.target)}
    out += [(v, ()) for v in p.vertices if v not in touched]
    return out


def validate_gentle_order(p):
    """Check that ``p`` is a gentle order and tag its vertices.

    Three characterisations are evaluated independently (local vertex types,
    absence of permitted threads, every arrow on a permitted cycle); they must
    agree, otherwise ``AssertionError`` signals an internal inconsistency.
    """
    check_gentle(p)
    tags = tuple(classify_vertex(p, v) for v in p.vertices)
    cond_local = all(t is not None for t in tags)
    threads = permitted_threads(p)
    cond_threads = not threads
    cycles, _ = _permitted_chains(p)
    on_cycle = {a for c in cycles for a in c}
    cond_cycles = all(a.name in on_cycle for a in p.arrows)
    # an isolated vertex is a stationary permitted thread that the arrow
    # condition cannot see; compare that condition only without them
    isolated = any(not t for _, t in threads)
    if cond_local != cond_threads or (not isolated and cond_cycles != cond_local):
        raise AssertionError(
            f"gentle-order conditions disagree: local={cond_local} "
            f"no-threads={cond_threads} cycles={cond_cycles}")
    if not cond_local:
        vertex, thread = threads[0]
        raise NotGentleOrder(thread, vertex)
    return VertexClass(p.vertices, tags)


# ----------------------------------------------------------------------
# half-edge conversion
# ----------------------------------------------------------------------

def to_half_edges(p, c=None):
    """The pair (sigma, theta) on arrows, half-edge ``i`` being arrow ``i``."""
    if c is None:
        c = validate_gentle_order(p)
    idx = p.arrow_index
    cls = c.as_dict()
    sigma = np.empty(len(p.arrows), dtype=np.int64)
    theta = np.empty(len(p.arrows), dtype=np.int64)
    for i, a in enumerate(p.arrows):
        sigma[i] = idx[p.successors(a.name, permitted=True)[0]]
        if cls[a.source] == CROSSING:
            other = [b for b in p.out_arrows(a.source) if b != a.name]
            theta[i] = idx[other[0]]
        else:
            theta[i] = i
    return HalfEdgeSystem(Permutation(sigma), Permutation(theta))


def from_half_edges(h):
    """Gentle order with arrows ``1..n`` (half-edges) and vertices ``v1, v2, ...``
    (theta-orbits by minimal half-edge)."""
    part = orbits(h.theta)
    vname = [f"v{k + 1}" for k in range(len(part))]
    src = [vname[part.index[x]] for x in range(h.n)]
    arrows = tuple(Arrow(str(x + 1), src[x], src[h.sigma(x)]) for x in range(h.n))
    rels = set()
    for alpha in range(h.n):
        nxt = h.sigma(alpha)
        for beta in part.orbit_of(nxt):
            if beta != nxt:
                rels.add((str(beta + 1), str(alpha + 1)))
    return GentlePresentation(tuple(vname), arrows, frozenset(rels))


def load(text, fmt=None):
    """Parse ``.gq`` or ``.hep`` text, sniffing the format when not given.
    Returns ``(presentation, system)``; the system is ``None`` for a
    presentation that has not been validated."""
    from .halfedge import parse_hep

    if fmt is None:
        first = next((ln.split("#", 1)[0].split() for ln in text.splitlines()
                      if ln.split("#", 1)[0].strip()), [""])
        fmt = "hep" if first and first[0] == "halfedges" else "gq"
    if fmt == "hep":
        h = parse_hep(text)
        return from_half_edges(h), h
    return parse_presentation(text), None
