"""Truncated graph of a gentle order, its incidence and Cartan matrices, and
the closed-form rank/determinant against exact elimination."""

from dataclasses import dataclass
from functools import cached_property

from .errors import InstanceTooLarge
from .halfedge import orbits
from .intmat import IntegerMatrix, bareiss_det, bareiss_rank
from .presentation import to_half_edges, validate_gentle_order

ORDINARY = "ordinary"
LOOP = "loop"
TRUNCATED = "truncated"

PATH_ORACLE_MAX_ARROWS = 16


@dataclass(frozen=True)
class TruncatedGraph:
    """``mu[e][v]`` is the multiplicity of edge ``e`` at vertex ``v``; every
    row sums to 1 (truncated edge) or 2 (ordinary edge or loop)."""

    n_vertices: int
    mu: tuple
    edge_names: tuple = None

    def __post_init__(self):
        for e, row in enumerate(self.mu):
            if len(row) != self.n_vertices or any(x < 0 for x in row):
                raise ValueError(f"bad multiplicity row for edge {e}")
            if sum(row) not in (1, 2):
                raise ValueError(f"edge {e} has total multiplicity {sum(row)}")

    @classmethod
    def from_edges(cls, n_vertices, edges):
        """Edges as vertex tuples: ``(u, v)`` ordinary, ``(v, v)`` loop, ``(v,)`` truncated."""
        mu = []
        for e in edges:
            row = [0] * n_vertices
            for v in e:
                row[v] += 1
            mu.append(tuple(row))
        return cls(n_vertices, tuple(mu))

    @property
    def n_edges(self):
        return len(self.mu)

    def ends(self, e):
        return [v for v, k in enumerate(self.mu[e]) for _ in range(k)]

    def kind(self, e):
        row = self.mu[e]
        if sum(row) == 1:
            return TRUNCATED
        return LOOP if 2 in row else ORDINARY

    def census(self):
        out = {ORDINARY: 0, LOOP: 0, TRUNCATED: 0}
        for e in range(self.n_edges):
            out[self.kind(e)] += 1
        return out

    @cached_property
    def components(self):
        """``(vertices, edges)`` per connected component, by smallest vertex."""
        parent = list(range(self.n_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in range(self.n_edges):
            ends = self.ends(e)
            if len(ends) == 2:
                a, b = find(ends[0]), find(ends[1])
                if a != b:
                    parent[max(a, b)] = min(a, b)
        comps = {}
        for v in range(self.n_vertices):
            comps.setdefault(find(v), ([], []))[0].append(v)
        for e in range(self.n_edges):
            comps[find(self.ends(e)[0])][1].append(e)
        return [(tuple(vs), tuple(es)) for _, (vs, es) in sorted(comps.items())]

    def is_connected(self):
        return len(self.components) <= 1

    def is_bipartite(self, comp):
        vs, es = comp
        side = {vs[0]: 0}
        adj = {v: [] for v in vs}
        for e in es:
            ends = self.ends(e)
            if len(ends) == 2:
                adj[ends[0]].append(ends[1])
                adj[ends[1]].append(ends[0])
        stack = [vs[0]]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in side:
                    side[y] = 1 - side[x]
                    stack.append(y)
                elif side[y] == side[x]:
                    return False
        return True

    def component_case(self, comp):
        """Which closed-form determinant case a component falls in:
        ``tree``, ``odd_unicyclic``, ``tree_one_truncated`` or ``other``."""
        vs, es = comp
        t = sum(1 for e in es if self.kind(e) == TRUNCATED)
        glued = len(es) - t
        p = len(vs)
        if t == 0 and glued == p - 1:
            return "tree"
        if t == 1 and glued == p - 1:
            return "tree_one_truncated"
        if t == 0 and glued == p and not self.is_bipartite(comp):
            return "odd_unicyclic"
        return "other"

    def bc(self):
        """Number of components that are bipartite with no truncated edge."""
        return sum(
            1 for comp in self.components
            if not any(self.kind(e) == TRUNCATED for e in comp[1]) and self.is_bipartite(comp)
        )


def truncated_graph(p, c=None, h=None):
    """One graph vertex per sigma-orbit (permitted cycle), one edge per quiver
    vertex; the multiplicity is the number of out-arrows of the quiver vertex
    lying in that sigma-orbit."""
    if c is None:
        c = validate_gentle_order(p)
    if h is None:
        h = to_half_edges(p, c)
    part = orbits(h.sigma)
    idx = p.arrow_index
    mu = []
    for v in p.vertices:
        row = [0] * len(part)
        for a in p.out_arrows(v):
            row[part.index[idx[a]]] += 1
        mu.append(tuple(row))
    return TruncatedGraph(len(part), tuple(mu), tuple(p.vertices))


def incidence_matrix(g):
    return IntegerMatrix(g.mu, g.n_vertices)


def cartan_matrix(g):
    b = incidence_matrix(g)
    return b @ b.T


def rank_formula(g):
    return g.n_vertices - g.bc()


def rank_oracle(m):
    return bareiss_rank(m.rows())


def det_oracle(m):
    return bareiss_det(m.rows())


_CASE_DET = {"tree": None, "odd_unicyclic": 4, "tree_one_truncated": 1, "other": 0}


def det_formula(g):
    """det of the Cartan matrix from the component cases, multiplied over
    components (the matrix is block diagonal)."""
    out = 1
    for comp in g.components:
        case = g.component_case(comp)
        val = len(comp[1]) + 1 if case == "tree" else _CASE_DET[case]
        out *= val
    return out


def det_incidence_formula(g):
    """|det B| for a square incidence matrix: 2 per odd-unicyclic component,
    1 per tree with one truncated edge, 0 if any component is not square or
    falls in neither case."""
    if g.n_edges != g.n_vertices:
        raise ValueError("incidence matrix is not square")
    out = 1
    for comp in g.components:
        case = g.component_case(comp)
        out *= {"odd_unicyclic": 2, "tree_one_truncated": 1}.get(case, 0)
    return out


def cartan_path_oracle(p, max_arrows=PATH_ORACLE_MAX_ARROWS):
    """Cartan matrix by exhaustive enumeration of nonzero paths.

    Entry ``(i, j)`` counts paths from ``j`` to ``i`` of length at least one
    that never compose two arrows into a relation and use no arrow twice.
    Works straight off the relations, without sigma.
    """
    if len(p.arrows) > max_arrows:
        raise InstanceTooLarge(f"{len(p.arrows)} arrows exceed the path-oracle bound {max_arrows}")
    vi = p.vertex_index
    n = len(p.vertices)
    counts = [[0] * n for _ in range(n)]

    def extend(start, path, used):
        last = path[-1]
        end = p.arrow(last).target
        counts[vi[end]][vi[start]] += 1
        for b in p.out_arrows(end):
            if b not in used and not p.is_relation(b, last):
                used.add(b)
                path.append(b)
                extend(start, path, used)
                path.pop()
                used.discard(b)

    for a in p.arrows:
        extend(a.source, [a.name], {a.name})
    return IntegerMatrix(counts, n)


@dataclass(frozen=True)
class CartanData:
    graph: TruncatedGraph
    incidence: IntegerMatrix
    cartan: IntegerMatrix
    rank: int
    det: int
    rank_formula: int
    det_formula: int
    bc_graph: int

    def to_json(self):
        return {
            "incidence": self.incidence.rows(),
            "cartan": self.cartan.rows(),
            "rank": self.rank,
            "det": self.det,
            "rank_formula": self.rank_formula,
            "det_formula": self.det_formula,
            "bc_graph": self.bc_graph,
            "graph": {
                "vertices": self.graph.n_vertices,
                "edges": self.graph.n_edges,
                "census": self.graph.census(),
            },
        }


def cartan_data(p, c=None, h=None):
    g = truncated_graph(p, c, h)
    b = incidence_matrix(g)
    cm = b @ b.T
    return CartanData(g, b, cm, rank_oracle(cm), det_oracle(cm), rank_formula(g), det_formula(g), g.bc())
