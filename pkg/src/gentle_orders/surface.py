"""Truncated ribbon graph of a half-edge system and the numeric profile of
its surface.

Genus convention: every truncated edge ends at a marked point on a boundary
component, which contributes one vertex and one edge to a cell structure and
so cancels out. The Euler characteristic of the closed-up surface is therefore

    2 - 2g = |V| - |E_glued| + |F|

This agrees with ``|V| - |E| + |F|`` on ribbon graphs (no truncated edges) and
is always even on a connected system, whereas counting truncated edges in
``|E|`` gives odd values (e.g. the hereditary cycle with an odd number of
vertices).
"""

from dataclasses import dataclass

from .errors import DisconnectedInput
from .halfedge import OrbitPartition, orbits, phi
from .cartan import LOOP, ORDINARY, TRUNCATED

BOUNDARY = "boundary"
PUNCTURED = "punctured"


@dataclass(frozen=True)
class RibbonData:
    n: int
    vertices: OrbitPartition  # sigma-orbits
    edges: OrbitPartition  # theta-orbits
    faces: OrbitPartition  # phi-orbits
    edge_kinds: tuple
    face_kinds: tuple

    def census(self):
        out = {ORDINARY: 0, LOOP: 0, TRUNCATED: 0}
        for k in self.edge_kinds:
            out[k] += 1
        return out

    @property
    def n_truncated(self):
        return sum(1 for k in self.edge_kinds if k == TRUNCATED)

    @property
    def n_glued(self):
        return len(self.edge_kinds) - self.n_truncated

    @property
    def n_boundary(self):
        return sum(1 for k in self.face_kinds if k == BOUNDARY)

    @property
    def n_punctured(self):
        return len(self.face_kinds) - self.n_boundary

    def face_sizes(self, kind):
        return [len(f) for f, k in zip(self.faces.orbits, self.face_kinds) if k == kind]


def ribbon_data(h):
    v = orbits(h.sigma)
    e = orbits(h.theta)
    f = orbits(phi(h))
    edge_kinds = []
    for orb in e.orbits:
        if len(orb) == 1:
            edge_kinds.append(TRUNCATED)
        elif v.index[orb[0]] == v.index[orb[1]]:
            edge_kinds.append(LOOP)
        else:
            edge_kinds.append(ORDINARY)
    fixed = h.theta_fixed()
    face_kinds = tuple(BOUNDARY if any(fixed[x] for x in orb) else PUNCTURED for orb in f.orbits)
    return RibbonData(h.n, v, e, f, tuple(edge_kinds), face_kinds)


@dataclass(frozen=True)
class SurfaceProfile:
    genus: int
    euler: int
    boundary_faces: int
    punctured_faces: int
    edge_census: dict

    def key(self):
        return (self.genus, self.boundary_faces, self.punctured_faces)

    def to_json(self):
        return {
            "genus": self.genus,
            "euler": self.euler,
            "boundary_faces": self.boundary_faces,
            "punctured_faces": self.punctured_faces,
            "edge_census": dict(self.edge_census),
        }


def euler_characteristic(r):
    return len(r.vertices) - r.n_glued + len(r.faces)


def surface_profile(r, h=None):
    """Genus and face counts of a connected system; pass ``h`` to have
    connectivity checked."""
    if h is not None and not h.is_connected():
        raise DisconnectedInput(len(h.components()), "surface_profile")
    chi = euler_characteristic(r)
    if chi % 2 or chi > 2:
        raise AssertionError(f"Euler characteristic {chi} is not 2 - 2g for any g >= 0")
    return SurfaceProfile((2 - chi) // 2, chi, r.n_boundary, r.n_punctured, r.census())


def surface_profiles(h):
    """One profile per connected component."""
    return [surface_profile(ribbon_data(h.restrict(comp))) for comp in h.components()]


@dataclass(frozen=True)
class DictionaryRow:
    row: str
    left: object
    right: object

    @property
    def ok(self):
        return self.left == self.right


def dictionary_row_check(p, h, bundle, cartan, r, c=None):
    """Quiver counts against ribbon-graph counts, one row per identity.
    Failures are reported, never raised."""
    from .invariants import ag_first_from_threads, forbidden_cycles, forbidden_threads

    threads = forbidden_threads(p, c)
    fcycles = forbidden_cycles(p, c)
    cnt = bundle.counts
    rows = [
        DictionaryRow("|Q1| = |H|", cnt["q1"], r.n),
        DictionaryRow("|Q0| = |E|", cnt["q0"], len(r.edges)),
        DictionaryRow("|Q0t| = |E_t|", cnt["q0t"], r.n_truncated),
        DictionaryRow("|Q0c| = |E_g|", cnt["q0c"], r.n_glued),
        DictionaryRow("|Q0t/kappa| = |F_b|", len(ag_first_from_threads(p, c)), r.n_boundary),
        DictionaryRow("|Q1fc/rho| = |F_p|", len(fcycles), r.n_punctured),
        DictionaryRow("|Q1ft| = sum |f|, f in F_b",
                      sum(len(f) for f in threads), sum(r.face_sizes(BOUNDARY))),
        DictionaryRow("|Q1fc| = sum |f|, f in F_p",
                      sum(len(f) for f in fcycles), sum(r.face_sizes(PUNCTURED))),
        DictionaryRow("pc = |V|", bundle.pc, len(r.vertices)),
        DictionaryRow("bc_Gr = pc - rk C", cartan.bc_graph, bundle.pc - cartan.rank),
    ]
    if bundle.bc is not None:
        rows.append(DictionaryRow("bc_A = bc_Gr", bundle.bc, cartan.bc_graph))
    return rows
