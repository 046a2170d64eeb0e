"""Per-instance property suite, shared by ``selftest`` and the test-suite."""

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .cartan import (
    PATH_ORACLE_MAX_ARROWS,
    cartan_data,
    cartan_path_oracle,
    det_incidence_formula,
    rank_oracle,
)
from .halfedge import kappa
from .invariants import (
    ag_first,
    ag_first_from_threads,
    compute_invariants,
    forbidden_threads,
    hereditary_routes,
    sign_involution,
)
from .intmat import bareiss_det
from .presentation import from_half_edges, to_half_edges, validate_gentle_order
from .randgen import GenConfig, generate
from .screen import self_screen
from .surface import dictionary_row_check, ribbon_data, surface_profiles


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


def check_system(h, rng=None, path_oracle=True):
    """Run every property on one half-edge system; returns a list of checks."""
    if rng is None:
        rng = np.random.default_rng(0)
    out = []

    def add(name, ok, detail=""):
        out.append(Check(name, bool(ok), detail))

    p = from_half_edges(h)
    c = validate_gentle_order(p)
    h2 = to_half_edges(p, c)
    add("roundtrip", h2 == h)
    g = h.relabel(rng.permutation(h.n))
    add("roundtrip_relabelled", to_half_edges(from_half_edges(g)) == g)

    bundle = compute_invariants(p, c, h)
    cd = cartan_data(p, c, h)
    cnt = bundle.counts
    connected = bundle.components == 1

    # linear algebra
    add("rank_formula", cd.rank == cd.rank_formula == bundle.pc - cd.bc_graph,
        f"oracle={cd.rank} formula={cd.rank_formula}")
    if connected:
        add("rank_pc_minus_bc", cd.rank == bundle.pc - bundle.bc)
    add("det_formula", cd.det == cd.det_formula, f"oracle={cd.det} formula={cd.det_formula}")
    b = cd.incidence
    add("kernel_rank_B", rank_oracle(b) == cd.graph.n_vertices - cd.bc_graph)
    if b.nrows == b.ncols:
        add("det_B_formula", abs(bareiss_det(b.rows())) == det_incidence_formula(cd.graph))
    C = cd.cartan
    add("cartan_structure",
        C.is_symmetric() and C == b @ b.T and set(C.diagonal()) <= {1, 2, 4}
        and all(sum(r) in (1, 2) for r in b.rows()))
    if path_oracle and len(p.arrows) <= PATH_ORACLE_MAX_ARROWS:
        add("cartan_path_oracle", cartan_path_oracle(p) == C)

    # counting identities
    threads = forbidden_threads(p, c)
    ag1, ag2 = bundle.ag1, bundle.ag2
    r = ribbon_data(h)
    add("counts",
        sum(e.m for e in ag1) == cnt["q1ft"]
        and sum(e.n for e in ag1) == cnt["q0t"]
        and sum(e.m for e in ag2) == cnt["q1fc"]
        and cnt["q1ft"] + cnt["q1fc"] == cnt["q1"] == 2 * cnt["q0c"] + cnt["q0t"] == sum(bundle.profile)
        and len(threads) == cnt["q0t"]
        and sum(len(f) for f in threads) == cnt["q1ft"]
        and len(ag1) == r.n_boundary and len(ag2) == r.n_punctured
        and bundle.pc == len(bundle.profile))
    add("ag1_two_routes", ag1 == ag_first_from_threads(p, c))
    kap = kappa(h)
    ends = {f.start: f.end for f in threads}
    add("kappa_vs_threads",
        all(ends[p.arrows[x].source] == p.arrows[kap(x)].source for x in kap.domain()))
    add("ag1_m_ge_n", all(e.m >= e.n >= 1 for e in ag1) and all(e.n == 0 and e.m >= 1 for e in ag2))

    # classification
    if connected:
        routes = hereditary_routes(h)
        add("hereditary_routes_agree", len(set(routes)) == 1, str(routes))
        if not routes[0]:
            add("ag1_strict", all(e.m > e.n for e in ag_first(h)))
        else:
            add("hereditary_shape", bundle.pc == 1 and not ag2)
        if bundle.ribbon:
            add("ribbon_shape", not ag1)

    # dictionary and surfaces
    rows = dictionary_row_check(p, h, bundle, cd, r, c)
    bad = [row.row for row in rows if not row.ok]
    add("dictionary", not bad, "; ".join(bad))
    profs = surface_profiles(h)
    add("genus_integral", all(pr.euler % 2 == 0 and pr.genus >= 0 for pr in profs))

    # signs
    for char2 in (False, True):
        si = sign_involution(p, char2, c)
        add(f"xi_involution_char{2 if char2 else 0}",
            all(si.apply(si.apply((1, a.name))) == (1, a.name) for a in p.arrows))

    if connected:
        add("self_screen", self_screen(p, rng=rng).verdict == "INCONCLUSIVE")
    return out


def run_selftest(cases, seed, max_n=60):
    """Property suite over ``cases`` random systems; returns (Counter of passes,
    list of failures)."""
    rng = np.random.default_rng(seed)
    passed = Counter()
    failures = []
    for i in range(cases):
        n = int(rng.integers(1, max_n + 1))
        cfg = GenConfig(n=n, seed=int(rng.integers(2**32)),
                        connected=bool(rng.random() < 0.7),
                        transition_fraction=float(rng.random()))
        h = generate(cfg)
        for chk in check_system(h, rng):
            if chk.ok:
                passed[chk.name] += 1
            else:
                failures.append((i, h, chk))
    return passed, failures
