"""Derived-equivalence screening: compare the invariant bundles of two orders.

Every compared quantity is a derived invariant, so any mismatch proves the
orders are not derived equivalent. Agreement proves nothing.
"""

from dataclasses import dataclass

import numpy as np

from .cartan import cartan_data
from .errors import DisconnectedInput
from .invariants import compute_invariants
from .presentation import to_half_edges, validate_gentle_order
from .surface import ribbon_data, surface_profile

DISTINGUISHED = "DISTINGUISHED"
INCONCLUSIVE = "INCONCLUSIVE"

COMPARED = ("ag1", "ag2", "pc", "bc", "q0t", "q0c", "q1", "rank_c", "abs_det_c",
            "surface", "hereditary", "ribbon")


@dataclass(frozen=True)
class Row:
    name: str
    a: object
    b: object

    @property
    def equal(self):
        return self.a == self.b


@dataclass(frozen=True)
class ScreeningReport:
    rows: tuple

    @property
    def failing(self):
        return [r.name for r in self.rows if not r.equal]

    @property
    def verdict(self):
        return DISTINGUISHED if self.failing else INCONCLUSIVE

    @property
    def exit_code(self):
        return 1 if self.failing else 0

    def to_json(self):
        def plain(x):
            if isinstance(x, tuple):
                return [plain(y) for y in x]
            return x

        return {
            "verdict": self.verdict,
            "failing": self.failing,
            "rows": [{"name": r.name, "a": plain(r.a), "b": plain(r.b), "equal": r.equal}
                     for r in self.rows],
        }


def screening_values(p):
    """The compared invariants of one connected gentle order, by name."""
    c = validate_gentle_order(p)
    comps = p.components()
    if len(comps) != 1:
        raise DisconnectedInput(len(comps), "screening")
    h = to_half_edges(p, c)
    bundle = compute_invariants(p, c, h)
    cd = cartan_data(p, c, h)
    prof = surface_profile(ribbon_data(h))
    cnt = bundle.counts
    return {
        "ag1": tuple(tuple(e) for e in bundle.ag1),
        "ag2": tuple(tuple(e) for e in bundle.ag2),
        "pc": bundle.pc,
        "bc": bundle.bc,
        "q0t": cnt["q0t"],
        "q0c": cnt["q0c"],
        "q1": cnt["q1"],
        "rank_c": cd.rank,
        "abs_det_c": abs(cd.det),
        "surface": prof.key(),
        "hereditary": bundle.hereditary,
        "ribbon": bundle.ribbon,
    }


def screen(a, b):
    va, vb = screening_values(a), screening_values(b)
    return ScreeningReport(tuple(Row(k, va[k], vb[k]) for k in COMPARED))


def relabeled_copy(p, rng):
    """Same order with fresh random names and shuffled declaration order."""
    vperm = rng.permutation(len(p.vertices))
    aperm = rng.permutation(len(p.arrows))
    vmap = {v: f"x{vperm[i]}" for i, v in enumerate(p.vertices)}
    amap = {a.name: f"y{aperm[i]}" for i, a in enumerate(p.arrows)}
    vorder = [p.vertices[i] for i in rng.permutation(len(p.vertices))]
    aorder = [p.arrows[i].name for i in rng.permutation(len(p.arrows))]
    return p.relabel(vmap, amap, vorder, aorder)


def self_screen(p, seed=None, rng=None):
    """Screen ``p`` against a uniformly relabelled copy of itself."""
    if rng is None:
        rng = np.random.default_rng(seed)
    return screen(p, relabeled_copy(p, rng))
