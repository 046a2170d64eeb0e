import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gentle_orders.errors import FormatError
from gentle_orders.halfedge import (
    HalfEdgeSystem,
    Permutation,
    canonical_form,
    format_hep,
    kappa,
    orbits,
    parse_hep,
    phi,
    rho,
)
from gentle_orders.randgen import GenConfig, generate, hereditary_cycle

from helpers import LOOP_SYS, EDGE_SYS, MIXED_SYS, TORUS_SYS, system


def test_phi_examples():
    assert phi(LOOP_SYS).is_identity()
    assert phi(system(3)).is_identity()
    # (a b c d) with (a c)(b d) gives (a d c b)
    assert phi(TORUS_SYS) == Permutation.from_cycles(4, [(0, 3, 2, 1)])


def test_orbits_examples():
    assert orbits(Permutation.identity(3)).orbits == ((0,), (1,), (2,))
    assert orbits(Permutation.from_cycles(3, [(0, 2, 1)])).orbits == ((0, 2, 1),)
    assert orbits(Permutation.from_cycles(3, [(0, 1)])).orbits == ((0, 1), (2,))


def test_orbits_start_at_minimum_and_sorted():
    p = Permutation([4, 0, 3, 2, 1])
    part = orbits(p)
    assert part.orbits == ((0, 4, 1), (2, 3))
    assert part.orbit_of(1) == (0, 4, 1)
    assert tuple(part.sizes()) == (3, 2)


def test_kappa_examples():
    h = hereditary_cycle(3)
    assert kappa(h) == h.sigma
    assert kappa(TORUS_SYS).domain().size == 0
    assert kappa(EDGE_SYS).domain().size == 0


def test_kappa_mixed():
    k = kappa(MIXED_SYS)
    assert k.domain().tolist() == [0]
    assert k(0) == 0


def test_rho_examples():
    r = rho(LOOP_SYS)
    assert r.domain().tolist() == [0, 1]
    assert r(0) == 0 and r(1) == 1
    assert rho(hereditary_cycle(3)).domain().size == 0
    assert rho(TORUS_SYS) == phi(TORUS_SYS)


def test_rho_agrees_with_phi_on_domain():
    for seed in range(30):
        h = generate(GenConfig(n=12, seed=seed))
        r, f = rho(h), phi(h)
        for x in r.domain():
            assert r(x) == f(x)


def test_permutation_basics():
    p = Permutation.from_cycles(5, [(0, 1, 2), (3, 4)])
    assert (p * p.inverse()).is_identity()
    assert p.cycle_type() == (3, 2)
    assert p.cycle_string() == "(1 2 3)(4 5)"
    assert not p.is_involution()
    assert Permutation.from_cycles(4, [(0, 3)]).is_involution()


def test_composition_order():
    s = Permutation.from_cycles(3, [(0, 1)])
    t = Permutation.from_cycles(3, [(1, 2)])
    # (t * s)(x) = t(s(x))
    assert (t * s)(0) == 2


def test_permutation_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])


def test_system_rejects_non_involution():
    with pytest.raises(ValueError):
        HalfEdgeSystem(Permutation.identity(3), Permutation.from_cycles(3, [(0, 1, 2)]))


def test_components():
    h = system(4, "(1 2)", "")
    assert h.components() == [(0, 1), (2,), (3,)]
    assert not h.is_connected()
    assert TORUS_SYS.is_connected()


def test_hep_round_trip():
    text = "halfedges 4\nsigma (1 2 3 4)\ntheta (1 3)(2 4)\n"
    h = parse_hep(text)
    assert h == TORUS_SYS
    assert parse_hep(format_hep(h)) == h


def test_hep_omitted_points_fixed():
    h = parse_hep("halfedges 3\nsigma (1 3 2)\n")
    assert h.theta.is_identity()


@pytest.mark.parametrize("text", [
    "sigma (1 2)\n",
    "halfedges 2\nsigma (1 3)\n",
    "halfedges 2\ntheta (1 2 2)\n",
    "halfedges 3\ntheta (1 2 3)\n",
    "halfedges x\n",
    "halfedges 2\nbogus (1)\n",
])
def test_hep_errors(text):
    with pytest.raises(FormatError):
        parse_hep(text)


def test_canonical_form_is_relabelling_invariant():
    rng = np.random.default_rng(1)
    h = MIXED_SYS
    assert canonical_form(h) == canonical_form(h.relabel(rng.permutation(3)))
    assert canonical_form(LOOP_SYS) != canonical_form(EDGE_SYS)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 40), st.integers(0, 2**31), st.floats(0, 1))
def test_kappa_is_bijection_on_fixed_points(n, seed, frac):
    h = generate(GenConfig(n=n, seed=seed, transition_fraction=frac))
    k = kappa(h)
    fixed = np.nonzero(h.theta_fixed())[0]
    assert sorted(k.domain().tolist()) == fixed.tolist()
    assert sorted(k(x) for x in fixed) == fixed.tolist()


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 40), st.integers(0, 2**31))
def test_face_partition(n, seed):
    h = generate(GenConfig(n=n, seed=seed))
    fixed = h.theta_fixed()
    dom = set(rho(h).domain().tolist())
    for orb in orbits(phi(h)).orbits:
        assert all(x in dom for x in orb) == (not any(fixed[x] for x in orb))
