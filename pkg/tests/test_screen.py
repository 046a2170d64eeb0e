import json

import numpy as np
import pytest

from gentle_orders.errors import DisconnectedInput, NotGentleOrder
from gentle_orders.presentation import from_half_edges, parse_presentation
from gentle_orders.randgen import GenConfig, generate
from gentle_orders.screen import COMPARED, relabeled_copy, screen, self_screen

from helpers import EDGE_SYS, LOOP_SYS, MIXED_SYS, cyclic, system


def test_reflexive():
    rep = screen(cyclic(3), cyclic(3))
    assert rep.verdict == "INCONCLUSIVE" and rep.exit_code == 0
    assert [r.name for r in rep.rows] == list(COMPARED)
    assert all(r.equal for r in rep.rows)


def test_cycles_distinguished():
    rep = screen(cyclic(2), cyclic(3))
    assert rep.verdict == "DISTINGUISHED" and rep.exit_code == 1
    rows = {r.name: r for r in rep.rows}
    assert (rows["ag1"].a, rows["ag1"].b) == (((2, 2),), ((3, 3),))
    assert rep.failing == ["ag1", "q0t", "q1"]


def test_two_half_edge_orders():
    rep = screen(from_half_edges(LOOP_SYS), from_half_edges(EDGE_SYS))
    rows = {r.name: r for r in rep.rows}
    assert rep.verdict == "DISTINGUISHED"
    assert rows["ag2"].a == ((1, 0), (1, 0))
    assert rows["ag2"].b == ((2, 0),)
    assert (rows["bc"].a, rows["bc"].b) == (0, 1)
    assert rep.failing == ["ag2", "pc", "bc", "abs_det_c", "surface"]


def test_symmetry():
    a, b = from_half_edges(MIXED_SYS), cyclic(3)
    ab, ba = screen(a, b), screen(b, a)
    assert ab.verdict == ba.verdict and ab.failing == ba.failing
    assert all(x.a == y.b and x.b == y.a for x, y in zip(ab.rows, ba.rows))


def test_refuses_disconnected():
    with pytest.raises(DisconnectedInput):
        screen(from_half_edges(system(2)), cyclic(1))


def test_refuses_non_order():
    with pytest.raises(NotGentleOrder):
        screen(parse_presentation("vertex 1\nvertex 2\narrow a 1 2\n"), cyclic(1))


def test_reversed_vertex_order():
    p = from_half_edges(generate(GenConfig(n=12, seed=4, connected=True)))
    q = p.relabel({v: v for v in p.vertices}, {a.name: a.name for a in p.arrows},
                  vertex_order=list(reversed(p.vertices)))
    assert screen(p, q).verdict == "INCONCLUSIVE"


def test_relabeled_copy_changes_names():
    p = cyclic(4)
    q = relabeled_copy(p, np.random.default_rng(0))
    assert set(q.vertices).isdisjoint(p.vertices)


def test_self_screen_batch():
    rng = np.random.default_rng(11)
    for seed in range(100):
        p = from_half_edges(generate(GenConfig(n=1 + seed % 30, seed=seed, connected=True)))
        assert self_screen(p, rng=rng).verdict == "INCONCLUSIVE"


def test_report_json():
    js = screen(cyclic(2), cyclic(3)).to_json()
    assert js["verdict"] == "DISTINGUISHED"
    assert js["rows"][0] == {"name": "ag1", "a": [[2, 2]], "b": [[3, 3]], "equal": False}
    json.dumps(js)
