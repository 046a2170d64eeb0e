import numpy as np
import pytest

from gentle_orders.cartan import (
    TruncatedGraph,
    cartan_data,
    cartan_matrix,
    cartan_path_oracle,
    det_formula,
    det_incidence_formula,
    det_oracle,
    incidence_matrix,
    rank_formula,
    rank_oracle,
    truncated_graph,
)
from gentle_orders.errors import InstanceTooLarge
from gentle_orders.intmat import IntegerMatrix, bareiss_det
from gentle_orders.presentation import from_half_edges
from gentle_orders.randgen import GenConfig, generate, random_tree, system_from_graph

from helpers import EDGE_SYS, LOOP_SYS, cyclic


def graph_of(h):
    return truncated_graph(from_half_edges(h))


def test_truncated_graph_examples():
    g = truncated_graph(cyclic(5))
    assert g.n_vertices == 1 and g.census() == {"ordinary": 0, "loop": 0, "truncated": 5}
    g = graph_of(EDGE_SYS)
    assert g.n_vertices == 2 and g.census()["ordinary"] == 1
    g = graph_of(LOOP_SYS)
    assert g.n_vertices == 1 and g.census()["loop"] == 1


def test_incidence_examples():
    assert incidence_matrix(truncated_graph(cyclic(2))).rows() == [[1], [1]]
    assert incidence_matrix(graph_of(EDGE_SYS)).rows() == [[1, 1]]
    assert incidence_matrix(graph_of(LOOP_SYS)).rows() == [[2]]


@pytest.mark.parametrize("ell", [1, 3, 6])
def test_cartan_all_ones(ell):
    assert cartan_matrix(truncated_graph(cyclic(ell))).rows() == [[1] * ell] * ell


def test_cartan_small():
    assert cartan_matrix(graph_of(LOOP_SYS)).rows() == [[4]]
    assert cartan_matrix(graph_of(EDGE_SYS)).rows() == [[2]]


def test_rank_examples():
    for g, expected in [(truncated_graph(cyclic(4)), 1), (graph_of(EDGE_SYS), 1), (graph_of(LOOP_SYS), 1)]:
        assert rank_formula(g) == expected == rank_oracle(cartan_matrix(g))


def test_det_examples():
    assert det_oracle(cartan_matrix(graph_of(EDGE_SYS))) == 2 == det_formula(graph_of(EDGE_SYS))
    assert det_oracle(cartan_matrix(graph_of(LOOP_SYS))) == 4 == det_formula(graph_of(LOOP_SYS))
    assert det_formula(truncated_graph(cyclic(1))) == 1
    assert det_formula(truncated_graph(cyclic(2))) == 0
    assert det_oracle(cartan_matrix(truncated_graph(cyclic(2)))) == 0


def test_path_oracle_examples():
    assert cartan_path_oracle(from_half_edges(LOOP_SYS)) == IntegerMatrix([[4]])
    assert cartan_path_oracle(from_half_edges(EDGE_SYS)) == IntegerMatrix([[2]])
    assert cartan_path_oracle(cyclic(2)) == IntegerMatrix([[1, 1], [1, 1]])


def test_path_oracle_bound():
    p = from_half_edges(generate(GenConfig(n=17, seed=0)))
    with pytest.raises(InstanceTooLarge):
        cartan_path_oracle(p)


def test_from_edges_kinds():
    g = TruncatedGraph.from_edges(3, [(0, 1), (1, 1), (2,)])
    assert [g.kind(e) for e in range(3)] == ["ordinary", "loop", "truncated"]
    with pytest.raises(ValueError):
        TruncatedGraph(2, ((1, 1, 0),))


@pytest.mark.parametrize("p", [1, 2, 3, 6, 10])
def test_tree_family(p):
    rng = np.random.default_rng(p)
    edges = random_tree(rng, p)
    if p == 1:
        return
    h = system_from_graph(p, edges, rng)
    cd = cartan_data(from_half_edges(h))
    assert cd.det == len(edges) + 1 == cd.det_formula


def test_odd_cycle_family():
    rng = np.random.default_rng(0)
    for k in (1, 3, 5, 7):
        edges = [(i, (i + 1) % k) for i in range(k)] if k > 1 else [(0, 0)]
        cd = cartan_data(from_half_edges(system_from_graph(k, edges, rng)))
        assert cd.det == 4
        assert abs(bareiss_det(cd.incidence.rows())) == 2 == det_incidence_formula(cd.graph)


def test_even_cycle_is_singular():
    rng = np.random.default_rng(0)
    edges = [(i, (i + 1) % 4) for i in range(4)]
    cd = cartan_data(from_half_edges(system_from_graph(4, edges, rng)))
    assert cd.det == 0 == cd.det_formula
    assert cd.bc_graph == 1 and cd.rank == 3


def test_tree_with_truncated_edge():
    rng = np.random.default_rng(3)
    edges = random_tree(rng, 5) + [(2,)]
    cd = cartan_data(from_half_edges(system_from_graph(5, edges, rng)))
    assert cd.det == 1 == cd.det_formula
    assert abs(bareiss_det(cd.incidence.rows())) == 1


def test_structure_on_corpus():
    for seed in range(100):
        p = from_half_edges(generate(GenConfig(n=20, seed=seed)))
        cd = cartan_data(p)
        c, b = cd.cartan, cd.incidence
        assert c.is_symmetric() and c == b @ b.T
        assert set(c.diagonal()) <= {1, 2, 4}
        assert all(sum(r) in (1, 2) for r in b.rows())
        assert cd.rank == cd.rank_formula and cd.det == cd.det_formula
        assert rank_oracle(b) == cd.graph.n_vertices - cd.bc_graph
