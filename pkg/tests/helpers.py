from gentle_orders.halfedge import HalfEdgeSystem, Permutation, parse_cycles
from gentle_orders.presentation import parse_presentation


def system(n, sigma="", theta=""):
    """Half-edge system from 1-based cycle strings."""
    return HalfEdgeSystem(Permutation.from_cycles(n, parse_cycles(sigma, n)),
                          Permutation.from_cycles(n, parse_cycles(theta, n)))


def cyclic_text(ell):
    """The equioriented cycle on ``ell`` vertices with no relations, as .gq text."""
    lines = [f"vertex {i}" for i in range(1, ell + 1)]
    lines += [f"arrow a{i} {i} {i % ell + 1}" for i in range(1, ell + 1)]
    return "\n".join(lines) + "\n"


def cyclic(ell):
    return parse_presentation(cyclic_text(ell))


# loops a, b at one vertex
CROSS_TEXT = "vertex 1\narrow a 1 1\narrow b 1 1\nrel b a\nrel a b\n"
SQUARES_TEXT = "vertex 1\narrow a 1 1\narrow b 1 1\nrel a a\nrel b b\n"

LOOP_SYS = system(2, "(1 2)", "(1 2)")      # one loop edge, two punctured faces
EDGE_SYS = system(2, "", "(1 2)")           # one ordinary edge, bicolorable
MIXED_SYS = system(3, "(1 2 3)", "(2 3)")   # one transition, one crossing vertex
TORUS_SYS = system(4, "(1 2 3 4)", "(1 3)(2 4)")
