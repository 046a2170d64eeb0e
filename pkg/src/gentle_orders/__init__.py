"""Combinatorial derived invariants of gentle orders."""

from ._accel import BACKEND
from .errors import (
    DisconnectedInput,
    FormatError,
    GenerationFailed,
    GentleOrderError,
    InstanceTooLarge,
    NotGentle,
    NotGentleOrder,
    NotKappaStable,
    NotTransitionVertex,
    PresentationError,
)
from .halfedge import HalfEdgeSystem, OrbitPartition, Permutation, kappa, orbits, phi, rho
from .presentation import (
    GentlePresentation,
    VertexClass,
    from_half_edges,
    parse_presentation,
    to_half_edges,
    validate_gentle_order,
)

__version__ = "0.1.0"
