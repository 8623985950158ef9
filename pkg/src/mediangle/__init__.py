"""Partial cubes, bipartite mediangle graphs and their complexes of oriented matroids."""

from .cells import (
    Cell,
    antipode_in,
    covector_of_cell,
    enumerate_cells,
    euler_characteristic,
    is_antipodal_subgraph,
    reconstruct_system,
)
from .graph import (
    GateResult,
    Graph,
    GraphError,
    convex_hull,
    gate,
    imprint,
    interval,
    is_convex,
    is_gated,
)
from .mediangle import (
    MediangleVerdict,
    check_cycle_condition,
    check_cycle_intersections,
    is_bipartite_mediangle,
)
from .order import ApexResult, is_apiculate, is_lattice_at, u_apices
from .partial_cube import (
    ConvexCycle,
    CubeEmbedding,
    NotAPartialCube,
    ThetaPartition,
    enumerate_convex_cycles,
    halfspace_side,
    recognize_partial_cube,
    theta_partition,
)
from .signs import (
    FaceLattice,
    SignSystem,
    check_axioms,
    compose,
    contract,
    delete,
    face_lattice,
    is_simplicial_om,
    separator,
    simplify,
    topes_and_graph,
    zone_graph,
)

__version__ = "0.1.0"
