import random

import pytest

import oracles
from mediangle import generators as gen
from mediangle.graph import Graph, convex_hull, is_gated
from mediangle.mediangle import (
    CYCLE_CONDITION,
    NOT_PARTIAL_CUBE,
    check_cycle_condition,
    check_cycle_intersections,
    is_bipartite_mediangle,
    revalidate_cycle_witness,
)
from mediangle.partial_cube import ConvexCycle, enumerate_convex_cycles


def test_q3_cycle_condition(q3):
    assert check_cycle_condition(q3, enumerate_convex_cycles(q3)) == (True, None)


def test_c6_cycle_condition(c6):
    cycles = enumerate_convex_cycles(c6)
    assert oracles.cycle_condition_failures(c6, [c.vertices for c in cycles]) == []
    assert check_cycle_condition(c6, cycles) == (True, None)


def test_uniform4_cycle_condition(uniform4):
    cycles = enumerate_convex_cycles(uniform4)
    fails = oracles.cycle_condition_failures(uniform4, [c.vertices for c in cycles])
    assert fails
    ok, witness = check_cycle_condition(uniform4, cycles)
    assert not ok
    # least failing fork in (u, z, x, y) order
    assert witness == min(fails, key=lambda f: (f[0], f[3], f[1], f[2]))
    assert revalidate_cycle_witness(uniform4, witness)


def test_intersections_q3(q3):
    assert check_cycle_intersections(enumerate_convex_cycles(q3)) == (True, None)


def test_intersections_singleton():
    assert check_cycle_intersections([ConvexCycle((0, 1, 2, 3))]) == (True, None)


def test_intersections_glued_hexagons():
    # two hexagons sharing the path 0-1-2; not a partial cube, predicate only
    first = ConvexCycle((0, 1, 2, 3, 4, 5))
    second = ConvexCycle((0, 1, 2, 6, 7, 8))
    ok, (c1, c2, common) = check_cycle_intersections([first, second])
    assert not ok
    assert (c1, c2) == (first, second) and common == (0, 1, 2)


def test_intersections_shared_edge_ok():
    assert check_cycle_intersections([ConvexCycle((0, 1, 2, 3)), ConvexCycle((0, 1, 4, 5))])[0]


def test_a3_mediangle(a3):
    assert is_bipartite_mediangle(a3).is_mediangle


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_hypercubes_mediangle(d):
    v = is_bipartite_mediangle(gen.hypercube(d))
    assert v.is_mediangle and v.witness is None


def test_uniform4_not_mediangle(uniform4):
    v = is_bipartite_mediangle(uniform4)
    assert not v.is_mediangle
    assert v.failed_condition == CYCLE_CONDITION
    assert revalidate_cycle_witness(uniform4, tuple(v.witness))


def test_non_partial_cube_verdict():
    v = is_bipartite_mediangle(gen.cycle(5))
    assert not v.is_mediangle and v.failed_condition == NOT_PARTIAL_CUBE


def test_revalidate_rejects_non_witness(c6):
    assert not revalidate_cycle_witness(c6, (0, 2, 4, 3))


MEDIANGLE = [
    gen.hypercube(3),
    gen.even_cycle(8),
    gen.grid(3, 3),
    gen.coxeter_graph("A3"),
    gen.coxeter_graph("B3"),
    gen.coxeter_graph("I2(5)"),
]


@pytest.mark.parametrize("g", MEDIANGLE, ids=lambda g: g.name)
def test_convex_cycles_gated(g):
    for c in enumerate_convex_cycles(g):
        assert is_gated(g, c.vertex_set)


@pytest.mark.parametrize("g", MEDIANGLE, ids=lambda g: g.name)
def test_convex_subgraphs_mediangle(g):
    rng = random.Random(7)
    for _ in range(15):
        s = rng.sample(range(g.n), rng.randint(1, 3))
        h = convex_hull(g, s)
        assert is_bipartite_mediangle(g.induced(h)).is_mediangle


def test_prism_mediangle():
    g = gen.cartesian_product(gen.path(2), gen.even_cycle(6))
    assert g.n == 12 and g.edge_count == 18
    assert is_bipartite_mediangle(g).is_mediangle


def test_theta_graph_is_not_mediangle():
    # two 2-paths and one 4-path between the same pair of vertices
    g = Graph(7, [(0, 1), (1, 2), (0, 3), (3, 2), (0, 4), (4, 5), (5, 6), (6, 2)])
    v = is_bipartite_mediangle(g)
    assert not v.is_mediangle
