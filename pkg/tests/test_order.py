import pytest

import oracles
from conftest import q3_vertex as qv
from mediangle import generators as gen
from mediangle.cells import is_antipodal_subgraph
from mediangle.order import (
    is_apiculate,
    is_lattice_at,
    precedes,
    revalidate_apex_witness,
    u_apices,
)


def test_apices_c6(c6):
    d = oracles.distances(c6)
    assert oracles.apices(d, 6, 0, 2, 4) == {0}
    assert u_apices(c6, 0, 2, 4).apices == {0}


def test_apices_q3(q3):
    assert u_apices(q3, qv("000"), qv("011"), qv("101")).apices == {qv("001")}


def test_apices_equal_pair(a3):
    assert u_apices(a3, 0, 17, 17).apices == {17}


@pytest.mark.parametrize("g", [gen.hypercube(3), gen.even_cycle(6), gen.coxeter_graph("A3")],
                         ids=lambda g: g.name)
def test_apices_match_brute_force(g):
    d = oracles.distances(g)
    for u in range(0, g.n, 5):
        for x in range(g.n):
            for y in range(x, g.n, 3):
                assert u_apices(g, u, x, y).apices == oracles.apices(d, g.n, u, x, y)


def test_k2_apiculate():
    assert is_apiculate(gen.path(2)) == (True, None)


@pytest.mark.parametrize(
    "g",
    [gen.hypercube(3), gen.even_cycle(6), gen.grid(3, 3), gen.coxeter_graph("A3"), gen.coxeter_graph("B3")],
    ids=lambda g: g.name,
)
def test_mediangle_catalog_apiculate(g):
    assert is_apiculate(g)[0]


def test_uniform4_not_apiculate(uniform4):
    ok, res = is_apiculate(uniform4)
    assert not ok and len(res.apices) >= 2
    assert revalidate_apex_witness(uniform4, res)
    d = oracles.distances(uniform4)
    # least violating triple by brute force
    least = next(
        (u, x, y)
        for u in range(uniform4.n)
        for x in range(uniform4.n)
        for y in range(x, uniform4.n)
        if len(oracles.apices(d, uniform4.n, u, x, y)) > 1
    )
    assert (res.basepoint, res.x, res.y) == least


def test_lattice_q3(q3):
    assert all(is_lattice_at(q3, u) for u in range(8))


def test_lattice_path():
    p3 = gen.path(3)
    assert is_lattice_at(p3, 0)
    assert not is_lattice_at(p3, 1)


def test_lattice_c6(c6):
    assert all(is_lattice_at(c6, u) for u in range(6))


@pytest.mark.parametrize("g", [gen.hypercube(3), gen.coxeter_graph("A3"), gen.even_cycle(10)],
                         ids=lambda g: g.name)
def test_apiculate_antipodal_is_lattice(g):
    assert is_apiculate(g)[0] and is_antipodal_subgraph(g, range(g.n))
    assert all(is_lattice_at(g, u) for u in range(g.n))


@pytest.mark.parametrize("g", [gen.grid(2, 3), gen.even_cycle(6), gen.hypercube(2)], ids=lambda g: g.name)
def test_basepoint_order_is_partial_order(g):
    n = g.n
    for u in range(n):
        for a in range(n):
            assert precedes(g, u, a, a)
            for b in range(n):
                if a != b and precedes(g, u, a, b):
                    assert not precedes(g, u, b, a)
                for c in range(n):
                    if precedes(g, u, a, b) and precedes(g, u, b, c):
                        assert precedes(g, u, a, c)
