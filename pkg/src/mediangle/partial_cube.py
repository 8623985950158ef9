"""Partial-cube recognition through Djoković's relation, halfspaces and convex cycles."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .graph import Graph, GraphError, convexity_witness, interval_mask


class NotAPartialCube(GraphError):
    """Raised by operations that require a partial cube."""


@dataclass(frozen=True)
class ThetaPartition:
    """Θ-classes of a partial cube with halfspaces oriented at ``root``.

    ``sides[c, v]`` is ``+1`` when ``v`` lies in the halfspace of class ``c``
    containing ``root`` and ``-1`` otherwise.  Classes are numbered by their
    lexicographically least edge.
    """

    root: int
    class_of_edge: dict[tuple[int, int], int]
    classes: tuple[tuple[tuple[int, int], ...], ...]
    sides: np.ndarray = field(repr=False)

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def halfspaces(self, c: int) -> tuple[frozenset[int], frozenset[int]]:
        """(positive side, negative side) of class ``c``."""
        row = self.sides[c]
        return (
            frozenset(np.flatnonzero(row > 0).tolist()),
            frozenset(np.flatnonzero(row < 0).tolist()),
        )

    def edge_class(self, a: int, b: int) -> int:
        return self.class_of_edge[(min(a, b), max(a, b))]


@dataclass(frozen=True)
class CubeEmbedding:
    """Row ``v`` of ``coords`` is the 0/1 vector of vertex ``v`` (1 = negative side)."""

    coords: np.ndarray = field(repr=False)

    def hamming(self, a: int, b: int) -> int:
        return int((self.coords[a] != self.coords[b]).sum())


@dataclass(frozen=True)
class PartialCube:
    theta: ThetaPartition
    embedding: CubeEmbedding
    ok = True


@dataclass(frozen=True)
class NotBipartite:
    odd_cycle: tuple[int, ...]
    ok = False


@dataclass(frozen=True)
class NotPartialCube:
    """``edge`` has a non-convex side ``W(edge[0], edge[1])``.

    ``witness = (a, b, x)``: ``a, b`` lie in that side, ``x`` is outside it and on
    a shortest ``a``-``b`` path.
    """

    edge: tuple[int, int]
    witness: tuple[int, int, int]
    ok = False


@dataclass(frozen=True)
class ConvexCycle:
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def opposite(self, v: int) -> int:
        i = self.vertices.index(v)
        return self.vertices[(i + self.length // 2) % self.length]

    def cycle_edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [tuple(sorted((vs[i], vs[(i + 1) % len(vs)]))) for i in range(len(vs))]

    def has_edge(self, a: int, b: int) -> bool:
        if a not in self.vertices or b not in self.vertices:
            return False
        i, j = self.vertices.index(a), self.vertices.index(b)
        return (i - j) % self.length in (1, self.length - 1)


def odd_cycle(g: Graph) -> tuple[int, ...] | None:
    """An odd closed walk (a cycle through a BFS tree), or ``None`` if bipartite."""
    d0 = g.dist[0]
    parent = [-1] * g.n
    for v in range(1, g.n):
        parent[v] = next(w for w in g.adjacency[v] if d0[w] == d0[v] - 1)
    for a, b in g.edges:
        if d0[a] == d0[b]:
            pa, pb = [a], [b]
            while pa[-1] != pb[-1]:
                pa.append(parent[pa[-1]])
                pb.append(parent[pb[-1]])
            return tuple(pa + pb[-2::-1])
    return None


def _theta_classes(g: Graph) -> tuple[list[tuple[int, int]], np.ndarray]:
    edges = list(g.edges)
    e = np.array(edges, dtype=np.int64)
    d = g.dist
    u, v = e[:, 0], e[:, 1]
    lhs = d[np.ix_(u, u)] + d[np.ix_(v, v)]
    rhs = d[np.ix_(u, v)] + d[np.ix_(v, u)]
    rel = coo_matrix(lhs != rhs)
    _, comp = connected_components(rel, directed=False)
    # renumber components by first edge
    order: dict[int, int] = {}
    for c in comp:
        order.setdefault(int(c), len(order))
    return edges, np.array([order[int(c)] for c in comp], dtype=np.int64)


def _nonconvex_side(g: Graph) -> NotPartialCube:
    d = g.dist
    for a, b in g.edges:
        for x, y in ((a, b), (b, a)):
            w = convexity_witness(g, d[:, x] < d[:, y])
            if w is not None:
                return NotPartialCube((x, y), w)
    raise AssertionError("Djoković criterion holds but Θ-embedding failed")


def recognize_partial_cube(g: Graph, root: int = 0) -> PartialCube | NotBipartite | NotPartialCube:
    """Decide whether ``g`` is a partial cube.

    On success the Θ-partition is oriented so that ``root`` lies on the
    positive side of every class and receives the all-zero coordinate vector.
    """
    g.check_vertex(root)
    cyc = odd_cycle(g)
    if cyc is not None:
        return NotBipartite(cyc)
    if g.n == 1:
        theta = ThetaPartition(root, {}, (), np.zeros((0, 1), dtype=np.int8))
        return PartialCube(theta, CubeEmbedding(np.zeros((1, 0), dtype=np.int8)))
    d = g.dist
    edges, comp = _theta_classes(g)
    k = int(comp.max()) + 1
    classes: list[list[tuple[int, int]]] = [[] for _ in range(k)]
    for edge, c in zip(edges, comp):
        classes[c].append(edge)
    sides = np.empty((k, g.n), dtype=np.int8)
    for c, members in enumerate(classes):
        a, b = members[0]
        near_a = d[:, a] < d[:, b]
        for x, y, side in ((a, b, near_a), (b, a, ~near_a)):
            w = convexity_witness(g, side)
            if w is not None:
                return NotPartialCube((x, y), w)
        sides[c] = np.where(near_a == near_a[root], 1, -1)
    coords = (sides.T < 0).astype(np.int8)
    e = np.array(edges)
    crossing = sides[:, e[:, 0]] != sides[:, e[:, 1]]
    cut_ok = (crossing == (comp[None, :] == np.arange(k)[:, None])).all()
    hamming = (coords[:, None, :] != coords[None, :, :]).sum(axis=2)
    if not cut_ok or not (hamming == d).all():
        return _nonconvex_side(g)
    theta = ThetaPartition(
        root=root,
        class_of_edge={edge: int(c) for edge, c in zip(edges, comp)},
        classes=tuple(tuple(m) for m in classes),
        sides=sides,
    )
    return PartialCube(theta, CubeEmbedding(coords))


def theta_partition(g: Graph, root: int = 0) -> ThetaPartition:
    """Θ-partition of a partial cube; raises :class:`NotAPartialCube` otherwise."""
    res = recognize_partial_cube(g, root)
    if not res.ok:
        raise NotAPartialCube(f"{g!r} is not a partial cube: {res}")
    return res.theta


def halfspace_side(theta: ThetaPartition, c: int, v: int) -> int:
    if not 0 <= c < theta.class_count:
        raise IndexError(f"class index {c} out of range")
    if not 0 <= v < theta.sides.shape[1]:
        raise IndexError(f"vertex {v} out of range")
    return int(theta.sides[c, v])


def _cycle_order(g: Graph, members: np.ndarray) -> tuple[int, ...] | None:
    """Cyclic order of ``members`` if they induce a cycle, starting at the least
    vertex and continuing to its smaller neighbour."""
    vs = set(np.flatnonzero(members).tolist())
    if len(vs) < 4:
        return None
    nb = {v: [w for w in g.adjacency[v] if w in vs] for v in vs}
    if any(len(x) != 2 for x in nb.values()):
        return None
    start = min(vs)
    order = [start, min(nb[start])]
    while len(order) < len(vs):
        a, b = nb[order[-1]]
        nxt = a if a != order[-2] else b
        if nxt == start:
            return None
        order.append(nxt)
    if start not in nb[order[-1]]:
        return None
    return tuple(order)


def enumerate_convex_cycles(g: Graph, theta: ThetaPartition | None = None) -> list[ConvexCycle]:
    """Every convex cycle of a partial cube, each exactly once.

    A convex cycle coincides with the interval between any two of its opposite
    vertices, so the candidates are the intervals ``[a, b]`` of size ``2 d(a, b)``.
    """
    if theta is None:
        theta = theta_partition(g)
    d = g.dist
    seen: set[frozenset[int]] = set()
    found: list[ConvexCycle] = []
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if d[a, b] < 2:
                continue
            m = interval_mask(g, a, b)
            if m.sum() != 2 * d[a, b]:
                continue
            key = frozenset(np.flatnonzero(m).tolist())
            if key in seen:
                continue
            seen.add(key)
            order = _cycle_order(g, m)
            if order is not None and convexity_witness(g, m) is None:
                found.append(ConvexCycle(order))
    found.sort(key=lambda c: (c.length, sorted(c.vertices)))
    return found
