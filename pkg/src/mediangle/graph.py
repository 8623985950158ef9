"""Finite simple connected graphs with precomputed hop distances.

Vertex sets are exchanged as ``frozenset[int]`` at the public surface and as
dense boolean masks internally.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

VertexSet = frozenset


class GraphError(ValueError):
    """Raised for malformed graphs or invalid vertex arguments."""


class Graph:
    """Immutable simple connected undirected graph on vertices ``0..n-1``.

    The all-pairs distance table ``dist`` is computed once at construction.
    """

    __slots__ = ("n", "adjacency", "name", "labels", "dist", "_edges")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]],
        name: str | None = None,
        labels: Sequence[str] | None = None,
    ) -> None:
        if n < 1:
            raise GraphError("graph needs at least one vertex")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for a, b in edges:
            a, b = int(a), int(b)
            if not (0 <= a < n and 0 <= b < n):
                raise GraphError(f"edge ({a}, {b}) has an endpoint outside 0..{n - 1}")
            if a == b:
                raise GraphError(f"self-loop at vertex {a}")
            if b in nbrs[a]:
                raise GraphError(f"multi-edge ({a}, {b})")
            nbrs[a].add(b)
            nbrs[b].add(a)
        self.n = n
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in nbrs)
        self.name = name
        if labels is not None and len(labels) != n:
            raise GraphError("labels must have one entry per vertex")
        self.labels = tuple(labels) if labels is not None else None
        self._edges = tuple((a, b) for a in range(n) for b in self.adjacency[a] if a < b)
        self.dist = _all_pairs_hops(n, self._edges)
        if n > 1 and (self.dist < 0).any():
            raise GraphError("graph is not connected")
        self.dist.setflags(write=False)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as ``(a, b)`` with ``a < b``, sorted lexicographically."""
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        self.check_vertex(v)
        return self.adjacency[v]

    def has_edge(self, a: int, b: int) -> bool:
        return self.dist[a, b] == 1

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, (int, np.integer)) and 0 <= v < self.n):
            raise GraphError(f"invalid vertex {v!r} for graph on {self.n} vertices")

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def mask(self, s: Iterable[int] | np.ndarray) -> np.ndarray:
        """Dense membership vector for ``s`` (a vertex iterable or a mask)."""
        if isinstance(s, np.ndarray) and s.dtype == bool:
            if s.shape != (self.n,):
                raise GraphError("mask has wrong length")
            return s
        m = np.zeros(self.n, dtype=bool)
        for v in s:
            self.check_vertex(v)
            m[v] = True
        return m

    def induced(self, vertices: Iterable[int], name: str | None = None) -> Graph:
        """Induced subgraph, relabelled to ``0..k-1`` in increasing vertex order.

        Labels of the new graph are the old vertex labels.
        """
        keep = sorted(set(int(v) for v in vertices))
        index = {v: i for i, v in enumerate(keep)}
        sub_edges = [(index[a], index[b]) for a, b in self._edges if a in index and b in index]
        return Graph(len(keep), sub_edges, name=name, labels=[self.label(v) for v in keep])

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"<Graph{tag} n={self.n} m={self.edge_count}>"


def _all_pairs_hops(n: int, edges: Sequence[tuple[int, int]]) -> np.ndarray:
    if not edges:
        d = np.zeros((n, n), dtype=np.int64)
        if n > 1:
            d[~np.eye(n, dtype=bool)] = -1
        return d
    a = np.array(edges, dtype=np.int64)
    adj = csr_matrix((np.ones(len(a)), (a[:, 0], a[:, 1])), shape=(n, n))
    d = shortest_path(adj, directed=False, unweighted=True)
    out = np.where(np.isinf(d), -1, d).astype(np.int64)
    return out


def _nonempty(g: Graph, s: Iterable[int] | np.ndarray) -> np.ndarray:
    m = g.mask(s)
    if not m.any():
        raise GraphError("vertex set must be non-empty")
    return m


def interval_mask(g: Graph, u: int, v: int) -> np.ndarray:
    d = g.dist
    return d[u] + d[v] == d[u, v]


def interval(g: Graph, u: int, v: int) -> VertexSet:
    """All vertices lying on some shortest ``u``-``v`` path."""
    g.check_vertex(u)
    g.check_vertex(v)
    return frozenset(np.flatnonzero(interval_mask(g, u, v)).tolist())


def convex_hull_mask(g: Graph, s: np.ndarray) -> np.ndarray:
    d = g.dist
    hull = s.copy()
    while True:
        idx = np.flatnonzero(hull)
        # x is between members a, b iff d[a,x] + d[x,b] == d[a,b]
        da = d[idx]
        grow = hull.copy()
        for i, a in enumerate(idx):
            between = (da[i][None, :] + da[i:]) == d[a, idx[i:]][:, None]
            grow |= between.any(axis=0)
        if (grow == hull).all():
            return hull
        hull = grow


def convex_hull(g: Graph, s: Iterable[int] | np.ndarray) -> VertexSet:
    """Smallest convex vertex set containing ``s``."""
    m = _nonempty(g, s)
    return frozenset(np.flatnonzero(convex_hull_mask(g, m)).tolist())


def convexity_witness(g: Graph, s: np.ndarray) -> tuple[int, int, int] | None:
    """Lexicographically least ``(u, v, x)`` with ``u < v`` in ``s``, ``x`` outside
    ``s`` and ``x`` in ``[u, v]``; ``None`` when ``s`` is convex."""
    d = g.dist
    idx = np.flatnonzero(s)
    out = np.flatnonzero(~s)
    if len(out) == 0 or len(idx) < 2:
        return None
    d_out = d[np.ix_(idx, out)]
    for i, u in enumerate(idx[:-1]):
        hits = (d_out[i][None, :] + d_out[i + 1 :]) == d[u, idx[i + 1 :]][:, None]
        if hits.any():
            j, k = np.argwhere(hits)[0]
            return int(u), int(idx[i + 1 + j]), int(out[k])
    return None


def is_convex(g: Graph, s: Iterable[int] | np.ndarray) -> tuple[bool, tuple[int, int, int] | None]:
    """Return ``(True, None)`` or ``(False, (u, v, x))`` with ``x`` in ``[u, v]`` but not in ``s``."""
    w = convexity_witness(g, _nonempty(g, s))
    return w is None, w


def imprint_mask(g: Graph, u: int, s: np.ndarray) -> np.ndarray:
    d = g.dist
    idx = np.flatnonzero(s)
    du = d[u, idx]
    # x is in the imprint iff no other member y sits on a shortest u-x path
    sub = d[np.ix_(idx, idx)]
    between = du[:, None] + sub == du[None, :]
    np.fill_diagonal(between, False)
    keep = ~between.any(axis=0)
    out = np.zeros(g.n, dtype=bool)
    out[idx[keep]] = True
    return out


def imprint(g: Graph, u: int, s: Iterable[int] | np.ndarray) -> VertexSet:
    """Members ``x`` of ``s`` with ``[u, x]`` meeting ``s`` only in ``x``."""
    g.check_vertex(u)
    m = _nonempty(g, s)
    return frozenset(np.flatnonzero(imprint_mask(g, u, m)).tolist())


@dataclass(frozen=True)
class GateResult:
    """Outcome of a gate query: ``gate`` is set exactly when one exists."""

    gate: int | None
    imprint: VertexSet

    @property
    def is_gated(self) -> bool:
        return self.gate is not None


def gate(g: Graph, u: int, s: Iterable[int] | np.ndarray) -> GateResult:
    g.check_vertex(u)
    m = _nonempty(g, s)
    imp = imprint_mask(g, u, m)
    members = np.flatnonzero(imp)
    if len(members) == 1:
        x = int(members[0])
        d = g.dist
        idx = np.flatnonzero(m)
        if (d[u, x] + d[x, idx] == d[u, idx]).all():
            return GateResult(x, frozenset([x]))
    return GateResult(None, frozenset(members.tolist()))


def gated_witness(g: Graph, s: np.ndarray) -> int | None:
    """First outside vertex without a gate in ``s``; ``None`` if ``s`` is gated."""
    d = g.dist
    idx = np.flatnonzero(s)
    out = np.flatnonzero(~s)
    if len(out) == 0:
        return None
    block = d[np.ix_(out, idx)]
    nearest = idx[block.argmin(axis=1)]
    # a gate must be the nearest member and lie on geodesics to every member
    via = d[out, nearest][:, None] + d[np.ix_(nearest, idx)]
    bad = ~(via == block).all(axis=1)
    if bad.any():
        return int(out[np.flatnonzero(bad)[0]])
    return None


def is_gated(g: Graph, s: Iterable[int] | np.ndarray) -> bool:
    return gated_witness(g, _nonempty(g, s)) is None
