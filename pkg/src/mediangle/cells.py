"""Antipodal subgraphs, cells (gated antipodal subgraphs) and the covector
system they induce on a partial cube."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from .graph import Graph, GraphError, _nonempty, gated_witness, interval_mask
from .partial_cube import ThetaPartition, theta_partition
from .signs import SignSystem, SignVector


@dataclass(frozen=True)
class Cell:
    vertices: frozenset[int]
    antipode: dict[int, int]
    covector: SignVector
    diameter: int

    @property
    def size(self) -> int:
        return len(self.vertices)


def _antipodes(g: Graph, s: np.ndarray) -> dict[int, int] | None:
    d = g.dist
    idx = np.flatnonzero(s)
    sub = d[np.ix_(idx, idx)]
    out: dict[int, int] = {}
    for i, v in enumerate(idx):
        w = int(idx[sub[i].argmax()])
        if not np.array_equal(interval_mask(g, int(v), w), s):
            return None
        out[int(v)] = w
    return out


def antipode_in(g: Graph, s: Iterable[int] | np.ndarray, v: int) -> int | None:
    """The ``w`` in ``s`` with ``s = [v, w]``, if any."""
    m = _nonempty(g, s)
    g.check_vertex(v)
    if not m[v]:
        raise GraphError(f"vertex {v} is not in the set")
    idx = np.flatnonzero(m)
    w = int(idx[g.dist[v, idx].argmax()])
    return w if np.array_equal(interval_mask(g, v, w), m) else None


def is_antipodal_subgraph(g: Graph, s: Iterable[int] | np.ndarray) -> bool:
    return _antipodes(g, _nonempty(g, s)) is not None


def covector_of_mask(theta: ThetaPartition, s: np.ndarray) -> SignVector:
    sides = theta.sides[:, s]
    pos = (sides > 0).any(axis=1)
    neg = (sides < 0).any(axis=1)
    return tuple(0 if p and q else (1 if p else -1) for p, q in zip(pos, neg))


def covector_of_cell(g: Graph, theta: ThetaPartition, s: Iterable[int] | np.ndarray) -> SignVector:
    """0 on classes separating two members of ``s``, the common side elsewhere."""
    m = _nonempty(g, s)
    if _antipodes(g, m) is None or gated_witness(g, m) is not None:
        raise GraphError("vertex set is not a cell (gated antipodal subgraph)")
    return covector_of_mask(theta, m)


def antipodal_intervals(g: Graph) -> list[tuple[np.ndarray, dict[int, int]]]:
    """Every antipodal vertex set, found as an interval ``[v, w]``, in canonical order."""
    seen: set[bytes] = set()
    found: list[tuple[np.ndarray, dict[int, int]]] = []
    for v in range(g.n):
        for w in range(v, g.n):
            m = interval_mask(g, v, w)
            key = np.packbits(m).tobytes()
            if key in seen:
                continue
            seen.add(key)
            anti = _antipodes(g, m)
            if anti is not None:
                found.append((m, anti))
    found.sort(key=lambda item: (int(item[0].sum()), np.flatnonzero(item[0]).tolist()))
    return found


def enumerate_cells(g: Graph, theta: ThetaPartition | None = None) -> list[Cell]:
    """All gated antipodal subgraphs of a partial cube, smallest first."""
    if theta is None:
        theta = theta_partition(g)
    d = g.dist
    cells = []
    for m, anti in antipodal_intervals(g):
        if gated_witness(g, m) is not None:
            continue
        v = next(iter(anti))
        cells.append(
            Cell(
                frozenset(np.flatnonzero(m).tolist()),
                anti,
                covector_of_mask(theta, m),
                int(d[v, anti[v]]),
            )
        )
    return cells


def reconstruct_system(
    g: Graph, theta: ThetaPartition | None = None, cells: list[Cell] | None = None
) -> SignSystem:
    """Covectors of all cells; vertex ``v`` maps to the tope of the cell ``{v}``."""
    if theta is None:
        theta = theta_partition(g)
    if cells is None:
        cells = enumerate_cells(g, theta)
    return SignSystem(theta.class_count, [c.covector for c in cells])


def vertex_topes(theta: ThetaPartition) -> list[SignVector]:
    return [tuple(int(x) for x in col) for col in theta.sides.T]


def euler_characteristic(cells: Sequence[Cell], lattice_ranks: Sequence[int]) -> int:
    """Alternating count ``Σ (-1)^rank`` over cells, ``rank`` being the face rank."""
    if len(cells) != len(lattice_ranks):
        raise ValueError("one rank per cell required")
    return sum(-1 if r % 2 else 1 for r in lattice_ranks)
