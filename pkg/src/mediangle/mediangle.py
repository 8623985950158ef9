"""Bipartite mediangle recognition with witnesses for both defining conditions."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Any

import numpy as np

from .graph import Graph, convexity_witness, interval_mask
from .partial_cube import ConvexCycle, enumerate_convex_cycles, recognize_partial_cube

CYCLE_CONDITION = "CycleCondition"
CYCLE_INTERSECTION = "CycleIntersection"
NOT_PARTIAL_CUBE = "NotPartialCube"


@dataclass(frozen=True)
class MediangleVerdict:
    is_mediangle: bool
    failed_condition: str | None = None
    witness: Any = None

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"is_mediangle": self.is_mediangle}
        if not self.is_mediangle:
            out["failed_condition"] = self.failed_condition
            out["witness"] = self.witness
        return out


def _forks(cycles: list[ConvexCycle]) -> dict[tuple[int, int, int], list[ConvexCycle]]:
    """Map ``(z, x, y)`` with ``x < y`` to the cycles containing edges ``zx`` and ``zy``."""
    table: dict[tuple[int, int, int], list[ConvexCycle]] = defaultdict(list)
    for c in cycles:
        vs = c.vertices
        k = len(vs)
        for i, z in enumerate(vs):
            x, y = sorted((vs[i - 1], vs[(i + 1) % k]))
            table[(z, x, y)].append(c)
    return table


def check_cycle_condition(
    g: Graph, cycles: list[ConvexCycle]
) -> tuple[bool, tuple[int, int, int, int] | None]:
    """Return ``(True, None)`` or ``(False, (u, x, y, z))`` for the least failing fork
    in ``(u, z, x, y)`` order."""
    d = g.dist
    forks = _forks(cycles)
    for u in range(g.n):
        du = d[u]
        for z in range(g.n):
            if du[z] < 2:
                continue
            lower = [w for w in g.adjacency[z] if du[w] == du[z] - 1]
            for x, y in combinations(lower, 2):
                for c in forks.get((z, x, y), ()):
                    o = c.opposite(z)
                    if du[o] + d[o, x] == du[x] and du[o] + d[o, y] == du[y]:
                        break
                else:
                    return False, (u, x, y, z)
    return True, None


def check_cycle_intersections(
    cycles: list[ConvexCycle],
) -> tuple[bool, tuple[ConvexCycle, ConvexCycle, tuple[int, ...]] | None]:
    """Every two cycles share nothing, one vertex, or one edge.

    On failure returns the first offending pair and their common vertices.
    """
    sets = [c.vertex_set for c in cycles]
    for i, j in combinations(range(len(cycles)), 2):
        common = sets[i] & sets[j]
        if len(common) <= 1:
            continue
        if len(common) == 2:
            a, b = sorted(common)
            if cycles[i].has_edge(a, b) and cycles[j].has_edge(a, b):
                continue
        return False, (cycles[i], cycles[j], tuple(sorted(common)))
    return True, None


def is_bipartite_mediangle(g: Graph) -> MediangleVerdict:
    pc = recognize_partial_cube(g)
    if not pc.ok:
        return MediangleVerdict(False, NOT_PARTIAL_CUBE, _describe_pc_failure(pc))
    cycles = enumerate_convex_cycles(g, pc.theta)
    ok, pair = check_cycle_intersections(cycles)
    if not ok:
        c1, c2, common = pair
        return MediangleVerdict(
            False,
            CYCLE_INTERSECTION,
            {"cycles": [list(c1.vertices), list(c2.vertices)], "common": list(common)},
        )
    ok, fork = check_cycle_condition(g, cycles)
    if not ok:
        return MediangleVerdict(False, CYCLE_CONDITION, list(fork))
    return MediangleVerdict(True)


def _describe_pc_failure(pc) -> dict[str, Any]:
    if hasattr(pc, "odd_cycle"):
        return {"kind": "NotBipartite", "odd_cycle": list(pc.odd_cycle)}
    return {"kind": "NotPartialCube", "edge": list(pc.edge), "witness": list(pc.witness)}


def revalidate_cycle_witness(g: Graph, witness: tuple[int, int, int, int]) -> bool:
    """Re-check a Cycle Condition counterexample from the definitions alone.

    True iff the fork is genuine and no convex cycle through ``x-z-y`` has its
    vertex opposite ``z`` in ``[u, x] ∩ [u, y]``.  Candidate cycles are the
    intervals ``[z, o]`` that induce a cycle, tested for convexity directly.
    """
    u, x, y, z = witness
    d = g.dist
    if not (d[u, x] == d[u, y] == d[u, z] - 1 and d[x, z] == d[y, z] == 1 and x != y):
        return False
    for o in range(g.n):
        m = interval_mask(g, z, o)
        if not (m[x] and m[y]) or m.sum() != 2 * d[z, o] or d[z, o] < 2:
            continue
        sub = np.flatnonzero(m)
        if any(sum(1 for w in g.adjacency[v] if m[w]) != 2 for v in sub):
            continue
        if convexity_witness(g, m) is not None:
            continue
        if d[u, o] + d[o, x] == d[u, x] and d[u, o] + d[o, y] == d[u, y]:
            return False
    return True
