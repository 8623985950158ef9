"""Base-point orders: ``v ≼_u w`` iff ``v`` lies on a shortest ``u``-``w`` path."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph


@dataclass(frozen=True)
class ApexResult:
    basepoint: int
    x: int
    y: int
    apices: frozenset[int]

    @property
    def unique(self) -> bool:
        return len(self.apices) == 1


def precedes(g: Graph, u: int, v: int, w: int) -> bool:
    """``v ≼_u w``."""
    d = g.dist
    return bool(d[u, v] + d[v, w] == d[u, w])


def u_apices(g: Graph, u: int, x: int, y: int) -> ApexResult:
    """Maximal elements of ``[u, x] ∩ [u, y]`` under ``≼_u``."""
    for v in (u, x, y):
        g.check_vertex(v)
    d = g.dist
    common = np.flatnonzero((d[u] + d[x] == d[u, x]) & (d[u] + d[y] == d[u, y]))
    sub = d[np.ix_(common, common)]
    du = d[u, common]
    below = du[:, None] + sub == du[None, :]  # below[i, j]: common[i] ≼_u common[j]
    np.fill_diagonal(below, False)
    maximal = common[~below.any(axis=1)]
    return ApexResult(u, x, y, frozenset(maximal.tolist()))


def _first_violation_at(g: Graph, u: int) -> tuple[int, int] | None:
    d = g.dist
    du = d[u]
    below = du[None, :] + d == du[:, None]  # below[x, v]: v ∈ [u, x]
    n = g.n
    for x in range(n):
        common = below[x][None, :] & below[x:]
        top = np.where(common, du[None, :], -1).max(axis=1)
        at_top = common & (du[None, :] == top[:, None])
        counts = at_top.sum(axis=1)
        cand = at_top.argmax(axis=1)
        # a unique apex must dominate the whole common interval
        covered = ~(common & ~below[cand]).any(axis=1)
        bad = (counts != 1) | ~covered
        if bad.any():
            return x, x + int(np.flatnonzero(bad)[0])
    return None


def apiculate_violation(g: Graph) -> ApexResult | None:
    """Least triple ``(u, x, y)``, ``x <= y``, whose ``u``-apex is not unique."""
    for u in range(g.n):
        hit = _first_violation_at(g, u)
        if hit is not None:
            return u_apices(g, u, *hit)
    return None


def is_apiculate(g: Graph) -> tuple[bool, ApexResult | None]:
    """Return ``(True, None)`` or ``(False, ApexResult)`` with at least two apices."""
    bad = apiculate_violation(g)
    return bad is None, bad


def is_lattice_at(g: Graph, u: int) -> bool:
    g.check_vertex(u)
    d = g.dist
    far = int(d[u].argmax())
    if not (d[u] + d[far] == d[u, far]).all():
        return False
    return _first_violation_at(g, u) is None


def revalidate_apex_witness(g: Graph, res: ApexResult) -> bool:
    """Brute-force recheck that the triple has at least two incomparable apices."""
    u, x, y = res.basepoint, res.x, res.y
    d = g.dist
    common = [v for v in range(g.n) if d[u, v] + d[v, x] == d[u, x] and d[u, v] + d[v, y] == d[u, y]]
    maximal = [
        v for v in common if not any(w != v and d[u, v] + d[v, w] == d[u, w] for w in common)
    ]
    return len(maximal) >= 2 and set(maximal) == set(res.apices)
