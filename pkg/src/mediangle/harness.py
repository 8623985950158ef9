"""Verification of the main equivalences and supporting lemmas on concrete graphs,
plus two exploratory probes."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any

import numpy as np

from . import cells as cellmod
from .graph import Graph, gated_witness, interval_mask
from .mediangle import (
    CYCLE_CONDITION,
    is_bipartite_mediangle,
    revalidate_cycle_witness,
)
from .order import is_apiculate, revalidate_apex_witness
from .partial_cube import enumerate_convex_cycles, recognize_partial_cube, theta_partition
from .signs import (
    SignSystem,
    check_axioms,
    contract,
    face_lattice,
    is_simplicial_om,
    simplify,
    tope_graph_of_rows,
    topes_and_graph,
    zone_graph,
)

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"


@dataclass
class Check:
    name: str
    passed: bool
    witness: Any = None

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"name": self.name, "pass": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class VerdictReport:
    subject: str
    checks: list[Check] = field(default_factory=list)
    applicable: bool = True
    data: dict[str, Any] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def summary(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def status(self) -> str:
        if not self.applicable:
            return NOT_APPLICABLE
        return PASS if self.summary else FAIL

    def add(self, name: str, passed: bool, witness: Any = None) -> bool:
        self.checks.append(Check(name, bool(passed), witness))
        return bool(passed)

    def to_dict(self, timing: bool = False) -> dict[str, Any]:
        out: dict[str, Any] = {
            "subject": self.subject,
            "status": self.status,
            "summary": self.summary,
            "checks": [c.to_dict() for c in self.checks],
        }
        out.update(self.data)
        if timing:
            out["elapsed"] = round(self.elapsed, 6)
        return out


def _subject(g: Graph) -> str:
    return g.name or f"graph(n={g.n})"


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        rep = fn(*args, **kwargs)
        rep.elapsed = time.perf_counter() - t0
        return rep

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def labelled_isomorphism(g: Graph, theta, system: SignSystem) -> tuple[bool, Any]:
    """Is ``v -> tope of {v}`` a bijection onto the topes of ``system`` that
    preserves adjacency in both directions?"""
    vt = cellmod.vertex_topes(theta)
    topes, tg = topes_and_graph(system)
    if sorted(vt) != sorted(topes) or len(set(vt)) != g.n:
        return False, {"reason": "vertex topes differ from system topes"}
    pos = {t: i for i, t in enumerate(topes)}
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if g.has_edge(a, b) != tg.has_edge(pos[vt[a]], pos[vt[b]]):
                return False, {"reason": "adjacency mismatch", "pair": [a, b]}
    return True, None


def cell_face_ranks(system: SignSystem, cells: list[cellmod.Cell], lattice=None) -> list[int]:
    if lattice is None:
        lattice = face_lattice(system, check=False)
    return [int(lattice.height[system.index(c.covector)]) for c in cells]


@_timed
def verify_theorem1(g: Graph) -> VerdictReport:
    """Mediangle graphs reconstruct to a simple COM whose tope graph is ``g``."""
    rep = VerdictReport(_subject(g))
    med = is_bipartite_mediangle(g)
    rep.data["mediangle"] = med.is_mediangle
    if not med.is_mediangle:
        rep.applicable = False
        rep.add("hypothesis: bipartite mediangle", True, med.to_dict())
        return rep
    theta = theta_partition(g)
    cells = cellmod.enumerate_cells(g, theta)
    system = cellmod.reconstruct_system(g, theta, cells)
    axioms = check_axioms(system)
    rep.data["covectors"] = len(system)
    rep.add("simple", axioms.simple, axioms.to_dict()["simple"] if not axioms.simple else None)
    rep.add("FS", axioms.fs, axioms.to_dict()["FS"] if not axioms.fs else None)
    rep.add("SE", axioms.se, axioms.to_dict()["SE"] if not axioms.se else None)
    ok, why = labelled_isomorphism(g, theta, system)
    rep.add("vertex-tope isomorphism", ok, why)
    chi = cellmod.euler_characteristic(cells, cell_face_ranks(system, cells))
    rep.data["euler"] = chi
    rep.add("euler characteristic 1", chi == 1, None if chi == 1 else {"euler": chi})
    return rep


def _simplicial_om(g: Graph) -> bool:
    system = cellmod.reconstruct_system(g)
    if not check_axioms(system).is_om:
        return False
    return is_simplicial_om(system).simplicial


@_timed
def verify_theorem2(g: Graph) -> VerdictReport:
    """For antipodal partial cubes: mediangle ⇔ apiculate ⇔ simplicial OM tope graph."""
    rep = VerdictReport(_subject(g))
    pc = recognize_partial_cube(g)
    if not pc.ok or not cellmod.is_antipodal_subgraph(g, range(g.n)):
        rep.applicable = False
        rep.add("hypothesis: antipodal partial cube", True, {"partial_cube": pc.ok})
        return rep
    med = is_bipartite_mediangle(g)
    api, apex = is_apiculate(g)
    p3 = _simplicial_om(g)
    p1 = med.is_mediangle
    rep.data.update({"P1": p1, "P2": api, "P3": p3, "equivalent": p1 == api == p3})
    if not p1 and med.failed_condition == CYCLE_CONDITION:
        rep.add("mediangle witness re-validates", revalidate_cycle_witness(g, tuple(med.witness)),
                med.witness)
    if not api:
        rep.add(
            "apiculate witness re-validates",
            revalidate_apex_witness(g, apex),
            [apex.basepoint, apex.x, apex.y, sorted(apex.apices)],
        )
    rep.add("P1 == P2 == P3", p1 == api == p3, None if p1 == api == p3 else [p1, api, p3])
    return rep


def sample_pairs(n: int, budget: int = 500, full_up_to: int = 200, seed: int = 0) -> list[tuple[int, int]]:
    pairs = list(combinations(range(n), 2))
    if n <= full_up_to:
        return pairs
    rng = random.Random(seed)
    return sorted(rng.sample(pairs, min(budget, len(pairs))))


@_timed
def verify_lemma_suite(g: Graph, seed: int = 0) -> VerdictReport:
    """Convex cycles gated, intervals mediangle, mediangle ⇒ apiculate, and
    antipodal intervals gated in apiculate partial cubes."""
    rep = VerdictReport(_subject(g))
    pc = recognize_partial_cube(g)
    med = is_bipartite_mediangle(g)
    api, apex = is_apiculate(g)
    rep.data.update({"mediangle": med.is_mediangle, "apiculate": api})
    if med.is_mediangle:
        cycles = enumerate_convex_cycles(g, pc.theta)
        bad = None
        for c in cycles:
            w = gated_witness(g, g.mask(c.vertices))
            if w is not None:
                bad = {"cycle": list(c.vertices), "vertex": w}
                break
        rep.add("convex cycles gated", bad is None, bad)
        seen: set[frozenset[int]] = set()
        bad = None
        for u, v in sample_pairs(g.n, seed=seed):
            members = frozenset(np.flatnonzero(interval_mask(g, u, v)).tolist())
            if members in seen:
                continue
            seen.add(members)
            if not is_bipartite_mediangle(g.induced(members)).is_mediangle:
                bad = [u, v]
                break
        rep.data["intervals_checked"] = len(seen)
        rep.add("intervals mediangle", bad is None, bad)
        rep.add(
            "mediangle implies apiculate",
            api,
            None if api else [apex.basepoint, apex.x, apex.y, sorted(apex.apices)],
        )
    if pc.ok and api:
        bad = None
        for m, _ in cellmod.antipodal_intervals(g):
            w = gated_witness(g, m)
            if w is not None:
                bad = {"set": np.flatnonzero(m).tolist(), "vertex": w}
                break
        rep.add("antipodal intervals gated", bad is None, bad)
    if not rep.checks:
        rep.applicable = False
    return rep


@dataclass(frozen=True)
class DownwardResult:
    z: int
    u: int
    trace: frozenset[int]
    cell: cellmod.Cell | None

    @property
    def found(self) -> bool:
        return self.cell is not None


def explore_downward_cell(
    g: Graph, z: int, u: int, s, cells: list[cellmod.Cell] | None = None
) -> DownwardResult:
    """Smallest cell ``C`` containing ``z`` with ``C ⊆ [u, z]`` and ``N(z) ∩ C = s``."""
    s = frozenset(int(v) for v in s)
    upper = frozenset(np.flatnonzero(interval_mask(g, z, u)).tolist())
    nz = frozenset(g.neighbors(z))
    if not s <= nz & upper:
        raise ValueError("trace must consist of neighbours of z inside [z, u]")
    if cells is None:
        cells = cellmod.enumerate_cells(g)
    for c in cells:
        if z in c.vertices and c.vertices <= upper and c.vertices & nz == s:
            return DownwardResult(z, u, s, c)
    return DownwardResult(z, u, s, None)


def explore_downward_table(g: Graph, samples: int = 20, seed: int = 0) -> list[dict[str, Any]]:
    """Random ``(z, u, S)`` probes with ``|S| >= 2``, reported as rows."""
    rng = random.Random(seed)
    cells = cellmod.enumerate_cells(g)
    d = g.dist
    rows = []
    attempts = 0
    while len(rows) < samples and attempts < 50 * samples:
        attempts += 1
        z, u = rng.randrange(g.n), rng.randrange(g.n)
        down = [w for w in g.neighbors(z) if d[u, w] == d[u, z] - 1]
        if len(down) < 2:
            continue
        size = rng.randint(2, len(down))
        s = sorted(rng.sample(down, size))
        res = explore_downward_cell(g, z, u, s, cells)
        rows.append(
            {
                "z": z,
                "u": u,
                "S": s,
                "found": res.found,
                "cell": sorted(res.cell.vertices) if res.found else None,
            }
        )
    return rows


@_timed
def explore_zone_mediangle(g: Graph, c: int) -> VerdictReport:
    """Build the zone graph of class ``c`` and record whether it is mediangle."""
    rep = VerdictReport(f"{_subject(g)}:zone{c}")
    theta = theta_partition(g)
    cycles = enumerate_convex_cycles(g, theta)
    z = zone_graph(g, theta, cycles, c)
    med = is_bipartite_mediangle(z)
    degrees = [z.degree(v) for v in range(z.n)]
    rep.data.update(
        {
            "zone_vertices": z.n,
            "zone_edges": z.edge_count,
            "min_degree": min(degrees),
            "max_degree": max(degrees),
            "zone_mediangle": med.is_mediangle,
        }
    )
    return rep


def round_trip(system: SignSystem) -> tuple[bool, Any]:
    """Rebuild ``system`` from its tope graph and compare up to reorientation and
    relabelling of elements, using the tope labels to match Θ-classes to elements."""
    topes, g = topes_and_graph(system)
    theta = theta_partition(g)
    rebuilt = cellmod.reconstruct_system(g, theta)
    T = np.array(topes, dtype=np.int8)
    k = system.ground_size
    if theta.class_count != k:
        return False, {"classes": theta.class_count, "elements": k}
    element_of = []
    for members in theta.classes:
        a, b = members[0]
        diff = np.flatnonzero(T[a] != T[b])
        element_of.append(int(diff[0]))
    if sorted(element_of) != list(range(k)):
        return False, {"reason": "classes do not match elements"}
    mapped = np.zeros((len(rebuilt), k), dtype=np.int8)
    for c, e in enumerate(element_of):
        mapped[:, e] = rebuilt.covectors[:, c] * T[theta.root, e]
    same = SignSystem(k, mapped) == system
    return same, None if same else {"rebuilt": SignSystem(k, mapped).strings()}


def zone_matches_contraction(g: Graph, c: int) -> bool:
    """Zone graph of class ``c`` equals the tope graph of the simplified
    contraction of the reconstructed system, under edge -> covector labels."""
    theta = theta_partition(g)
    cycles = enumerate_convex_cycles(g, theta)
    z = zone_graph(g, theta, cycles, c)
    system = cellmod.reconstruct_system(g, theta)
    hyper, keep = simplify(contract(system, [c]))
    rest = [e for e in range(theta.class_count) if e != c]
    cols = [rest[i] for i in keep]
    labels = []
    for a, b in sorted(theta.classes[c]):
        cov = cellmod.covector_of_mask(theta, g.mask([a, b]))
        labels.append(tuple(cov[e] for e in cols))
    if sorted(labels) != sorted(topes_and_graph(hyper)[0]) or len(set(labels)) != z.n:
        return False
    tg = tope_graph_of_rows(np.array(labels, dtype=np.int8))
    return all(z.has_edge(i, j) == tg.has_edge(i, j) for i in range(z.n) for j in range(i + 1, z.n))
