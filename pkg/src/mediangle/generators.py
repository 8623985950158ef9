"""Deterministic catalog graphs: hypercubes, cycles, grids, paths, trees,
Cartesian products, finite Coxeter Cayley graphs and covector systems of
central hyperplane arrangements."""

from __future__ import annotations

import random
from collections import deque
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from itertools import product

import numpy as np

from .fourier_motzkin import feasible
from .graph import Graph
from .signs import SignSystem


class GeneratorError(ValueError):
    pass


def hypercube(d: int) -> Graph:
    """``Q_d``; vertex ``i`` has label ``b_0 b_1 ... b_{d-1}`` with ``b_k`` bit ``k`` of ``i``."""
    if d < 0:
        raise GeneratorError("dimension must be non-negative")
    n = 1 << d
    edges = [(i, i | (1 << k)) for i in range(n) for k in range(d) if not i >> k & 1]
    labels = ["".join(str(i >> k & 1) for k in range(d)) or "()" for i in range(n)]
    return Graph(n, edges, name=f"Q{d}", labels=labels)


def cycle(n: int) -> Graph:
    if n < 3:
        raise GeneratorError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def even_cycle(n: int) -> Graph:
    if n < 4 or n % 2:
        raise GeneratorError("even cycle length must be even and at least 4")
    return cycle(n)


def path(n: int) -> Graph:
    """Path on ``n`` vertices."""
    if n < 1:
        raise GeneratorError("path needs at least one vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)], name=f"P{n}")


def grid(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GeneratorError("grid sides must be positive")
    g = cartesian_product(path(a), path(b))
    return Graph(g.n, g.edges, name=f"grid{a}x{b}", labels=g.labels)


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GeneratorError("part sizes must be positive")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)], name=f"K{a},{b}")


def random_tree(n: int, seed: int = 0) -> Graph:
    """Uniform random labelled tree from a random Prüfer sequence."""
    if n < 1:
        raise GeneratorError("tree needs at least one vertex")
    if n <= 2:
        return Graph(n, [(0, 1)] if n == 2 else [], name=f"tree{n}s{seed}")
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    a, b = [i for i in range(n) if degree[i] == 1]
    edges.append((a, b))
    return Graph(n, edges, name=f"tree{n}s{seed}")


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """Vertex ``(a, b)`` gets index ``a * g2.n + b``."""
    n2 = g2.n
    edges = [(a * n2 + b, a * n2 + c) for a in range(g1.n) for b, c in g2.edges]
    edges += [(a * n2 + b, c * n2 + b) for a, c in g1.edges for b in range(n2)]
    labels = [f"({g1.label(a)},{g2.label(b)})" for a in range(g1.n) for b in range(n2)]
    name = f"{g1.name or 'G'}x{g2.name or 'H'}"
    return Graph(g1.n * n2, edges, name=name, labels=labels)


# ---------------------------------------------------------------- Coxeter


@dataclass(frozen=True)
class CoxeterDiagram:
    """Coxeter matrix ``m(i, j)``: 1 on the diagonal, 2 for commuting generators."""

    order_matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        m = self.order_matrix
        k = len(m)
        for i in range(k):
            if len(m[i]) != k or m[i][i] != 1:
                raise GeneratorError("Coxeter matrix must be square with unit diagonal")
            for j in range(k):
                if m[i][j] != m[j][i] or (i != j and m[i][j] < 2):
                    raise GeneratorError("Coxeter matrix must be symmetric with entries >= 2")

    @property
    def generator_count(self) -> int:
        return len(self.order_matrix)

    @classmethod
    def from_edges(cls, k: int, labels: dict[tuple[int, int], int]) -> CoxeterDiagram:
        m = [[1 if i == j else 2 for j in range(k)] for i in range(k)]
        for (i, j), lam in labels.items():
            m[i][j] = m[j][i] = lam
        return cls(tuple(tuple(r) for r in m))

    @classmethod
    def type_a(cls, n: int) -> CoxeterDiagram:
        return cls.from_edges(n, {(i, i + 1): 3 for i in range(n - 1)})

    @classmethod
    def type_b(cls, n: int) -> CoxeterDiagram:
        if n < 2:
            raise GeneratorError("B_n needs n >= 2")
        labels = {(i, i + 1): 3 for i in range(n - 1)}
        labels[(0, 1)] = 4
        return cls.from_edges(n, labels)

    @classmethod
    def dihedral(cls, m: int) -> CoxeterDiagram:
        return cls.from_edges(2, {(0, 1): m})

    @classmethod
    def parse(cls, text: str) -> CoxeterDiagram:
        """``"A3"``, ``"B2"``, ``"I2(5)"``, and products such as ``"A1xA2"``."""
        blocks = []
        for part in text.strip().split("x"):
            part = part.strip()
            if part.startswith("I2(") and part.endswith(")"):
                blocks.append(cls.dihedral(int(part[3:-1])))
            elif part[:1] in "AB" and part[1:].isdigit():
                n = int(part[1:])
                blocks.append(cls.type_a(n) if part[0] == "A" else cls.type_b(n))
            else:
                raise GeneratorError(f"unsupported Coxeter type {part!r}")
        return cls.product(*blocks)

    @classmethod
    def product(cls, *diagrams: CoxeterDiagram) -> CoxeterDiagram:
        k = sum(d.generator_count for d in diagrams)
        m = [[1 if i == j else 2 for j in range(k)] for i in range(k)]
        off = 0
        for d in diagrams:
            for i, row in enumerate(d.order_matrix):
                for j, v in enumerate(row):
                    m[off + i][off + j] = v
            off += d.generator_count
        return cls(tuple(tuple(r) for r in m))

    def components(self) -> list[list[int]]:
        k = self.generator_count
        seen: set[int] = set()
        comps = []
        for s in range(k):
            if s in seen:
                continue
            comp, stack = [], [s]
            seen.add(s)
            while stack:
                i = stack.pop()
                comp.append(i)
                for j in range(k):
                    if j not in seen and self.order_matrix[i][j] >= 3:
                        seen.add(j)
                        stack.append(j)
            comps.append(sorted(comp))
        return comps


def _swap(i: int, j: int, size: int) -> tuple[int, ...]:
    p = list(range(size))
    p[i], p[j] = p[j], p[i]
    return tuple(p)


def _irreducible_model(m: Sequence[Sequence[int]]) -> tuple[int, list[tuple[int, ...]]]:
    """Point count and generator permutations for an irreducible diagram.

    Generators are returned in the diagram's own order.
    """
    k = len(m)
    if k == 1:
        return 2, [(1, 0)]
    if k == 2:
        lam = m[0][1]
        if not 3 <= lam <= 8:
            raise GeneratorError(f"I2({lam}) is outside the supported range")
        # reflections of a regular lam-gon acting on its vertices
        return lam, [tuple((-i) % lam for i in range(lam)), tuple((1 - i) % lam for i in range(lam))]
    adj = {i: [j for j in range(k) if j != i and m[i][j] >= 3] for i in range(k)}
    ends = [i for i in range(k) if len(adj[i]) == 1]
    if len(ends) != 2 or any(len(a) > 2 for a in adj.values()):
        raise GeneratorError("only path-shaped diagrams (A_n, B_n) are supported")
    labels = {frozenset((i, j)): m[i][j] for i in range(k) for j in adj[i]}
    fours = [e for e, v in labels.items() if v == 4]
    if any(v not in (3, 4) for v in labels.values()) or len(fours) > 1:
        raise GeneratorError("unsupported edge labels for a path diagram")
    start = ends[0]
    if fours:
        e = fours[0]
        end_with_four = [i for i in ends if any(frozenset((i, j)) == e for j in adj[i])]
        if not end_with_four:
            raise GeneratorError("label 4 must sit at an end of the path (type B_n)")
        start = end_with_four[0]
    walk = [start]
    while len(walk) < k:
        walk.append(next(j for j in adj[walk[-1]] if j not in walk))
    gens: dict[int, tuple[int, ...]] = {}
    if not fours:
        if k > 4:
            raise GeneratorError("A_n supported for n <= 4")
        for pos, g in enumerate(walk):
            gens[g] = _swap(pos, pos + 1, k + 1)
        return k + 1, [gens[i] for i in range(k)]
    if k > 3:
        raise GeneratorError("B_n supported for n <= 3")
    # signed permutations of 1..k encoded on points 0..2k-1, point 2i+1 = -(i+1)
    size = 2 * k
    flip = list(range(size))
    flip[0], flip[1] = 1, 0
    gens[walk[0]] = tuple(flip)
    for pos, g in enumerate(walk[1:]):
        p = list(range(size))
        a, b = pos, pos + 1
        p[2 * a], p[2 * b] = 2 * b, 2 * a
        p[2 * a + 1], p[2 * b + 1] = 2 * b + 1, 2 * a + 1
        gens[g] = tuple(p)
    return size, [gens[i] for i in range(k)]


def _cayley(identity: tuple, gens: list[Callable[[tuple], tuple]], name: str) -> Graph:
    index = {identity: 0}
    order = [identity]
    queue = deque([identity])
    edges = set()
    while queue:
        w = queue.popleft()
        for act in gens:
            v = act(w)
            if v not in index:
                index[v] = len(order)
                order.append(v)
                queue.append(v)
            a, b = index[w], index[v]
            edges.add((min(a, b), max(a, b)))
    return Graph(len(order), sorted(edges), name=name, labels=[str(w) for w in order])


def coxeter_cayley(diagram: CoxeterDiagram, name: str | None = None) -> Graph:
    """Cayley graph with respect to the simple generators, vertices in BFS order
    from the identity.  Elements are tuples of permutations, one per irreducible
    component; the generator acts by right multiplication."""
    comps = diagram.components()
    models = []
    for comp in comps:
        sub = [[diagram.order_matrix[i][j] for j in comp] for i in comp]
        models.append(_irreducible_model(sub))
    gen_actions: list[Callable[[tuple], tuple]] = []
    slot = {}
    for ci, comp in enumerate(comps):
        for gi, g in enumerate(comp):
            slot[g] = (ci, gi)
    for g in range(diagram.generator_count):
        ci, gi = slot[g]
        perm = models[ci][1][gi]

        def act(w: tuple, ci=ci, perm=perm) -> tuple:
            piece = w[ci]
            return w[:ci] + (tuple(piece[perm[p]] for p in range(len(perm))),) + w[ci + 1 :]

        gen_actions.append(act)
    identity = tuple(tuple(range(size)) for size, _ in models)
    return _cayley(identity, gen_actions, name or "coxeter")


def coxeter_graph(type_name: str) -> Graph:
    return coxeter_cayley(CoxeterDiagram.parse(type_name), name=type_name)


# ---------------------------------------------------------------- arrangements


@dataclass(frozen=True)
class ArrangementSpec:
    dimension: int
    normals: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        for a in self.normals:
            if len(a) != self.dimension:
                raise GeneratorError("normal has wrong dimension")
            if not any(a):
                raise GeneratorError("zero normal")
        for i, a in enumerate(self.normals):
            for b in self.normals[i + 1 :]:
                if _parallel(a, b):
                    raise GeneratorError(f"parallel normals {a} and {b}")

    @classmethod
    def of(cls, normals: Sequence[Sequence[int]]) -> ArrangementSpec:
        rows = tuple(tuple(int(v) for v in a) for a in normals)
        if not rows:
            raise GeneratorError("arrangement needs at least one hyperplane")
        return cls(len(rows[0]), rows)


def _parallel(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(a[i] * b[j] == a[j] * b[i] for i in range(len(a)) for j in range(i + 1, len(a)))


MAX_HYPERPLANES = 6


def central_arrangement_system(spec: ArrangementSpec) -> SignSystem:
    """All covectors of a central arrangement: each of the ``3^n`` sign patterns
    is tested for exact feasibility."""
    n = len(spec.normals)
    if n > MAX_HYPERPLANES:
        raise GeneratorError(f"at most {MAX_HYPERPLANES} hyperplanes supported")
    found = [signs for signs in product((-1, 0, 1), repeat=n) if feasible(spec.normals, signs)]
    return SignSystem(n, np.array(found, dtype=np.int8))


def uniform_rank3_four() -> ArrangementSpec:
    """Four generic central planes in R^3."""
    return ArrangementSpec.of([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)])


def coordinate_arrangement(d: int) -> ArrangementSpec:
    return ArrangementSpec.of([tuple(int(i == j) for j in range(d)) for i in range(d)])
