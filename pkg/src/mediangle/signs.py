"""Sign vectors and finite sign systems: COM/OM axioms, the big face lattice,
topes, simpliciality, deletion, contraction and zone graphs."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .graph import Graph, GraphError
from .partial_cube import ConvexCycle, ThetaPartition

SignVector = tuple[int, ...]

_SYMBOL = {0: "0", 1: "+", -1: "-"}
# canonical entry order 0 < - < +
_RANK = np.array([1, 0, 2], dtype=np.int8)  # indexed by value + 1


class SignSystemError(ValueError):
    pass


class SimplicialityMismatch(AssertionError):
    """The degree and Boolean-interval criteria disagreed on some tope."""


def to_string(x: Sequence[int]) -> str:
    return "".join(_SYMBOL[int(v)] for v in x)


def _check_pair(x: Sequence[int], y: Sequence[int]) -> None:
    if len(x) != len(y):
        raise SignSystemError(f"sign vectors of different lengths {len(x)} and {len(y)}")


def compose(x: Sequence[int], y: Sequence[int]) -> SignVector:
    _check_pair(x, y)
    return tuple(a if a != 0 else b for a, b in zip(x, y))


def separator(x: Sequence[int], y: Sequence[int]) -> frozenset[int]:
    _check_pair(x, y)
    return frozenset(e for e, (a, b) in enumerate(zip(x, y)) if a * b == -1)


def negate(x: Sequence[int]) -> SignVector:
    return tuple(-a for a in x)


def support(x: Sequence[int]) -> frozenset[int]:
    return frozenset(e for e, a in enumerate(x) if a != 0)


def _canonical(rows: np.ndarray) -> np.ndarray:
    if len(rows) == 0 or rows.shape[1] == 0:
        return rows[:1]
    keys = _RANK[rows + 1]
    order = np.lexsort(keys.T[::-1])
    rows = rows[order]
    keep = np.ones(len(rows), dtype=bool)
    keep[1:] = (rows[1:] != rows[:-1]).any(axis=1)
    return rows[keep]


class SignSystem:
    """Duplicate-free set of sign vectors over a ground set of ``ground_size`` elements.

    ``covectors`` is an ``(N, k)`` int8 array in canonical order (lexicographic,
    ``0 < - < +`` per entry).
    """

    __slots__ = ("ground_size", "covectors", "element_names", "_index")

    def __init__(
        self,
        ground_size: int,
        covectors: Iterable[Sequence[int]] | np.ndarray,
        element_names: Sequence[str] | None = None,
        *,
        allow_duplicates: bool = True,
    ) -> None:
        rows = np.array(list(covectors) if not isinstance(covectors, np.ndarray) else covectors,
                        dtype=np.int8)
        if rows.ndim == 1 and rows.size == 0:
            rows = rows.reshape(0, ground_size)
        if rows.ndim != 2 or rows.shape[1] != ground_size:
            raise SignSystemError(f"every covector must have length {ground_size}")
        if not np.isin(rows, (-1, 0, 1)).all():
            raise SignSystemError("entries must be -1, 0 or +1")
        canon = _canonical(rows)
        if not allow_duplicates and len(canon) != len(rows):
            raise SignSystemError("duplicate covector")
        self.ground_size = ground_size
        self.covectors = canon
        self.covectors.setflags(write=False)
        if element_names is not None and len(element_names) != ground_size:
            raise SignSystemError("element_names must match ground_size")
        self.element_names = tuple(element_names) if element_names is not None else None
        self._index = {row.tobytes(): i for i, row in enumerate(canon)}

    def __len__(self) -> int:
        return len(self.covectors)

    def __iter__(self):
        return (tuple(int(v) for v in row) for row in self.covectors)

    def __contains__(self, x: Sequence[int]) -> bool:
        return np.asarray(x, dtype=np.int8).tobytes() in self._index

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SignSystem)
            and self.ground_size == other.ground_size
            and np.array_equal(self.covectors, other.covectors)
        )

    def __hash__(self) -> int:
        return hash((self.ground_size, self.covectors.tobytes()))

    def index(self, x: Sequence[int]) -> int:
        return self._index[np.asarray(x, dtype=np.int8).tobytes()]

    def strings(self) -> list[str]:
        return [to_string(row) for row in self.covectors]

    def __repr__(self) -> str:
        return f"<SignSystem k={self.ground_size} |L|={len(self)}>"


# ---------------------------------------------------------------- axioms


@dataclass
class AxiomReport:
    simple: bool
    simple_witness: int | None
    fs: bool
    fs_witness: tuple[SignVector, SignVector] | None
    se: bool
    se_witness: tuple[SignVector, SignVector, int] | None
    has_zero: bool

    @property
    def is_com(self) -> bool:
        return self.simple and self.fs and self.se

    @property
    def is_om(self) -> bool:
        return self.is_com and self.has_zero

    def to_dict(self) -> dict[str, Any]:
        def vec(v):
            return to_string(v)

        return {
            "simple": {"pass": self.simple, "element": self.simple_witness},
            "FS": {
                "pass": self.fs,
                "witness": None if self.fs_witness is None else [vec(v) for v in self.fs_witness],
            },
            "SE": {
                "pass": self.se,
                "witness": None
                if self.se_witness is None
                else [vec(self.se_witness[0]), vec(self.se_witness[1]), self.se_witness[2]],
            },
            "has_zero": self.has_zero,
            "is_COM": self.is_com,
            "is_OM": self.is_om,
        }


def _row(v: np.ndarray) -> SignVector:
    return tuple(int(a) for a in v)


def _check_simple(s: SignSystem) -> int | None:
    L = s.covectors
    for e in range(s.ground_size):
        if set(np.unique(L[:, e]).tolist()) != {-1, 0, 1}:
            return e
    return None


def _check_fs(s: SignSystem) -> tuple[SignVector, SignVector] | None:
    L = s.covectors
    for i, x in enumerate(L):
        comp = np.where(x != 0, x, -L)
        missing = [j for j, row in enumerate(comp) if row.tobytes() not in s._index]
        if missing:
            return _row(x), _row(L[missing[0]])
    return None


def _check_se(s: SignSystem) -> tuple[SignVector, SignVector, int] | None:
    L = s.covectors.astype(np.int16)
    n, k = L.shape
    zero_at = (L == 0).astype(np.int32)  # Z x e
    for i in range(n):
        x = L[i]
        sep = (x[None, :] * L) == -1  # Y x e
        rows = np.flatnonzero(sep.any(axis=1))
        if len(rows) == 0:
            continue
        comp = np.where(x[None, :] != 0, x[None, :], L[rows])  # X∘Y per Y
        fixed = ~sep[rows]
        # agree[y, z]: Z matches X∘Y off Sep(X, Y)
        agree = ((L[None, :, :] == comp[:, None, :]) | ~fixed[:, None, :]).all(axis=2)
        ok = (agree.astype(np.int32) @ zero_at) > 0
        bad = sep[rows] & ~ok
        if bad.any():
            r, e = np.argwhere(bad)[0]
            return _row(L[i]), _row(L[rows[r]]), int(e)
    return None


def check_axioms(s: SignSystem) -> AxiomReport:
    if len(s) == 0:
        raise SignSystemError("empty sign system")
    e = _check_simple(s)
    fs = _check_fs(s)
    se = _check_se(s)
    zero = (0,) * s.ground_size in s
    return AxiomReport(e is None, e, fs is None, fs, se is None, se, zero)


# ---------------------------------------------------------------- face lattice


@dataclass(frozen=True)
class FaceLattice:
    """Covector order with ``0 <= -, +`` entrywise.

    ``leq[i, j]`` says covector ``i`` is below covector ``j``.  ``rank_of`` is the
    longest chain length from a minimal covector, ``height`` the longest chain
    length up to a maximal one (the rank of the face).
    """

    leq: np.ndarray = field(repr=False)
    rank_of: np.ndarray = field(repr=False)
    height: np.ndarray = field(repr=False)
    top_rank: int
    is_com: bool

    def pairs(self) -> list[tuple[int, int]]:
        return [tuple(p) for p in np.argwhere(self.leq).tolist()]

    def maximal(self) -> np.ndarray:
        strict = self.leq & ~np.eye(len(self.leq), dtype=bool)
        return np.flatnonzero(~strict.any(axis=1))


def order_matrix(L: np.ndarray) -> np.ndarray:
    return ((L[:, None, :] == 0) | (L[:, None, :] == L[None, :, :])).all(axis=2)


def face_lattice(s: SignSystem, *, check: bool = True) -> FaceLattice:
    L = s.covectors
    n = len(L)
    leq = order_matrix(L)
    strict = leq & ~np.eye(n, dtype=bool)
    size = (L != 0).sum(axis=1)
    order = np.argsort(size, kind="stable")
    rank = np.zeros(n, dtype=np.int64)
    for j in order:
        below = np.flatnonzero(strict[:, j])
        if len(below):
            rank[j] = rank[below].max() + 1
    height = np.zeros(n, dtype=np.int64)
    for i in order[::-1]:
        above = np.flatnonzero(strict[i])
        if len(above):
            height[i] = height[above].max() + 1
    is_com = check_axioms(s).is_com if check else True
    return FaceLattice(leq, rank, height, int(rank.max()) if n else 0, is_com)


# ---------------------------------------------------------------- topes


def tope_indices(s: SignSystem, lattice: FaceLattice | None = None) -> np.ndarray:
    if lattice is None:
        lattice = face_lattice(s, check=False)
    return lattice.maximal()


def tope_graph_of_rows(topes: np.ndarray, name: str | None = None) -> Graph:
    diff = (topes[:, None, :] * topes[None, :, :] == -1).sum(axis=2)
    a, b = np.nonzero(np.triu(diff == 1))
    try:
        return Graph(
            len(topes),
            zip(a.tolist(), b.tolist()),
            name=name,
            labels=[to_string(t) for t in topes],
        )
    except GraphError as exc:
        raise SignSystemError(f"tope graph is not a valid connected graph: {exc}") from exc


def topes_and_graph(s: SignSystem, name: str | None = None) -> tuple[list[SignVector], Graph]:
    """Topes in canonical order and their graph (adjacent iff separator has one element)."""
    idx = tope_indices(s)
    topes = s.covectors[idx]
    return [_row(t) for t in topes], tope_graph_of_rows(topes, name=name)


# ---------------------------------------------------------------- simpliciality


@dataclass(frozen=True)
class SimplicialReport:
    simplicial: bool
    rank: int
    witness: SignVector | None
    degrees: dict[SignVector, int]
    boolean: dict[SignVector, bool]


def _boolean_below(L: np.ndarray, leq: np.ndarray, t: int, r: int) -> bool:
    below = np.flatnonzero(leq[:, t])
    if len(below) != 2**r:
        return False
    sub = leq[np.ix_(below, below)]
    size = (L[below] != 0).sum(axis=1)
    bottom = below[size == 0]
    if len(bottom) != 1:
        return False
    b = int(np.flatnonzero(below == bottom[0])[0])
    strict = sub & ~np.eye(len(below), dtype=bool)
    # atoms: cover the bottom directly
    atoms = [
        i for i in range(len(below))
        if strict[b, i] and not (strict[b] & strict[:, i]).any()
    ]
    if len(atoms) != r:
        return False
    # x -> atoms below x must be an order isomorphism onto subsets of atoms
    codes = [sum(1 << a for a, atom in enumerate(atoms) if sub[atom, i]) for i in range(len(below))]
    if len(set(codes)) != 2**r:
        return False
    for i in range(len(below)):
        for j in range(len(below)):
            if bool(sub[i, j]) != (codes[i] & ~codes[j] == 0):
                return False
    return True


def is_simplicial_om(s: SignSystem, lattice: FaceLattice | None = None) -> SimplicialReport:
    """Check every tope by degree and by the Boolean lower interval independently.

    Raises :class:`SignSystemError` on a non-OM and :class:`SimplicialityMismatch`
    if the two criteria disagree.
    """
    rep = check_axioms(s)
    if not rep.is_om:
        raise SignSystemError("simpliciality is defined for oriented matroids only")
    if lattice is None:
        lattice = face_lattice(s, check=False)
    L = s.covectors
    r = lattice.top_rank
    idx = tope_indices(s, lattice)
    g = tope_graph_of_rows(L[idx])
    degrees: dict[SignVector, int] = {}
    boolean: dict[SignVector, bool] = {}
    witness = None
    for pos, t in enumerate(idx):
        key = _row(L[t])
        deg_ok = g.degree(pos) == r
        bool_ok = _boolean_below(L, lattice.leq, int(t), r)
        if deg_ok != bool_ok:
            raise SimplicialityMismatch(f"criteria disagree at tope {to_string(key)}")
        degrees[key] = g.degree(pos)
        boolean[key] = bool_ok
        if not deg_ok and witness is None:
            witness = key
    return SimplicialReport(witness is None, r, witness, degrees, boolean)


# ---------------------------------------------------------------- minors


def delete(s: SignSystem, elements: Iterable[int]) -> SignSystem:
    """Restrict every covector to the complement of ``elements``."""
    drop = set(elements)
    if not drop <= set(range(s.ground_size)):
        raise SignSystemError("element index out of range")
    keep = [e for e in range(s.ground_size) if e not in drop]
    if not keep:
        raise SignSystemError("cannot delete the whole ground set")
    names = [s.element_names[e] for e in keep] if s.element_names else None
    return SignSystem(len(keep), s.covectors[:, keep], names)


def contract(s: SignSystem, elements: Iterable[int]) -> SignSystem:
    """Covectors vanishing on ``elements``, restricted to the remaining elements."""
    drop = sorted(set(elements))
    rows = s.covectors[(s.covectors[:, drop] == 0).all(axis=1)]
    keep = [e for e in range(s.ground_size) if e not in set(drop)]
    if not keep:
        raise SignSystemError("cannot contract the whole ground set")
    names = [s.element_names[e] for e in keep] if s.element_names else None
    return SignSystem(len(keep), rows[:, keep], names)


def simplify(s: SignSystem) -> tuple[SignSystem, list[int]]:
    """Drop loops (elements zero on every covector) and all but the first of each
    parallel class (elements equal or opposite on every covector).

    Returns the simple system and the kept element indices.
    """
    L = s.covectors
    keep: list[int] = []
    for e in range(s.ground_size):
        col = L[:, e]
        if not col.any():
            continue
        if any(np.array_equal(col, L[:, f]) or np.array_equal(col, -L[:, f]) for f in keep):
            continue
        keep.append(e)
    names = [s.element_names[e] for e in keep] if s.element_names else None
    return SignSystem(len(keep), L[:, keep], names), keep


def zone_graph(g: Graph, theta: ThetaPartition, cycles: list[ConvexCycle], c: int) -> Graph:
    """Graph on the edges of Θ-class ``c``; two edges are adjacent when they are
    opposite edges of a common convex cycle.  Vertex ``i`` is the ``i``-th edge of
    the class in sorted order."""
    if not 0 <= c < theta.class_count:
        raise IndexError(f"class index {c} out of range")
    members = sorted(theta.classes[c])
    index = {e: i for i, e in enumerate(members)}
    adj: set[tuple[int, int]] = set()
    for cyc in cycles:
        vs = cyc.vertices
        k = len(vs)
        half = k // 2
        for i in range(half):
            e1 = tuple(sorted((vs[i], vs[(i + 1) % k])))
            e2 = tuple(sorted((vs[i + half], vs[(i + half + 1) % k])))
            if e1 in index and e2 in index:
                a, b = sorted((index[e1], index[e2]))
                adj.add((a, b))
    labels = [f"{g.label(a)}~{g.label(b)}" for a, b in members]
    return Graph(len(members), sorted(adj), name=f"zone{c}", labels=labels)
