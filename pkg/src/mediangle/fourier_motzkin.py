"""Exact feasibility of homogeneous sign conditions by Fourier–Motzkin elimination.

A condition ``(a, s)`` asks for ``<a, x> > 0`` (``s = +1``), ``< 0`` (``s = -1``)
or ``= 0`` (``s = 0``).  All arithmetic is on Python integers.
"""

from __future__ import annotations

from collections.abc import Sequence
from math import gcd

Row = tuple[int, ...]


def _normalize(row: Sequence[int]) -> Row:
    g = 0
    for a in row:
        g = gcd(g, a)
    return tuple(a // g for a in row) if g > 1 else tuple(row)


def _eliminate_equalities(eqs: list[Row], strict: list[Row]) -> list[Row]:
    eqs = [e for e in eqs if any(e)]
    while eqs:
        pivot = eqs.pop()
        j = next(i for i, a in enumerate(pivot) if a)
        p = pivot[j]

        def sub(row: Row) -> Row:
            # p * row - row[j] * pivot has a zero in column j
            return _normalize([p * a - row[j] * b for a, b in zip(row, pivot)])

        eqs = [r for r in (sub(e) for e in eqs) if any(r)]
        # keep the inequality direction: multiply by |p| only
        sign = 1 if p > 0 else -1
        strict = [_normalize([sign * a for a in sub(r)]) for r in strict]
    return strict


def strict_system_feasible(rows: list[Row]) -> bool:
    """Is there ``x`` with ``<r, x> > 0`` for every row ``r``?"""
    rows = [_normalize(r) for r in rows]
    if not rows:
        return True
    dim = len(rows[0])
    for j in range(dim):
        pos = [r for r in rows if r[j] > 0]
        neg = [r for r in rows if r[j] < 0]
        rest = [r for r in rows if r[j] == 0]
        for p in pos:
            for q in neg:
                rest.append(_normalize([-q[j] * a + p[j] * b for a, b in zip(p, q)]))
        rows = list(dict.fromkeys(rest))
        if any(not any(r) for r in rows):
            return False
    return all(any(r) for r in rows)


def feasible(normals: Sequence[Sequence[int]], signs: Sequence[int]) -> bool:
    """Whether some ``x`` realizes ``sign(<normals[i], x>) == signs[i]`` for all ``i``."""
    eqs: list[Row] = []
    strict: list[Row] = []
    for a, s in zip(normals, signs):
        row = tuple(int(v) for v in a)
        if s == 0:
            eqs.append(row)
        else:
            strict.append(tuple(s * v for v in row))
    return strict_system_feasible(_eliminate_equalities(eqs, strict))
