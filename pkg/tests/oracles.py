"""Brute-force reference implementations, independent of the package internals.

Distances come from networkx; everything else is spelled out from the
definitions with plain loops.
"""

from __future__ import annotations

from itertools import combinations

import networkx as nx


def nx_graph(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def distances(g) -> dict[int, dict[int, int]]:
    return dict(nx.all_pairs_shortest_path_length(nx_graph(g)))


def interval(d, n, u, v):
    return {x for x in range(n) if d[u][x] + d[x][v] == d[u][v]}


def is_convex(d, n, s):
    return all(interval(d, n, u, v) <= s for u in s for v in s)


def imprint(d, n, u, s):
    return {x for x in s if interval(d, n, u, x) & s == {x}}


def is_gated(d, n, s):
    for u in set(range(n)) - s:
        gates = [x for x in s if all(x in interval(d, n, u, v) for v in s)]
        if len(gates) != 1:
            return False
    return True


def is_antipodal(d, n, s):
    return all(any(interval(d, n, v, w) == s for w in s) for v in s)


def cells_by_subsets(g):
    """Every gated antipodal vertex subset, by exhaustive search."""
    d = distances(g)
    h = nx_graph(g)
    found = []
    for k in range(1, g.n + 1):
        for combo in combinations(range(g.n), k):
            s = set(combo)
            if not nx.is_connected(h.subgraph(s)):
                continue
            if is_antipodal(d, g.n, s) and is_gated(d, g.n, s):
                found.append(frozenset(s))
    return found


def convex_cycles_by_search(g, max_len: int):
    """Induced, convex cycles found among all simple cycles up to ``max_len``."""
    d = distances(g)
    h = nx_graph(g)
    out = set()
    for cyc in nx.simple_cycles(h, length_bound=max_len):
        s = set(cyc)
        if len(cyc) < 4 or h.subgraph(s).number_of_edges() != len(cyc):
            continue
        if is_convex(d, g.n, s):
            out.add(frozenset(s))
    return out


def halfspace(d, n, a, b):
    return {x for x in range(n) if d[x][a] < d[x][b]}


def cycle_condition_failures(g, cycles):
    """All failing forks (u, x, y, z) with x < y, straight from the definition."""
    d = distances(g)
    n = g.n
    nb = {v: set(nx_graph(g)[v]) for v in range(n)}
    fails = []
    for u in range(n):
        for z in range(n):
            for x, y in combinations(sorted(nb[z]), 2):
                if not (d[u][x] == d[u][y] == d[u][z] - 1):
                    continue
                good = False
                for c in cycles:
                    vs = list(c)
                    if z not in vs:
                        continue
                    i = vs.index(z)
                    if {vs[i - 1], vs[(i + 1) % len(vs)]} != {x, y}:
                        continue
                    o = vs[(i + len(vs) // 2) % len(vs)]
                    if o in interval(d, n, u, x) & interval(d, n, u, y):
                        good = True
                if not good:
                    fails.append((u, x, y, z))
    return fails


def apices(d, n, u, x, y):
    common = interval(d, n, u, x) & interval(d, n, u, y)
    return {a for a in common if not any(b != a and a in interval(d, n, u, b) for b in common)}


def sign_vectors_by_lp(normals):
    """Feasible sign patterns of a central arrangement via floating-point LPs."""
    from itertools import product

    import numpy as np
    from scipy.optimize import linprog

    A = np.array(normals, dtype=float)
    k, dim = A.shape
    found = []
    for signs in product((-1, 0, 1), repeat=k):
        # maximize t subject to s_i <a_i, x> >= t (s_i != 0), <a_i, x> = 0 (s_i = 0), |x| <= 1
        c = np.zeros(dim + 1)
        c[-1] = -1
        A_ub, b_ub, A_eq, b_eq = [], [], [], []
        for s, a in zip(signs, A):
            if s:
                A_ub.append(np.append(-s * a, 1.0))
                b_ub.append(0.0)
            else:
                A_eq.append(np.append(a, 0.0))
                b_eq.append(0.0)
        res = linprog(
            c,
            A_ub=np.array(A_ub) if A_ub else None,
            b_ub=b_ub or None,
            A_eq=np.array(A_eq) if A_eq else None,
            b_eq=b_eq or None,
            bounds=[(-1, 1)] * dim + [(None, 1)],
        )
        t = -res.fun if res.status == 0 else -1
        if all(s == 0 for s in signs) or t > 1e-9:
            found.append(signs)
    return found
