"""Equivalence of matrices under row and column permutations.

Two matrices are equivalent exactly when their canonical forms agree
cell by cell.  The canonical form treats each connected component of the
support graph separately:

* tree components get a rooted encoding (weighted, node-typed) taken at the
  tree's center, which is polynomial;
* components containing a cycle are canonized by individualization and
  refinement over their rows (or columns, whichever side is shorter) with
  the other side sorted.  That search is exponential in the worst case and
  is capped at ``SEARCH_SIDE_LIMIT``.

Components are then laid out in order of their keys.
"""

from __future__ import annotations

import sys

from ..errors import ArgumentError, CapacityError
from ..extremality import components, support_graph
from ..matrix import UMatrix

SEARCH_SIDE_LIMIT = 8


def _tree_centers(nodes: list[int], adj: dict[int, list]) -> list[int]:
    if len(nodes) <= 2:
        return list(nodes)
    degree = {v: len(adj[v]) for v in nodes}
    layer = [v for v in nodes if degree[v] <= 1]
    left = len(nodes)
    while left > 2:
        left -= len(layer)
        nxt = []
        for v in layer:
            for _, u in adj[v]:
                degree[u] -= 1
                if degree[u] == 1:
                    nxt.append(u)
        layer = nxt
    return layer


def _tree_component(A: UMatrix, rows, cols):
    """(key, row order, col order) for a tree component."""
    n = A.n
    nodes = list(rows) + [n + j for j in cols]
    adj: dict[int, list] = {v: [] for v in nodes}
    for i in rows:
        for j in cols:
            w = A[i, j]
            if w:
                adj[i].append((w, n + j))
                adj[n + j].append((w, i))

    memo: dict[tuple[int, int], tuple] = {}

    def encode(v: int, parent: int):
        key = (v, parent)
        if key not in memo:
            kids = sorted((w, encode(u, v)) for w, u in adj[v] if u != parent)
            memo[key] = ("r" if v < n else "c", tuple(kids))
        return memo[key]

    def order(v: int, parent: int, out_r: list, out_c: list):
        (out_r if v < n else out_c).append(v if v < n else v - n)
        kids = sorted(((w, encode(u, v)), u) for w, u in adj[v] if u != parent)
        for _, u in kids:
            order(u, v, out_r, out_c)

    best = None
    for root in _tree_centers(nodes, adj):
        enc = encode(root, -1)
        if best is None or enc < best[0]:
            best = (enc, root)
    r_order: list[int] = []
    c_order: list[int] = []
    order(best[1], -1, r_order, c_order)
    return ("tree", best[0]), r_order, c_order


def _refine(A, row_colors, col_colors):
    p, q = len(row_colors), len(col_colors)
    while True:
        rsig = [(row_colors[i], tuple(sorted((A[i][j], col_colors[j]) for j in range(q) if A[i][j])))
                for i in range(p)]
        csig = [(col_colors[j], tuple(sorted((A[i][j], row_colors[i]) for i in range(p) if A[i][j])))
                for j in range(q)]
        rank_r = {s: k for k, s in enumerate(sorted(set(rsig)))}
        rank_c = {s: k for k, s in enumerate(sorted(set(csig)))}
        new_r = [rank_r[s] for s in rsig]
        new_c = [rank_c[s] for s in csig]
        if len(rank_r) == len(set(row_colors)) and len(rank_c) == len(set(col_colors)):
            return new_r, new_c
        row_colors, col_colors = new_r, new_c


def _search_rows(A):
    """Minimal leaf matrix over the individualization tree of the rows of A.

    Returns (matrix as tuple of tuples, row order, col order).
    """
    p, q = len(A), len(A[0])
    best = None

    def leaf(row_colors):
        r_order = sorted(range(p), key=lambda i: row_colors[i])
        c_order = sorted(range(q), key=lambda j: tuple(A[i][j] for i in r_order))
        mat = tuple(tuple(A[i][j] for j in c_order) for i in r_order)
        return mat, r_order, c_order

    def rec(rc, cc):
        nonlocal best
        rc, cc = _refine(A, rc, cc)
        sizes = {}
        for c in rc:
            sizes[c] = sizes.get(c, 0) + 1
        target = min((c for c, s in sizes.items() if s > 1), default=None)
        if target is None:
            cand = leaf(rc)
            if best is None or cand[0] < best[0]:
                best = cand
            return
        tried = set()
        for i in range(p):
            # identical rows of one colour are interchangeable: branch on one of them
            if rc[i] == target and tuple(A[i]) not in tried:
                tried.add(tuple(A[i]))
                nrc = [2 * c + (1 if c >= target else 0) for c in rc]
                nrc[i] = 2 * target
                rec(nrc, [2 * c for c in cc])

    rec([0] * p, [0] * q)
    return best


def _cyclic_component(A: UMatrix, rows, cols):
    sub = [[A[i, j] for j in cols] for i in rows]
    if min(len(rows), len(cols)) > SEARCH_SIDE_LIMIT:
        raise CapacityError(
            f"equivalence search on a cyclic {len(rows)}x{len(cols)} component exceeds "
            f"the side limit {SEARCH_SIDE_LIMIT}"
        )
    if len(rows) <= len(cols):
        mat, r, c = _search_rows(sub)
    else:
        t = [list(col) for col in zip(*sub)]
        tm, tr, tc = _search_rows(t)
        mat = tuple(zip(*tm))
        r, c = tc, tr
    return ("graph", mat), [rows[k] for k in r], [cols[k] for k in c]


def _component_forms(M: UMatrix):
    G = support_graph(M)
    forms = []
    for rows, cols in components(G):
        edges = sum(1 for i in rows for j in cols if M[i, j])
        if edges == len(rows) + len(cols) - 1:
            forms.append(_tree_component(M, rows, cols))
        else:
            forms.append(_cyclic_component(M, rows, cols))
    forms.sort(key=lambda f: f[0])
    return forms


def _ensure_recursion(M: UMatrix) -> None:
    need = 4 * (M.n + M.m) + 100
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


def canonical_key(M: UMatrix):
    """Hashable invariant that is equal for two matrices iff they are equivalent."""
    _ensure_recursion(M)
    return (M.n, M.m, tuple(f[0] for f in _component_forms(M)))


def canonical_form(M: UMatrix) -> UMatrix:
    """The representative of M's equivalence class obtained by permuting M."""
    _ensure_recursion(M)
    forms = _component_forms(M)
    rows = [i for f in forms for i in f[1]]
    cols = [j for f in forms for j in f[2]]
    return M.permute(rows, cols)


def are_equivalent(A: UMatrix, B: UMatrix) -> bool:
    if A.shape != B.shape:
        raise ArgumentError(f"cannot compare a {A.n}x{A.m} matrix with a {B.n}x{B.m} matrix")
    return canonical_form(A) == canonical_form(B)
