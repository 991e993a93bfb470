"""Acyclic supports: leaf-elimination solving plus an unpruned reference enumeration."""

from __future__ import annotations

import heapq
from fractions import Fraction

from ..errors import ArgumentError, CapacityError
from ..matrix import UMatrix
from .flow import check_cells


class UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        """Merge the classes of a and b; False if they were already joined."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[max(ra, rb)] = min(ra, rb)
        return True


def is_acyclic(n: int, m: int, S) -> bool:
    uf = UnionFind(n + m)
    return all(uf.union(i, n + j) for i, j in sorted(S))


def solve_forest(n: int, m: int, S) -> UMatrix | None:
    """The unique member of M(n, m) supported exactly on the forest S, if any.

    Peel leaves: a leaf's single edge must carry the leaf's whole remaining
    marginal.  Returns None when a forced value is not strictly positive or
    some marginal is left unmet.
    """
    cells = check_cells(n, m, S)
    if not is_acyclic(n, m, cells):
        raise ArgumentError("solve_forest needs an acyclic support")
    residual = [Fraction(m)] * n + [Fraction(n)] * m
    adj: list[set[int]] = [set() for _ in range(n + m)]
    for i, j in cells:
        adj[i].add(n + j)
        adj[n + j].add(i)
    heap = [v for v in range(n + m) if len(adj[v]) == 1]
    heapq.heapify(heap)
    values = {}
    while heap:
        v = heapq.heappop(heap)
        if len(adj[v]) != 1:
            continue
        (u,) = adj[v]
        x = residual[v]
        if x <= 0:
            return None
        cell = (v, u - n) if v < n else (u, v - n)
        values[cell] = x
        residual[v] -= x
        residual[u] -= x
        adj[v].clear()
        adj[u].discard(v)
        if len(adj[u]) == 1:
            heapq.heappush(heap, u)
    if any(residual):
        return None
    return UMatrix.from_cells(n, m, values)


def component_balanced(n: int, m: int, S) -> bool:
    """Every component (rows R, columns C) of S satisfies m*|R| = n*|C|."""
    uf = UnionFind(n + m)
    for i, j in S:
        uf.union(i, n + j)
    rows: dict[int, int] = {}
    cols: dict[int, int] = {}
    for v in range(n + m):
        r = uf.find(v)
        if v < n:
            rows[r] = rows.get(r, 0) + 1
        else:
            cols[r] = cols.get(r, 0) + 1
    return all(m * rows.get(r, 0) == n * cols.get(r, 0) for r in set(rows) | set(cols))


REFERENCE_LIMIT = 8


def forest_supports_bruteforce(n: int, m: int) -> set[frozenset]:
    """Every acyclic edge set of K_{n,m} that is the support of a member.

    No pruning beyond acyclicity: each forest is tested for component
    balance and solved.  Used to check the pruned enumerations.
    """
    if n + m > REFERENCE_LIMIT:
        raise CapacityError(f"unpruned forest enumeration is limited to n + m <= {REFERENCE_LIMIT}")
    edges = [(i, j) for i in range(n) for j in range(m)]
    found: set[frozenset] = set()

    def walk(k: int, chosen: list, parent: list[int]):
        if k == len(edges):
            S = frozenset(chosen)
            if component_balanced(n, m, S) and solve_forest(n, m, S) is not None:
                found.add(S)
            return
        walk(k + 1, chosen, parent)
        i, j = edges[k]
        uf = UnionFind(n + m)
        uf.parent = parent[:]
        if uf.union(i, n + j):
            chosen.append(edges[k])
            walk(k + 1, chosen, uf.parent)
            chosen.pop()

    walk(0, [], list(range(n + m)))
    return found
