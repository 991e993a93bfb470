"""Exact integer max-flow for support feasibility.

A support set S admits a member of M(n, m) exactly when the network
source -> row_i (capacity m), row_i -> col_j for (i, j) in S, col_j -> sink
(capacity n) carries a flow of value n*m.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from ..errors import DimensionError
from ..matrix import Cell


@dataclass(frozen=True)
class FlowNetwork:
    """Node 0 is the source, rows are 1..n, columns n+1..n+m, the sink is n+m+1."""

    n: int
    m: int
    cells: frozenset

    @property
    def source(self) -> int:
        return 0

    @property
    def sink(self) -> int:
        return self.n + self.m + 1

    def row_node(self, i: int) -> int:
        return 1 + i

    def col_node(self, j: int) -> int:
        return 1 + self.n + j

    def capacities(self) -> list[list[int]]:
        """Dense capacity matrix; interior arcs get the ceiling n*m."""
        n, m = self.n, self.m
        size = n + m + 2
        cap = [[0] * size for _ in range(size)]
        for i in range(n):
            cap[self.source][self.row_node(i)] = m
        for j in range(m):
            cap[self.col_node(j)][self.sink] = n
        for i, j in self.cells:
            cap[self.row_node(i)][self.col_node(j)] = n * m
        return cap


def max_flow(net: FlowNetwork) -> int:
    """Edmonds-Karp: breadth-first shortest augmenting paths."""
    cap = net.capacities()
    size = len(cap)
    adj = [[v for v in range(size) if cap[u][v] or cap[v][u]] for u in range(size)]
    s, t = net.source, net.sink
    total = 0
    while True:
        prev = [-1] * size
        prev[s] = s
        queue = deque([s])
        while queue and prev[t] < 0:
            u = queue.popleft()
            for v in adj[u]:
                if prev[v] < 0 and cap[u][v] > 0:
                    prev[v] = u
                    queue.append(v)
        if prev[t] < 0:
            return total
        push = None
        v = t
        while v != s:
            u = prev[v]
            push = cap[u][v] if push is None else min(push, cap[u][v])
            v = u
        v = t
        while v != s:
            u = prev[v]
            cap[u][v] -= push
            cap[v][u] += push
            v = u
        total += push


def check_cells(n: int, m: int, S) -> frozenset:
    cells = frozenset(S)
    for i, j in cells:
        if not (0 <= i < n and 0 <= j < m):
            raise DimensionError(f"cell ({i},{j}) is outside a {n}x{m} matrix")
    return cells


def feasible_support(n: int, m: int, S: "set[Cell] | frozenset") -> bool:
    """True iff some member of M(n, m) has support contained in S."""
    cells = check_cells(n, m, S)
    return max_flow(FlowNetwork(n, m, cells)) == n * m
