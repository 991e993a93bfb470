"""Support graphs, Brualdi's acyclicity test, and decomposition into vertices.

A member of M(n, m) is extremal exactly when the bipartite graph of its
support is a forest.  When the graph has a cycle, pushing +theta/-theta
alternately around the cycle splits the matrix into two members with
strictly smaller supports; iterating that split peels off vertices until
what remains is itself a vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import ArgumentError
from .matrix import Cell, UMatrix, format_rational, require_member, support, validate


@dataclass(frozen=True)
class BipartiteSupportGraph:
    """Row nodes x1..xn, column nodes y1..ym, one edge per nonzero cell."""

    n: int
    m: int
    edges: frozenset
    weights: dict

    @property
    def row_nodes(self) -> tuple[str, ...]:
        return tuple(f"x{i + 1}" for i in range(self.n))

    @property
    def col_nodes(self) -> tuple[str, ...]:
        return tuple(f"y{j + 1}" for j in range(self.m))

    def adjacency(self) -> list[list[int]]:
        """Neighbor lists over node ids: rows are 0..n-1, column j is n + j."""
        adj: list[list[int]] = [[] for _ in range(self.n + self.m)]
        for i, j in self.edges:
            adj[i].append(self.n + j)
            adj[self.n + j].append(i)
        for nbrs in adj:
            nbrs.sort()
        return adj


def support_graph(M: UMatrix) -> BipartiteSupportGraph:
    cells = support(M)
    return BipartiteSupportGraph(M.n, M.m, cells, {c: M[c] for c in cells})


def components(G: BipartiteSupportGraph) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Connected components as (row indices, column indices), isolated nodes included."""
    adj = G.adjacency()
    seen = [False] * (G.n + G.m)
    out = []
    for start in range(G.n + G.m):
        if seen[start]:
            continue
        seen[start] = True
        stack, nodes = [start], []
        while stack:
            v = stack.pop()
            nodes.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        rows = tuple(sorted(v for v in nodes if v < G.n))
        cols = tuple(sorted(v - G.n for v in nodes if v >= G.n))
        out.append((rows, cols))
    return out


@dataclass(frozen=True)
class CycleWitness:
    """Closed alternating sequence of support cells.

    ``cells[k]`` and ``cells[k+1]`` share a column for even k and a row for
    odd k; the last cell shares a row with the first.
    """

    cells: tuple[Cell, ...]

    def __len__(self) -> int:
        return len(self.cells)

    def describe(self) -> str:
        return " -> ".join(f"({i + 1},{j + 1})" for i, j in self.cells)


def _canonical_cycle(n: int, nodes: list[int]) -> CycleWitness:
    # rotate to the smallest row node, then walk towards its smaller column neighbour
    start = min(range(len(nodes)), key=lambda k: (nodes[k] >= n, nodes[k]))
    ring = nodes[start:] + nodes[:start]
    if ring[-1] < ring[1]:
        ring = [ring[0]] + ring[:0:-1]
    cells = []
    L = len(ring)
    for k in range(L):
        a, b = ring[k], ring[(k + 1) % L]
        r, c = (a, b) if a < n else (b, a)
        cells.append((r, c - n))
    return CycleWitness(tuple(cells))


def find_cycle(G: BipartiteSupportGraph) -> CycleWitness | None:
    """Depth-first search from the smallest row node, neighbours in ascending order.

    Returns the first cycle closed by the search, rotated to begin at its
    smallest row and oriented towards the smaller adjacent column, or None
    when the graph is a forest.
    """
    adj = G.adjacency()
    N = G.n + G.m
    state = [0] * N  # 0 unseen, 1 on the current path, 2 finished
    for root in range(N):
        if state[root]:
            continue
        path = [root]
        iters = [iter(adj[root])]
        parent = {root: -1}
        state[root] = 1
        while path:
            v = path[-1]
            for w in iters[-1]:
                if w == parent[v]:
                    continue
                if state[w] == 1:
                    k = path.index(w)
                    return _canonical_cycle(G.n, path[k:])
                if state[w] == 0:
                    state[w] = 1
                    parent[w] = v
                    path.append(w)
                    iters.append(iter(adj[w]))
                    break
            else:
                state[v] = 2
                path.pop()
                iters.pop()
    return None


def is_extremal(M: UMatrix) -> bool:
    """Brualdi: a member is a vertex of M(n, m) iff its support graph has no cycle."""
    require_member(M, "is_extremal")
    return find_cycle(support_graph(M)) is None


def check_witness(M: UMatrix, w: CycleWitness) -> None:
    cells = w.cells
    L = len(cells)
    if L < 4 or L % 2:
        raise ArgumentError(f"a cycle witness needs an even length >= 4, got {L}")
    if len(set(cells)) != L:
        raise ArgumentError("cycle witness repeats a cell")
    supp = support(M)
    for c in cells:
        if c not in supp:
            raise ArgumentError(f"cell ({c[0] + 1},{c[1] + 1}) is not in the support")
    for k in range(L):
        a, b = cells[k], cells[(k + 1) % L]
        if k % 2 == 0 and a[1] != b[1]:
            raise ArgumentError(f"cells {k + 1} and {k + 2} of the witness do not share a column")
        if k % 2 == 1 and a[0] != b[0]:
            raise ArgumentError(f"cells {k + 1} and {(k + 1) % L + 1} of the witness do not share a row")


@dataclass(frozen=True)
class Split:
    lam: Fraction
    plus: UMatrix
    minus: UMatrix


def split_on_cycle(M: UMatrix, w: CycleWitness) -> Split:
    """Write M = lam*plus + (1-lam)*minus by moving mass around the cycle.

    Even-indexed cells of the witness gain theta in ``plus`` and lose it in
    ``minus``; each step is as large as nonnegativity allows, so every cell
    attaining the minimum is zeroed.
    """
    require_member(M, "split_on_cycle")
    check_witness(M, w)
    even = w.cells[0::2]
    odd = w.cells[1::2]
    theta_plus = min(M[c] for c in odd)
    theta_minus = min(M[c] for c in even)
    grid_p = M.tolist()
    grid_m = M.tolist()
    for i, j in even:
        grid_p[i][j] += theta_plus
        grid_m[i][j] -= theta_minus
    for i, j in odd:
        grid_p[i][j] -= theta_plus
        grid_m[i][j] += theta_minus
    lam = theta_minus / (theta_plus + theta_minus)
    return Split(lam, UMatrix(grid_p), UMatrix(grid_m))


@dataclass(frozen=True)
class ConvexDecomposition:
    terms: tuple[tuple[Fraction, UMatrix], ...]

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(c for c, _ in self.terms)

    def recombine(self) -> UMatrix:
        first = self.terms[0][1]
        grid = [[Fraction(0)] * first.m for _ in range(first.n)]
        for c, V in self.terms:
            for i, j, v in V.cells():
                grid[i][j] += c * v
        return UMatrix(grid)

    def verify(self, M: UMatrix) -> list[str]:
        """Problems with this decomposition of M; empty when it is sound."""
        problems = []
        if sum(self.coefficients, Fraction(0)) != 1:
            problems.append("coefficients do not sum to 1")
        for k, (c, V) in enumerate(self.terms):
            if not 0 < c <= 1:
                problems.append(f"term {k + 1}: coefficient {format_rational(c)} outside (0, 1]")
            if not validate(V).is_member:
                problems.append(f"term {k + 1} is not a member")
            elif find_cycle(support_graph(V)) is not None:
                problems.append(f"term {k + 1} is not extremal")
        if not problems and self.recombine() != M:
            problems.append("weighted sum of the terms differs from the matrix")
        return problems


def _vertex_below(M: UMatrix, w: CycleWitness) -> UMatrix:
    V = split_on_cycle(M, w).plus
    while (w := find_cycle(support_graph(V))) is not None:
        V = split_on_cycle(V, w).plus
    return V


def decompose(M: UMatrix) -> ConvexDecomposition:
    """Convex combination of extremal members equal to M, exactly.

    Repeatedly find a vertex V below the current remainder R (support of V
    inside that of R), subtract the largest multiple of V that keeps R
    nonnegative, and rescale.  Each round zeroes at least one cell of R, so
    there are at most n*m rounds.  Identical vertices are merged.
    """
    require_member(M, "decompose")
    acc: dict[UMatrix, Fraction] = {}
    weight = Fraction(1)
    R = M
    while (w := find_cycle(support_graph(R))) is not None:
        V = _vertex_below(R, w)
        mu = min(R[c] / V[c] for c in support(V))
        acc[V] = acc.get(V, Fraction(0)) + weight * mu
        R = (R - V.scale(mu)).scale(1 / (1 - mu))
        weight *= 1 - mu
    acc[R] = acc.get(R, Fraction(0)) + weight
    return ConvexDecomposition(tuple((c, V) for V, c in acc.items()))


def subsupport_witness(M: UMatrix) -> UMatrix | None:
    """A member whose support is strictly inside supp(M), or None when M is extremal."""
    require_member(M, "subsupport_witness")
    w = find_cycle(support_graph(M))
    if w is None:
        return None
    return split_on_cycle(M, w).plus


def cycle_edges(w: CycleWitness | None) -> set[Cell]:
    return set(w.cells) if w else set()


def to_dot(G: BipartiteSupportGraph, highlight: Iterable[Cell] = ()) -> str:
    """Graphviz source for G; highlighted cells are drawn red and bold."""
    marked = set(highlight)
    lines = ["graph G {", "  node [shape=circle];"]
    lines.append("  { rank=same; " + " ".join(G.row_nodes) + "; }")
    lines.append("  { rank=same; " + " ".join(G.col_nodes) + "; }")
    for i, j in sorted(G.edges):
        attrs = f'label="{format_rational(G.weights[(i, j)])}"'
        if (i, j) in marked:
            attrs += ", color=red, penwidth=2"
        lines.append(f"  x{i + 1} -- y{j + 1} [{attrs}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
