"""Exhaustive enumeration of the vertices of M(n, m), and minimum-support oracles.

Vertices of M(n, m) have integer entries (leaf elimination on a forest
only ever subtracts integer marginals), so a vertex is an integer matrix
with the right marginals whose support graph is a forest.  Both the full
census and the compressed profile build such matrices one column at a
time: a column is a composition of n over the rows, and the rows it
touches must lie in distinct components of the graph built so far, which
is exactly the condition for the new column node to keep the graph acyclic.
"""

from __future__ import annotations

import csv
import io
import json
import random
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import gcd
from pathlib import Path

from ..errors import CapacityError, DomainError
from ..formats import matrix_to_dict
from ..matrix import UMatrix
from .equivalence import canonical_key
from .flow import feasible_support

CENSUS_SUM_LIMIT = 14
PROFILE_SUM_LIMIT = 16
SUBSET_CELL_LIMIT = 24
DEFAULT_CENSUS_SIZE_LIMIT = 50_000


def _dims(n: int, m: int) -> None:
    for name, v in (("n", n), ("m", m)):
        if isinstance(v, bool) or not isinstance(v, int) or v < 1:
            raise DomainError(f"{name} must be a positive integer, got {v!r}")


@lru_cache(maxsize=None)
def _compositions(total: int, caps: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """All vectors v with 0 <= v[i] <= caps[i] and sum(v) == total."""
    k = len(caps)
    suffix = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix[i] = suffix[i + 1] + caps[i]
    out = []
    vals = [0] * k

    def rec(i: int, left: int):
        if i == k:
            if left == 0:
                out.append(tuple(vals))
            return
        lo = max(0, left - suffix[i + 1])
        for v in range(lo, min(left, caps[i]) + 1):
            vals[i] = v
            rec(i + 1, left - v)
        vals[i] = 0

    rec(0, total)
    return tuple(out)


def _relabel(labels) -> tuple[int, ...]:
    seen: dict[int, int] = {}
    return tuple(seen.setdefault(x, len(seen)) for x in labels)


def _attach(labels: tuple[int, ...], rows: list[int]) -> tuple[int, ...] | None:
    """Labels after a new column joins ``rows``, or None if that closes a cycle."""
    touched = {labels[i] for i in rows}
    if len(touched) != len(rows):
        return None
    target = labels[rows[0]]
    return _relabel(target if x in touched else x for x in labels)


# ---------------------------------------------------------------- profile


@dataclass(frozen=True)
class CensusProfile:
    """Exact count of vertices of M(n, m) by support size, without listing them."""

    n: int
    m: int
    histogram: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.histogram.values())

    @property
    def min_size(self) -> int:
        return min(self.histogram)

    @property
    def max_size(self) -> int:
        return max(self.histogram)


def census_profile(n: int, m: int) -> CensusProfile:
    """Support-size histogram of all vertices, by dynamic programming over columns.

    The state after fixing the last k columns is the vector of remaining
    row marginals; rows are interchangeable, so states are stored with the
    marginals sorted.  Each state maps (row partition induced by the fixed
    columns, support size) to a count.
    """
    _dims(n, m)
    if n + m > PROFILE_SUM_LIMIT:
        raise CapacityError(f"census profile is limited to n + m <= {PROFILE_SUM_LIMIT}")

    @lru_cache(maxsize=None)
    def suffix(res: tuple[int, ...], k: int) -> dict:
        if k == 0:
            return {} if any(res) else {(tuple(range(n)), 0): 1}
        out: Counter = Counter()
        for vals in _compositions(n, res):
            child = [r - v for r, v in zip(res, vals)]
            order = sorted(range(n), key=lambda i: -child[i])
            sub = suffix(tuple(child[i] for i in order), k - 1)
            if not sub:
                continue
            pos = [0] * n
            for p, i in enumerate(order):
                pos[i] = p
            rows = [pos[i] for i in range(n) if vals[i]]
            for (labels, size), count in sub.items():
                merged = _attach(labels, rows)
                if merged is None:
                    continue
                # report labels in the caller's row order
                out[(_relabel(merged[pos[i]] for i in range(n)), size + len(rows))] += count
        return dict(out)

    hist: Counter = Counter()
    for (_, size), count in suffix(tuple([m] * n), m).items():
        hist[size] += count
    return CensusProfile(n, m, dict(sorted(hist.items())))


# ---------------------------------------------------------------- full census


@dataclass(frozen=True)
class ExtremalCensus:
    """Every vertex of M(n, m); ``vertices[k]`` lists (row, col, value) of one vertex."""

    n: int
    m: int
    vertices: tuple[tuple[tuple[int, int, int], ...], ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def supports(self) -> tuple[frozenset, ...]:
        return tuple(frozenset((i, j) for i, j, _ in v) for v in self.vertices)

    def sizes(self) -> list[int]:
        return [len(v) for v in self.vertices]

    def matrix(self, k: int) -> UMatrix:
        return UMatrix.from_cells(self.n, self.m, {(i, j): x for i, j, x in self.vertices[k]})

    def matrices(self):
        for k in range(len(self.vertices)):
            yield self.matrix(k)


def enumerate_extremal(n: int, m: int, limit: int = DEFAULT_CENSUS_SIZE_LIMIT) -> ExtremalCensus:
    """List every vertex of M(n, m), sorted by (support size, support cells).

    Columns are filled left to right; a memoised test of whether the
    remaining columns can still be completed keeps the search from entering
    dead branches, so the work is proportional to the output.  ``limit``
    caps the number of vertices (checked beforehand with the profile).
    """
    _dims(n, m)
    if n + m > CENSUS_SUM_LIMIT:
        raise CapacityError(f"census enumeration is limited to n + m <= {CENSUS_SUM_LIMIT}")
    expected = census_profile(n, m).total
    if expected > limit:
        raise CapacityError(f"M({n},{m}) has {expected} vertices, above the census limit {limit}")

    @lru_cache(maxsize=None)
    def completable(res: tuple[int, ...], j: int, labels: tuple[int, ...]) -> bool:
        if j == m:
            return not any(res)
        for vals in _compositions(n, res):
            rows = [i for i in range(n) if vals[i]]
            merged = _attach(labels, rows)
            if merged is not None and completable(tuple(r - v for r, v in zip(res, vals)), j + 1, merged):
                return True
        return False

    found = []
    cells: list[tuple[int, int, int]] = []

    def walk(res: tuple[int, ...], j: int, labels: tuple[int, ...]):
        if j == m:
            found.append(tuple(sorted(cells)))
            return
        for vals in _compositions(n, res):
            rows = [i for i in range(n) if vals[i]]
            merged = _attach(labels, rows)
            if merged is None:
                continue
            child = tuple(r - v for r, v in zip(res, vals))
            if not completable(child, j + 1, merged):
                continue
            cells.extend((i, j, vals[i]) for i in rows)
            walk(child, j + 1, merged)
            del cells[-len(rows):]

    walk(tuple([m] * n), 0, tuple(range(n)))
    found.sort(key=lambda v: (len(v), [(i, j) for i, j, _ in v]))
    return ExtremalCensus(n, m, tuple(found))


def random_vertex(n: int, m: int, rng: random.Random) -> UMatrix:
    """A vertex of M(n, m) from a random greedy fill.

    Each step picks a random cell whose row and column both still need
    mass and puts the smaller of the two needs there, which saturates one
    of them; the cells therefore form a forest.
    """
    _dims(n, m)
    row = [m] * n
    col = [n] * m
    grid = [[0] * m for _ in range(n)]
    while True:
        open_rows = [i for i in range(n) if row[i]]
        open_cols = [j for j in range(m) if col[j]]
        if not open_rows:
            return UMatrix(grid)
        i = rng.choice(open_rows)
        j = rng.choice(open_cols)
        x = min(row[i], col[j])
        grid[i][j] += x
        row[i] -= x
        col[j] -= x


# ---------------------------------------------------------------- statistics


@dataclass(frozen=True)
class CensusStatistics:
    n: int
    m: int
    count: int
    histogram: dict[int, int]
    class_count: int
    min_size: int
    max_size: int


def census_statistics(c: ExtremalCensus) -> CensusStatistics:
    """Size histogram plus the number of classes under row/column permutation."""
    hist = Counter(c.sizes())
    classes = {canonical_key(M) for M in c.matrices()}
    return CensusStatistics(
        c.n, c.m, len(c), dict(sorted(hist.items())), len(classes), min(hist), max(hist)
    )


def census_jsonl(c: ExtremalCensus) -> str:
    lines = []
    for k, v in enumerate(c.vertices):
        record = {
            "support": [[i, j] for i, j, _ in v],
            "matrix": matrix_to_dict(c.matrix(k)),
            "size": len(v),
        }
        lines.append(json.dumps(record, separators=(",", ":")))
    return "\n".join(lines) + ("\n" if lines else "")


def histogram_csv(histogram: dict[int, int]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["size", "count"])
    for size, count in sorted(histogram.items()):
        w.writerow([size, count])
    return buf.getvalue()


def write_census(c: ExtremalCensus, jsonl_path, hist_path) -> CensusStatistics:
    stats = census_statistics(c)
    Path(jsonl_path).write_text(census_jsonl(c))
    Path(hist_path).write_text(histogram_csv(stats.histogram))
    return stats


# ---------------------------------------------------------------- minimum support


def _covering_subsets(n: int, m: int, size: int):
    """Cell sets of the given size that meet every row and every column."""
    options = [frozenset(rows) for k in range(1, n + 1) for rows in combinations(range(n), k)]
    full = (1 << n) - 1
    masks = {rows: sum(1 << i for i in rows) for rows in options}
    chosen: list[frozenset] = []

    def rec(j: int, left: int, covered: int):
        remaining = m - j
        if left < remaining or left > n * remaining:
            return
        if j == m:
            if covered == full:
                yield frozenset((i, jj) for jj, rows in enumerate(chosen) for i in rows)
            return
        for rows in options:
            if len(rows) > left:
                continue
            chosen.append(rows)
            yield from rec(j + 1, left - len(rows), covered | masks[rows])
            chosen.pop()

    yield from rec(0, size, 0)


def min_support_subset(n: int, m: int) -> int:
    """Smallest s such that some s-cell support is feasible, by exhaustive search.

    Only subsets meeting every row and column are tried: a row or column
    without a nonzero cell cannot reach its positive marginal.
    """
    _dims(n, m)
    if n * m > SUBSET_CELL_LIMIT:
        raise CapacityError(f"subset search is limited to n*m <= {SUBSET_CELL_LIMIT}")
    for s in range(1, n * m + 1):
        if any(feasible_support(n, m, S) for S in _covering_subsets(n, m, s)):
            return s
    raise AssertionError("the full support is always feasible")


def min_support_forest(n: int, m: int) -> int:
    """Smallest support among acyclic supports carrying a positive solution."""
    return census_profile(n, m).min_size


def min_support_bruteforce(n: int, m: int, method: str = "subset") -> int:
    if method == "subset":
        return min_support_subset(n, m)
    if method == "forest":
        return min_support_forest(n, m)
    raise DomainError(f"unknown method {method!r}; expected 'subset' or 'forest'")


def oracle_min_support(n: int, m: int) -> tuple[int, str]:
    """The cheapest available brute-force minimum and the method used."""
    if n * m <= SUBSET_CELL_LIMIT:
        return min_support_subset(n, m), "subset"
    if n + m <= PROFILE_SUM_LIMIT:
        return min_support_forest(n, m), "forest"
    raise CapacityError(
        f"no oracle for ({n},{m}): needs n*m <= {SUBSET_CELL_LIMIT} or n + m <= {PROFILE_SUM_LIMIT}"
    )


def vertex_support_bounds(n: int, m: int) -> tuple[int, int] | None:
    """(lower, upper) support bounds for vertices when m = kn + r with r >= 1."""
    k, r = divmod(m, n)
    if r == 0:
        return None
    return (k + 1) * n, (k + 1) * n + (r - 1)


def coprime(n: int, m: int) -> bool:
    return gcd(n, m) == 1
