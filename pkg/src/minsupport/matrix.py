"""Dense exact-rational matrices and the membership tests for M(n, m).

A member of M(n, m) is an n x m nonnegative matrix whose rows all sum to m
and whose columns all sum to n.  Entries are :class:`fractions.Fraction`
throughout; nothing here ever touches floating point.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Sequence

from .errors import DimensionError, NotMemberError, ParseError

Cell = tuple[int, int]
SupportSet = frozenset  # frozenset[Cell]


def to_rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: a float has already lost the exact value.
    """
    if isinstance(value, bool):
        raise ParseError(f"boolean is not a matrix entry: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip()
        if "." in text or "e" in text.lower():
            raise ParseError(f"decimal notation is not exact: {value!r}")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational: {value!r}") from exc
    raise ParseError(f"unsupported entry type {type(value).__name__}: {value!r}")


def format_rational(q: Fraction) -> str:
    """Canonical rendering: ``"p"`` when the denominator is 1, else ``"p/q"``."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class UMatrix:
    """Immutable dense n x m matrix of Fractions.

    Negative entries are representable so that :func:`validate` can diagnose
    them; every operation that needs a member of M(n, m) checks membership
    itself.
    """

    __slots__ = ("_rows", "n", "m", "_hash")

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(to_rational(x) for x in row) for row in rows)
        if not data or not data[0]:
            raise DimensionError("a matrix needs at least one row and one column")
        width = len(data[0])
        for i, row in enumerate(data):
            if len(row) != width:
                raise DimensionError(f"row {i + 1} has {len(row)} entries, expected {width}")
        self._rows = data
        self.n = len(data)
        self.m = width
        self._hash = None

    @classmethod
    def zeros(cls, n: int, m: int) -> UMatrix:
        return cls([[0] * m for _ in range(n)])

    @classmethod
    def from_cells(cls, n: int, m: int, cells: dict[Cell, object]) -> UMatrix:
        grid = [[0] * m for _ in range(n)]
        for (i, j), v in cells.items():
            grid[i][j] = v
        return cls(grid)

    @property
    def shape(self) -> tuple[int, int]:
        return self.n, self.m

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def columns(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(zip(*self._rows))

    def __getitem__(self, key: Cell) -> Fraction:
        i, j = key
        return self._rows[i][j]

    def __iter__(self) -> Iterator[tuple[Fraction, ...]]:
        return iter(self._rows)

    def cells(self) -> Iterator[tuple[int, int, Fraction]]:
        for i, row in enumerate(self._rows):
            for j, v in enumerate(row):
                yield i, j, v

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._rows]

    def transpose(self) -> UMatrix:
        """The transpose, which maps M(n, m) onto M(m, n)."""
        return UMatrix(zip(*self._rows))

    T = property(transpose)

    def permute(self, row_order: Sequence[int], col_order: Sequence[int]) -> UMatrix:
        """Row ``k`` of the result is row ``row_order[k]`` of self; likewise columns."""
        return UMatrix([[self._rows[i][j] for j in col_order] for i in row_order])

    def __add__(self, other: UMatrix) -> UMatrix:
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return UMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)])

    def __sub__(self, other: UMatrix) -> UMatrix:
        if self.shape != other.shape:
            raise DimensionError(f"cannot subtract {other.shape} from {self.shape}")
        return UMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)])

    def scale(self, c) -> UMatrix:
        c = to_rational(c)
        return UMatrix([[c * a for a in r] for r in self._rows])

    def __rmul__(self, c) -> UMatrix:
        return self.scale(c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._rows)
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_rational(x) for x in r) for r in self._rows)
        return f"UMatrix({self.n}x{self.m}: {body})"

    def pretty(self, zero: str = ".") -> str:
        text = [[format_rational(x) if x else zero for x in r] for r in self._rows]
        width = max(len(t) for r in text for t in r)
        return "\n".join(" ".join(t.rjust(width) for t in r) for r in text)


def block_diag(*blocks: UMatrix) -> UMatrix:
    n = sum(b.n for b in blocks)
    m = sum(b.m for b in blocks)
    grid = [[0] * m for _ in range(n)]
    r0 = c0 = 0
    for b in blocks:
        for i, j, v in b.cells():
            grid[r0 + i][c0 + j] = v
        r0 += b.n
        c0 += b.m
    return UMatrix(grid)


def hstack(*blocks: UMatrix) -> UMatrix:
    n = blocks[0].n
    if any(b.n != n for b in blocks):
        raise DimensionError("hstack needs equal row counts")
    return UMatrix([sum((b.rows[i] for b in blocks), ()) for i in range(n)])


@dataclass(frozen=True)
class MarginalReport:
    row_sums: tuple[Fraction, ...]
    col_sums: tuple[Fraction, ...]
    is_member: bool
    violations: tuple[str, ...] = field(default=())

    def __bool__(self) -> bool:
        return self.is_member


def validate(M: UMatrix) -> MarginalReport:
    """Exact row/column sums of ``M`` and whether it lies in M(n, m).

    Every violation is listed (1-based positions), not just the first.
    """
    n, m = M.shape
    rows = tuple(sum(r, Fraction(0)) for r in M.rows)
    cols = tuple(sum(c, Fraction(0)) for c in M.columns())
    problems = []
    for i, j, v in M.cells():
        if v < 0:
            problems.append(f"negative entry {format_rational(v)} at ({i + 1},{j + 1})")
    for i, s in enumerate(rows):
        if s != m:
            problems.append(f"row {i + 1} sums to {format_rational(s)}, expected {m}")
    for j, s in enumerate(cols):
        if s != n:
            problems.append(f"column {j + 1} sums to {format_rational(s)}, expected {n}")
    return MarginalReport(rows, cols, not problems, tuple(problems))


def require_member(M: UMatrix, what: str = "operation") -> None:
    report = validate(M)
    if not report.is_member:
        detail = "; ".join(report.violations[:5])
        raise NotMemberError(f"{what} needs a member of M({M.n},{M.m}): {detail}")


def support(M: UMatrix) -> SupportSet:
    """The cells holding a nonzero entry."""
    return frozenset((i, j) for i, j, v in M.cells() if v != 0)


def verify_tiling(M: UMatrix) -> bool:
    """Read ``M`` as a function f on Z_n x Z_m and test the two tiling equations.

    f must be nonnegative, its translates by the subgroup {0} x Z_m must sum
    to m at every point of the group, and its translates by Z_n x {0} must
    sum to n everywhere.
    """
    n, m = M.shape

    def f(x: int, y: int) -> Fraction:
        return M.rows[x % n][y % m]

    if any(f(x, y) < 0 for x in range(n) for y in range(m)):
        return False
    for x in range(n):
        for y in range(m):
            along_g2 = sum((f(x, y - g) for g in range(m)), Fraction(0))
            along_g1 = sum((f(x - g, y) for g in range(n)), Fraction(0))
            if along_g2 != m or along_g1 != n:
                return False
    return True


def scale_check_birkhoff(M: UMatrix) -> bool:
    """True iff (1/n)·M is a permutation matrix, for a square member M."""
    if M.n != M.m:
        raise DimensionError(f"Birkhoff check needs a square matrix, got {M.n}x{M.m}")
    require_member(M, "Birkhoff check")
    n = M.n
    P = M.scale(Fraction(1, n))
    if any(v not in (0, 1) for _, _, v in P.cells()):
        return False
    return all(sum(r) == 1 for r in P.rows) and all(sum(c) == 1 for c in P.columns())


def entry_multiset(M: UMatrix) -> dict[Fraction, int]:
    """Nonzero entries with their multiplicities."""
    return dict(Counter(v for _, _, v in M.cells() if v != 0))
