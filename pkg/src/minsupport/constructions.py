"""Constructors for the matrix families of M(n, m).

``build_F`` follows the Euclidean algorithm on (n, m): every division step
contributes one E-block, alternately transposed, and the result has the
smallest possible support n + m - gcd(n, m).  ``build_Y`` produces the
extremal matrices whose support exceeds that minimum by one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from math import gcd

from .errors import DomainError, PreconditionError
from .formats import matrix_from_dict
from .matrix import UMatrix, block_diag, hstack

MAX_CONSTRUCT_DIM = 10**6


def _positive(name: str, value) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{name} must be an integer, got {value!r}")
    if value < 1:
        raise DomainError(f"{name} must be positive, got {value}")
    return value


def _bounded(name: str, value: int) -> int:
    if value > MAX_CONSTRUCT_DIM:
        raise DomainError(f"{name}={value} exceeds the dense-storage limit {MAX_CONSTRUCT_DIM}")
    return value


@dataclass(frozen=True)
class EuclideanTrace:
    """Quotients and remainders of the Euclidean algorithm on (n, m).

    ``steps[0]`` is ``(k1, r1)`` with ``m = k1*n + r1``; each later step
    divides the previous divisor by the previous remainder.  The final
    remainder is always 0.  ``swapped`` records that the caller passed
    n > m and the pair was reoriented.
    """

    n: int
    m: int
    steps: tuple[tuple[int, int], ...]
    swapped: bool = False

    @property
    def quotients(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.steps)

    @property
    def remainders(self) -> tuple[int, ...]:
        return tuple(r for _, r in self.steps)

    @property
    def t(self) -> int:
        """Number of nonzero remainders; ``len(steps) == t + 1``."""
        return len(self.steps) - 1

    @property
    def gcd(self) -> int:
        nonzero = [r for r in self.remainders if r]
        return nonzero[-1] if nonzero else self.n

    def divisors(self) -> tuple[int, ...]:
        """The divisor used at each step: n, r1, r2, ..., r_t."""
        return (self.n,) + tuple(r for r in self.remainders[:-1])

    def block_sizes(self) -> tuple[tuple[int, int], ...]:
        """``(r, k)`` for each block E(r, k r), in construction order."""
        return tuple(zip(self.divisors(), self.quotients))

    def entry_multiset(self) -> dict[int, int]:
        """Entries of F(n, m) predicted from the trace: r appears k*r times."""
        out: dict[int, int] = {}
        for r, k in self.block_sizes():
            out[r] = out.get(r, 0) + k * r
        return out

    def telescoped_support(self) -> int:
        """k1*n + k2*r1 + ... + k_{t+1}*r_t, the support of F(n, m)."""
        return sum(k * r for r, k in self.block_sizes())


def euclidean_trace(n: int, m: int) -> EuclideanTrace:
    _positive("n", n)
    _positive("m", m)
    swapped = n > m
    if swapped:
        n, m = m, n
    steps = []
    divisor, dividend = n, m
    while True:
        k, r = divmod(dividend, divisor)
        steps.append((k, r))
        if r == 0:
            break
        dividend, divisor = divisor, r
    return EuclideanTrace(n, m, tuple(steps), swapped)


def s_formula(n: int, m: int) -> int:
    """Minimum support size over M(n, m): n + m - gcd(n, m)."""
    _positive("n", n)
    _positive("m", m)
    return n + m - gcd(n, m)


def build_E(n: int, k: int) -> UMatrix:
    """The n x kn matrix with k consecutive entries n in each row."""
    _positive("n", n)
    _positive("k", k)
    _bounded("k*n", k * n)
    return UMatrix([[n if i * k <= j < (i + 1) * k else 0 for j in range(k * n)] for i in range(n)])


def build_F(n: int, m: int) -> UMatrix:
    """Minimum-support member of M(n, m), for n <= m.

    F(n, kn) = E(n, k); otherwise F(n, m) = [E(n, k1) | F(r1, n)^T] with
    m = k1*n + r1.
    """
    _positive("n", n)
    _positive("m", m)
    if n > m:
        raise DomainError(f"build_F needs n <= m, got n={n}, m={m}; build F({m},{n}) and transpose it")
    _bounded("m", m)
    k, r = divmod(m, n)
    if r == 0:
        return build_E(n, k)
    return hstack(build_E(n, k), build_F(r, n).transpose())


def transpose_member(M: UMatrix) -> UMatrix:
    """Map a member of M(n, m) to the corresponding member of M(m, n)."""
    return M.transpose()


@dataclass(frozen=True)
class YParameters:
    n: int
    m: int
    k1: int
    k2: int
    d: int


def y_parameters(n: int, m: int) -> YParameters:
    """Check m = k1*n + d with n > d > 1 and n = k2*d; name the first failing clause."""
    _positive("n", n)
    _positive("m", m)
    k1, d = divmod(m, n)
    if k1 < 1:
        raise PreconditionError(f"m = k1*n + d needs k1 >= 1, i.e. m >= n (got n={n}, m={m})")
    if d <= 1:
        raise PreconditionError(f"d > 1 fails: m mod n = {d} for n={n}, m={m}")
    if n % d:
        raise PreconditionError(f"n = k2*d fails: d={d} does not divide n={n}")
    return YParameters(n, m, k1, n // d, d)


def build_B(n: int, m: int) -> UMatrix:
    """The k2 x (k1*k2 + 1) block: a column of d's, then a staircase of n-runs of length k1."""
    p = y_parameters(n, m)
    width = p.k1 * p.k2 + 1
    grid = [[0] * width for _ in range(p.k2)]
    for i in range(p.k2):
        grid[i][0] = p.d
        for j in range(1 + i * p.k1, 1 + (i + 1) * p.k1):
            grid[i][j] = n
    return UMatrix(grid)


def build_X(n: int, m: int) -> UMatrix:
    """d copies of B along the diagonal; equivalent to F(n, m)."""
    p = y_parameters(n, m)
    return block_diag(*[build_B(n, m)] * p.d)


def build_C(n: int, m: int) -> UMatrix:
    """The 2k2 x 2(k1*k2 + 1) block that replaces two copies of B.

    Coordinates, with w = k1*k2 + 1 and the second-half d-column at w + k1:

    * rows 0..k2-1 carry d in column 0;
    * row 0: n - d at column 1, n at columns 2..k1, d at column w + k1;
    * row i (1 <= i < k2): n at columns 1 + i*k1 .. (i+1)*k1;
    * row k2: d at column 1, n at columns w .. w + k1 - 1;
    * row k2 + j (1 <= j < k2): d at column w + k1 and a run of k1 n's
      starting at column w + k1 + 1 + (j-1)*k1.
    """
    p = y_parameters(n, m)
    n_, d, k1, k2 = p.n, p.d, p.k1, p.k2
    w = k1 * k2 + 1
    dcol = w + k1
    grid = [[0] * (2 * w) for _ in range(2 * k2)]
    for i in range(k2):
        grid[i][0] = d
    grid[0][1] = n_ - d
    for j in range(2, k1 + 1):
        grid[0][j] = n_
    grid[0][dcol] = d
    for i in range(1, k2):
        for j in range(1 + i * k1, 1 + (i + 1) * k1):
            grid[i][j] = n_
    grid[k2][1] = d
    for j in range(w, w + k1):
        grid[k2][j] = n_
    for jj in range(1, k2):
        row = k2 + jj
        grid[row][dcol] = d
        start = dcol + 1 + (jj - 1) * k1
        for j in range(start, start + k1):
            grid[row][j] = n_
    return UMatrix(grid)


def build_Y(n: int, m: int) -> UMatrix:
    """Extremal member of M(n, m) with support n + m - d + 1, which is not minimum.

    Y = diag(C, B, ..., B) with d - 2 copies of B.
    """
    p = y_parameters(n, m)
    _bounded("m", m)
    return block_diag(build_C(n, m), *[build_B(n, m)] * (p.d - 2))


def y_pairs(limit_sum: int) -> list[tuple[int, int]]:
    """All (n, m) with n + m <= limit_sum that admit build_Y."""
    out = []
    for n in range(2, limit_sum):
        for m in range(n, limit_sum - n + 1):
            try:
                y_parameters(n, m)
            except PreconditionError:
                continue
            out.append((n, m))
    return out


class GalleryId(str, Enum):
    T_4x6 = "T_4x6"
    F_3x4_nonextremal = "F_3x4_nonextremal"
    MIN_4x5_A = "MIN_4x5_A"
    MIN_4x5_B = "MIN_4x5_B"
    F_8x27 = "F_8x27"


def gallery(tag: GalleryId | str) -> UMatrix:
    """Load one of the literal example matrices shipped under ``fixtures/``."""
    tag = GalleryId(tag)
    text = resources.files("minsupport").joinpath("fixtures", f"{tag.value}.json").read_text()
    return matrix_from_dict(json.loads(text))


def gallery_path(tag: GalleryId | str):
    tag = GalleryId(tag)
    return resources.files("minsupport").joinpath("fixtures", f"{tag.value}.json")
