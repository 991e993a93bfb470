from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minsupport.errors import DimensionError, NotMemberError, ParseError
from minsupport.matrix import (
    UMatrix,
    entry_multiset,
    format_rational,
    scale_check_birkhoff,
    support,
    to_rational,
    validate,
    verify_tiling,
)

from _support import MIN45_A_ROWS, T_ROWS


def small_matrices(max_dim=4, values=st.integers(0, 4)):
    return st.integers(1, max_dim).flatmap(
        lambda n: st.integers(1, max_dim).flatmap(
            lambda m: st.lists(st.lists(values, min_size=m, max_size=m), min_size=n, max_size=n)
        )
    ).map(UMatrix)


class TestRational:
    def test_coercions(self):
        assert to_rational(3) == 3
        assert to_rational("6/4") == Fraction(3, 2)
        assert to_rational(" -2 ") == -2

    @pytest.mark.parametrize("bad", ["0.5", "1e3", "x", "1/0", 0.5, True, None])
    def test_rejects_inexact_or_garbage(self, bad):
        with pytest.raises(ParseError):
            to_rational(bad)

    def test_rendering(self):
        assert format_rational(Fraction(4, 2)) == "2"
        assert format_rational(Fraction(-3, 6)) == "-1/2"


class TestUMatrix:
    def test_ragged_rows(self):
        with pytest.raises(DimensionError):
            UMatrix([[1, 2], [3]])

    def test_empty(self):
        with pytest.raises(DimensionError):
            UMatrix([])

    def test_immutable_and_hashable(self):
        A = UMatrix([[1, 2], [3, 4]])
        assert A == UMatrix([["1", "2"], [3, "8/2"]])
        assert len({A, UMatrix([[1, 2], [3, 4]])}) == 1
        assert A.transpose().rows == ((1, 3), (2, 4))

    def test_permute(self):
        A = UMatrix([[1, 2, 3], [4, 5, 6]])
        assert A.permute([1, 0], [2, 0, 1]).rows == ((6, 4, 5), (3, 1, 2))


class TestValidate:
    def test_T(self):
        r = validate(UMatrix(T_ROWS))
        assert r.is_member
        assert r.row_sums == (6,) * 4 and r.col_sums == (4,) * 6

    def test_one_by_one(self):
        assert validate(UMatrix([[1]])).is_member

    def test_zero_matrix(self):
        r = validate(UMatrix.zeros(3, 4))
        assert not r.is_member
        assert r.row_sums == (0, 0, 0)
        assert len(r.violations) == 7  # every row and every column

    def test_negative_entries_are_listed(self):
        r = validate(UMatrix([[3, -1], [-1, 3]]))
        assert not r.is_member
        assert sum("negative" in v for v in r.violations) == 2

    def test_degenerate_row(self):
        assert validate(UMatrix([[1, 1, 1]])).is_member
        assert validate(UMatrix([[1], [1], [1]])).is_member


class TestSupport:
    def test_T(self):
        assert len(support(UMatrix(T_ROWS))) == 9

    def test_zero(self):
        assert support(UMatrix.zeros(2, 3)) == frozenset()

    @given(small_matrices(), st.randoms(use_true_random=False))
    def test_size_invariant_under_permutation(self, M, rnd):
        rows, cols = list(range(M.n)), list(range(M.m))
        rnd.shuffle(rows)
        rnd.shuffle(cols)
        assert len(support(M.permute(rows, cols))) == len(support(M))


class TestTiling:
    def test_examples(self):
        assert verify_tiling(UMatrix(T_ROWS))
        assert not verify_tiling(UMatrix.zeros(2, 2))
        assert verify_tiling(UMatrix([[2, 2, 0, 0], [0, 0, 2, 2]]))

    @settings(max_examples=300)
    @given(small_matrices(values=st.integers(-1, 4)))
    def test_agrees_with_validate(self, M):
        assert verify_tiling(M) == validate(M).is_member

    @given(small_matrices(max_dim=3, values=st.integers(0, 3)))
    def test_member_total_mass(self, M):
        if validate(M).is_member:
            assert sum(v for _, _, v in M.cells()) == M.n * M.m


class TestBirkhoff:
    def test_scaled_identity(self):
        assert scale_check_birkhoff(UMatrix([[3, 0, 0], [0, 3, 0], [0, 0, 3]]))

    def test_interior(self):
        assert not scale_check_birkhoff(UMatrix([[1, 1], [1, 1]]))

    def test_cyclic_shift(self):
        P = [[4 if j == (i + 1) % 4 else 0 for j in range(4)] for i in range(4)]
        M = UMatrix(P)
        assert scale_check_birkhoff(M)
        assert len(support(M)) == 4

    def test_non_square(self):
        with pytest.raises(DimensionError):
            scale_check_birkhoff(UMatrix(T_ROWS))

    def test_non_member(self):
        with pytest.raises(NotMemberError):
            scale_check_birkhoff(UMatrix([[1, 0], [0, 1]]))


class TestEntryMultiset:
    def test_zero(self):
        assert entry_multiset(UMatrix.zeros(2, 2)) == {}

    def test_min45_a(self):
        assert entry_multiset(UMatrix(MIN45_A_ROWS)) == {1: 2, 2: 2, 3: 2, 4: 2}
