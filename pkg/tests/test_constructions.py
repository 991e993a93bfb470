from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from minsupport.constructions import (
    GalleryId,
    build_B,
    build_C,
    build_E,
    build_F,
    build_X,
    build_Y,
    euclidean_trace,
    gallery,
    s_formula,
    transpose_member,
    y_pairs,
)
from minsupport.errors import DomainError, PreconditionError
from minsupport.extremality import is_extremal
from minsupport.matrix import UMatrix, entry_multiset, support, validate
from minsupport.oracle.equivalence import are_equivalent

from _support import MIN45_A_ROWS, MIN45_B_ROWS, NONEXTREMAL_ROWS, T_ROWS


class TestEuclideanTrace:
    def test_8_27(self):
        tr = euclidean_trace(8, 27)
        assert tr.steps == ((3, 3), (2, 2), (1, 1), (2, 0))
        assert tr.gcd == 1 and tr.t == 3

    def test_exact_division(self):
        assert euclidean_trace(5, 15).steps == ((3, 0),)
        assert euclidean_trace(5, 15).gcd == 5

    def test_4_6(self):
        tr = euclidean_trace(4, 6)
        assert tr.steps == ((1, 2), (2, 0))
        assert tr.gcd == gcd(4, 6) == 2

    def test_swap_is_recorded(self):
        tr = euclidean_trace(27, 8)
        assert tr.swapped and (tr.n, tr.m) == (8, 27)

    @pytest.mark.parametrize("bad", [(0, 3), (3, -1), (2.0, 3)])
    def test_domain(self, bad):
        with pytest.raises(DomainError):
            euclidean_trace(*bad)

    @given(st.integers(1, 500), st.integers(1, 500))
    def test_invariants(self, a, b):
        tr = euclidean_trace(a, b)
        n, m = tr.n, tr.m
        dividend, divisor = m, n
        for k, r in tr.steps:
            assert dividend == k * divisor + r and 0 <= r < divisor and k >= 1
            dividend, divisor = divisor, r
        assert tr.steps[-1][1] == 0
        assert tr.gcd == gcd(a, b)
        # telescoping: k1 n + k2 r1 + ... = n + m - r_t
        assert tr.telescoped_support() == n + m - tr.gcd


class TestE:
    def test_8_3(self):
        E = build_E(8, 3)
        assert E.shape == (8, 24)
        assert all(E.rows[i][3 * i : 3 * i + 3] == (8, 8, 8) for i in range(8))
        assert len(support(E)) == 24 and validate(E).is_member

    def test_small(self):
        assert build_E(1, 1) == UMatrix([[1]])
        assert build_E(2, 1) == UMatrix([[2, 0], [0, 2]])

    @given(st.integers(1, 12), st.integers(1, 12))
    def test_one_entry_per_column(self, n, k):
        E = build_E(n, k)
        assert validate(E).is_member
        assert all(sum(1 for x in col if x) == 1 for col in E.columns())


class TestF:
    def test_matches_display(self):
        assert build_F(8, 27) == gallery(GalleryId.F_8x27)

    def test_base_case(self):
        assert build_F(2, 4) == build_E(2, 2)

    def test_4_6(self):
        F = build_F(4, 6)
        assert len(support(F)) == 8
        assert entry_multiset(F) == {4: 4, 2: 4}
        assert validate(F).is_member

    def test_orientation_enforced(self):
        with pytest.raises(DomainError):
            build_F(6, 4)
        assert validate(transpose_member(build_F(4, 6))).is_member

    def test_all_small(self):
        for n in range(1, 41):
            for m in range(n, 41):
                F = build_F(n, m)
                assert validate(F).is_member, (n, m)
                assert len(support(F)) == s_formula(n, m), (n, m)
                assert entry_multiset(F) == euclidean_trace(n, m).entry_multiset(), (n, m)
            assert build_F(n, 3 * n) == build_E(n, 3)


class TestY:
    def test_is_T(self):
        assert build_Y(4, 6) == UMatrix(T_ROWS)

    def test_6_9(self):
        Y = build_Y(6, 9)
        assert validate(Y).is_member
        assert len(support(Y)) == 13 == 6 + 9 - 3 + 1
        assert is_extremal(Y)

    @pytest.mark.parametrize(
        "n,m,clause",
        [(4, 5, "d > 1"), (4, 7, "divide"), (6, 4, "k1 >= 1"), (4, 8, "d > 1")],
    )
    def test_precondition(self, n, m, clause):
        with pytest.raises(PreconditionError, match=clause):
            build_Y(n, m)

    def test_family(self):
        pairs = y_pairs(30)
        assert (4, 6) in pairs and (6, 9) in pairs and (4, 5) not in pairs
        for n, m in pairs:
            if n > 12:
                continue
            Y = build_Y(n, m)
            assert validate(Y).is_member, (n, m)
            assert len(support(Y)) == s_formula(n, m) + 1, (n, m)
            assert is_extremal(Y), (n, m)

    def test_blocks(self):
        # n = 6, m = 15: k1 = 2, d = 3, k2 = 2
        B, C = build_B(6, 15), build_C(6, 15)
        assert B.shape == (2, 5) and C.shape == (4, 10)
        assert len(support(C)) == 2 * len(support(B)) + 1
        for M in (B, C):
            assert all(sum(r) == 15 for r in M.rows)
            assert all(sum(c) == 6 for c in M.columns())

    def test_X_is_equivalent_to_F(self):
        for n, m in y_pairs(30):
            if n <= 12:
                assert are_equivalent(build_X(n, m), build_F(n, m)), (n, m)


class TestSFormula:
    def test_values(self):
        assert s_formula(4, 6) == 8
        for n in range(1, 8):
            for k in range(1, 6):
                assert s_formula(n, k * n) == k * n
                assert s_formula(n, k * n + 1) == (k + 1) * n


class TestGallery:
    @pytest.mark.parametrize(
        "tag,rows,size",
        [
            (GalleryId.T_4x6, T_ROWS, 9),
            (GalleryId.F_3x4_nonextremal, NONEXTREMAL_ROWS, 7),
            (GalleryId.MIN_4x5_A, MIN45_A_ROWS, 8),
            (GalleryId.MIN_4x5_B, MIN45_B_ROWS, 8),
        ],
    )
    def test_literals(self, tag, rows, size):
        M = gallery(tag)
        assert M == UMatrix(rows)
        assert len(support(M)) == size
        assert validate(M).is_member

    def test_by_string(self):
        assert gallery("T_4x6") == UMatrix(T_ROWS)
        with pytest.raises(ValueError):
            gallery("nope")
