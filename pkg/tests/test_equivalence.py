import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minsupport.constructions import GalleryId, build_F, gallery
from minsupport.errors import ArgumentError
from minsupport.matrix import UMatrix, entry_multiset, support
from minsupport.oracle.census import enumerate_extremal
from minsupport.oracle.equivalence import are_equivalent, canonical_form, canonical_key

from _support import brute_equivalent, random_member


def shuffled(M, rng):
    rows, cols = list(range(M.n)), list(range(M.m))
    rng.shuffle(rows)
    rng.shuffle(cols)
    return M.permute(rows, cols)


matrices = st.integers(1, 4).flatmap(
    lambda n: st.integers(1, 4).flatmap(
        lambda m: st.lists(st.lists(st.integers(0, 2), min_size=m, max_size=m), min_size=n, max_size=n)
    )
).map(UMatrix)


class TestRelation:
    def test_gallery_pair(self):
        A, B = gallery(GalleryId.MIN_4x5_A), gallery(GalleryId.MIN_4x5_B)
        assert len(support(A)) == len(support(B)) == 8
        assert entry_multiset(A) != entry_multiset(B)
        assert not are_equivalent(A, B)

    def test_shape_mismatch(self):
        with pytest.raises(ArgumentError):
            are_equivalent(UMatrix([[1]]), UMatrix([[1, 1]]))

    def test_large_forest(self):
        F = build_F(8, 27)
        assert are_equivalent(F, shuffled(F, random.Random(1)))

    @settings(max_examples=150, deadline=None)
    @given(matrices, st.randoms(use_true_random=False))
    def test_invariant_under_permutation(self, M, rnd):
        P = shuffled(M, rnd)
        assert canonical_key(P) == canonical_key(M)
        assert canonical_form(P) == canonical_form(M)
        assert are_equivalent(M, P) and are_equivalent(P, M)

    @settings(max_examples=150, deadline=None)
    @given(st.integers(1, 3), st.integers(1, 4), st.data())
    def test_agrees_with_brute_force(self, n, m, data):
        vals = st.lists(st.lists(st.integers(0, 2), min_size=m, max_size=m), min_size=n, max_size=n)
        A, B = UMatrix(data.draw(vals)), UMatrix(data.draw(vals))
        assert are_equivalent(A, B) == brute_equivalent(A, B)

    def test_canonical_form_is_equivalent(self):
        rng = random.Random(4)
        for _ in range(30):
            M = random_member(4, 5, rng)
            assert brute_equivalent(canonical_form(M), M)

    def test_census_classes_brute(self):
        c = enumerate_extremal(3, 4)
        ms = list(c.matrices())
        keys = [canonical_key(M) for M in ms]
        reps = []
        for M in ms:
            if not any(brute_equivalent(M, R) for R in reps):
                reps.append(M)
        assert len(set(keys)) == len(reps)
