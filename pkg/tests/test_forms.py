import random
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from topograph import (
    DepthLimit,
    FaceTriple,
    QuadForm,
    ap_step,
    brute_force_two_squares,
    enumerate_topograph,
    jacobi_two_squares,
    region_vector,
    region_vectors,
    values_along_path,
)

HEX = QuadForm(1, 1, 1)
SUM_SQ = QuadForm(1, 0, 1)
Q17 = QuadForm(17, -12, 2)

coeff = st.integers(min_value=-20, max_value=20)
coord = st.integers(min_value=-100, max_value=100)


def random_word(rng, length):
    return "".join(rng.choice("LR") for _ in range(length))


class TestRootTriple:
    def test_hexagonal(self):
        assert HEX.root_triple() == FaceTriple(1, 1, 3)

    def test_sum_of_squares(self):
        assert SUM_SQ.root_triple() == FaceTriple(1, 1, 2)

    def test_river_form(self):
        assert Q17.root_triple() == FaceTriple(17, 2, 7)


class TestApStep:
    def test_replaces_across_pair(self):
        # from (1,1,3), keeping the (1,3) pair replaces the other 1 by 7
        assert ap_step(FaceTriple(1, 1, 3), "L") == FaceTriple(1, 3, 7)

    def test_sum_of_squares_step(self):
        assert ap_step(FaceTriple(1, 1, 2), "L") == FaceTriple(1, 2, 5)

    def test_symmetric_triple(self):
        assert ap_step(FaceTriple(5, 5, 5), "L").z == 3 * 5

    def test_bad_direction(self):
        with pytest.raises(ValueError):
            ap_step(FaceTriple(1, 1, 3), "X")


class TestValuesAlongPath:
    def test_empty_word_is_root(self):
        assert values_along_path(HEX, "") == [FaceTriple(1, 1, 3)]

    def test_length(self):
        assert len(values_along_path(HEX, "LRLR")) == 5

    def test_sum_of_squares_values_are_coprime_square_sums(self):
        rng = random.Random(7)
        for _ in range(50):
            word = random_word(rng, 12)
            triples = values_along_path(SUM_SQ, word)
            for k in range(1, len(triples)):
                u, v = region_vector(word[:k], "z").as_tuple()
                assert gcd(abs(u), abs(v)) == 1
                assert triples[k].z == u * u + v * v

    def test_hexagonal_values_never_2_mod_3(self):
        # oracle: direct evaluation over coprime pairs
        for u in range(-30, 31):
            for v in range(-30, 31):
                if gcd(abs(u), abs(v)) == 1:
                    assert HEX(u, v) % 3 != 2
        # and the propagated tree values agree
        for node in enumerate_topograph(HEX, 8).values():
            for value in node.triple.as_tuple():
                assert value % 3 != 2


class TestRegionVectors:
    def test_root_regions(self):
        assert [r.as_tuple() for r in region_vectors("")] == [(1, 0), (0, 1), (1, 1)]

    def test_matches_independent_stern_brocot(self):
        rng = random.Random(11)
        for _ in range(200):
            word = random_word(rng, rng.randint(0, 14))
            # independent mediant recursion: lo/hi interval endpoints
            lo, hi = (0, 1), (1, 0)
            for ch in word:
                m = (lo[0] + hi[0], lo[1] + hi[1])
                if ch == "L":
                    lo = m
                else:
                    hi = m
            mediant = (lo[0] + hi[0], lo[1] + hi[1])
            assert region_vector(word, "z").as_tuple() == mediant
            assert region_vector(word, "x").as_tuple() == hi
            assert region_vector(word, "y").as_tuple() == lo

    def test_coprimality_on_random_words(self):
        rng = random.Random(13)
        for _ in range(10_000):
            word = random_word(rng, rng.randint(0, 18))
            u, v = region_vector(word, "z").as_tuple()
            assert gcd(abs(u), abs(v)) == 1

    def test_bad_selector(self):
        with pytest.raises(ValueError):
            region_vector("", "w")


class TestEnumerate:
    def test_depth_zero_is_root_only(self):
        tree = enumerate_topograph(HEX, 0)
        assert list(tree) == [""]
        assert tree[""].triple == FaceTriple(1, 1, 3)

    def test_node_count(self):
        assert len(enumerate_topograph(HEX, 5)) == 2**6 - 1

    def test_depth_two_values(self):
        values = {v for n in enumerate_topograph(HEX, 2).values()
                  for v in n.triple.as_tuple()}
        assert {1, 3, 7} <= values

    def test_depth_limit(self):
        with pytest.raises(DepthLimit):
            enumerate_topograph(HEX, 25)
        with pytest.raises(DepthLimit):
            enumerate_topograph(HEX, 7, limit=6)

    def test_values_match_direct_evaluation(self):
        # propagated values equal Q on the region vectors, several forms
        for q in (HEX, SUM_SQ, Q17, QuadForm(-3, 5, 2)):
            for node in enumerate_topograph(q, 7).values():
                for i in range(3):
                    assert q(*node.regions[i].as_tuple()) == node.triple.as_tuple()[i]


class TestAlgebraicInvariants:
    @given(coeff, coeff, coeff, coord, coord, coord, coord)
    def test_parallelogram_law(self, a, h, b, u1, u2, v1, v2):
        q = QuadForm(a, h, b)
        lhs = q(u1 + v1, u2 + v2) + q(u1 - v1, u2 - v2)
        assert lhs == 2 * (q(u1, u2) + q(v1, v2))

    def test_discriminant_matches_triple_form(self):
        # D(x, y, z) with z = x + y + h gives back h^2 - 4xy
        rng = random.Random(3)
        for _ in range(300):
            q = QuadForm(rng.randint(-9, 9), rng.randint(-9, 9), rng.randint(-9, 9))
            word = random_word(rng, rng.randint(0, 10))
            for t in values_along_path(q, word):
                assert t.local_discriminant() == q.discriminant


class TestTwoSquares:
    def test_examples(self):
        assert jacobi_two_squares(5) == 8
        assert jacobi_two_squares(3) == 0
        assert jacobi_two_squares(1) == 4

    def test_against_lattice_count(self):
        for n in range(1, 1001):
            assert jacobi_two_squares(n) == brute_force_two_squares(n)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            jacobi_two_squares(0)
