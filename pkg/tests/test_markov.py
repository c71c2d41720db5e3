import random

import pytest

from topograph import (
    DepthLimit,
    DualInt,
    InvalidTriple,
    MarkovTriple,
    ShadowMarkovTriple,
    fibonacci_branch_maxima,
    fibonacci_branch_shadow,
    markov_tree,
    shadow_markov_tree,
    shadow_vieta,
    vieta_markov,
)

A238846 = [1, 4, 13, 40, 120, 354, 1031, 2972, 8495]


def odd_index_fibonacci(n):
    """F_1, F_3, F_5, ... computed by direct recursion."""
    fib = [1, 1]
    while len(fib) < 2 * n + 2:
        fib.append(fib[-1] + fib[-2])
    return [fib[2 * k] for k in range(n)]


class TestVieta:
    def test_root_move(self):
        assert vieta_markov(MarkovTriple(1, 1, 1)) == MarkovTriple(1, 1, 2)

    def test_back_step(self):
        assert vieta_markov(MarkovTriple(1, 2, 5)) == MarkovTriple(1, 2, 1)
        assert vieta_markov(MarkovTriple(2, 5, 29)) == MarkovTriple(2, 5, 1)

    def test_involution(self):
        t = MarkovTriple(5, 13, 194)
        assert vieta_markov(vieta_markov(t)) == t

    def test_invalid_triple_rejected(self):
        with pytest.raises(InvalidTriple):
            MarkovTriple(1, 2, 3)
        with pytest.raises(InvalidTriple):
            MarkovTriple(1, 1, -1)


class TestMarkovTree:
    def test_contains_125_at_depth_one(self):
        tree = markov_tree(1)
        assert {tuple(sorted(t.as_tuple())) for t in tree.values()} >= {(1, 2, 5)}

    def test_all_nodes_satisfy_equation_depth_12(self):
        for t in markov_tree(12).values():
            x, y, z = t.as_tuple()
            assert x * x + y * y + z * z == 3 * x * y * z

    def test_fibonacci_branch_maxima(self):
        assert fibonacci_branch_maxima(6) == [1, 2, 5, 13, 34, 89]
        assert fibonacci_branch_maxima(9) == odd_index_fibonacci(9)

    def test_depth_limit(self):
        with pytest.raises(DepthLimit):
            markov_tree(30)


class TestShadowVieta:
    def test_root_move_from_origin(self):
        origin = ShadowMarkovTriple(DualInt(1), DualInt(1, 1), DualInt(1, 1))
        moved = shadow_vieta(origin)
        assert moved.z == DualInt(2, 0)

    def test_root_triple_satisfies_equation(self):
        x, y, z = DualInt(1), DualInt(1, 1), DualInt(1, 1)
        lhs = x * x + y * y + z * z
        assert lhs == DualInt(3, 4)
        assert lhs == DualInt(3, -2) * x * y * z

    def test_involution_on_random_nodes(self):
        rng = random.Random(5)
        nodes = list(shadow_markov_tree(9).values())
        for t in (rng.choice(nodes) for _ in range(1000)):
            assert shadow_vieta(shadow_vieta(t)) == t

    def test_invalid_shadow_triple_rejected(self):
        with pytest.raises(InvalidTriple):
            ShadowMarkovTriple(DualInt(1), DualInt(1), DualInt(1, 1))


class TestShadowTree:
    def test_closure_and_projection_depth_10(self):
        shadow = shadow_markov_tree(10)
        plain = markov_tree(10)
        assert shadow.keys() == plain.keys()
        for word, t in shadow.items():
            assert t.value_part() == plain[word]

    def test_fibonacci_branch_shadow_prefix(self):
        assert fibonacci_branch_shadow(3) == [1, 4, 13]
        assert fibonacci_branch_shadow(9) == A238846

    def test_branch_shadows_come_from_tree_nodes(self):
        tree = shadow_markov_tree(8)
        expected = fibonacci_branch_shadow(9)[1:]
        got = [tree[""].z.sh] + [tree["L" * k].z.sh for k in range(1, 8)]
        assert got == expected

    def test_branch_values_are_odd_index_fibonacci(self):
        tree = shadow_markov_tree(8)
        values = [tree["L" * k].z.re for k in range(8)]
        assert values == odd_index_fibonacci(9)[1:]
