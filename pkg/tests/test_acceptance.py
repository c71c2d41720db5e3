"""Acceptance suite: one test per criterion, each printing a pass/fail
line with its runtime against the stated budget.  Run with -s to see the
lines; every tolerance is pinned here, nothing is deferred."""

import math
import time
from contextlib import contextmanager
from fractions import Fraction
from math import isqrt

import pytest

from topograph import (
    DualInt,
    EuclidTriple,
    PathSpec,
    PellContext,
    QuadForm,
    enumerate_topograph,
    fibonacci_branch_shadow,
    find_river,
    jacobi_two_squares,
    brute_force_two_squares,
    lyapunov_estimate,
    lyapunov_exact_periodic,
    markov_tree,
    mordell_triple,
    pell_brute_force,
    pell_fundamental,
    principal_shadow,
    principal_shadow_ratio,
    relative_shadow_growth,
    river_growth_exponent,
    shadow_markov_tree,
    sign_change_edges,
    special_orbit_shadow_tree,
    topograph_growth_exponent,
)
from topograph.verify import _traced_river_pairs

LN_PHI = math.log((1 + math.sqrt(5)) / 2)


@contextmanager
def criterion(num, name, budget):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {num:02d} {name}: FAIL")
        raise
    elapsed = time.perf_counter() - start
    print(f"ACCEPTANCE {num:02d} {name}: PASS ({elapsed:.2f}s, budget {budget}s)")
    assert elapsed < budget, f"runtime {elapsed:.2f}s exceeds {budget}s budget"


def test_c01_shadow_fibonacci_branch():
    with criterion(1, "shadow Fibonacci branch = A238846", 1.0):
        assert fibonacci_branch_shadow(9) == [1, 4, 13, 40, 120, 354, 1031, 2972, 8495]


def test_c02_shadow_markov_closure_depth_12():
    with criterion(2, "shadow Markov closure + projection, depth 12", 5.0):
        shadow = shadow_markov_tree(12)
        plain = markov_tree(12)
        coeff = DualInt(3, -2)
        assert shadow.keys() == plain.keys()
        for word, t in shadow.items():
            assert t.x * t.x + t.y * t.y + t.z * t.z == coeff * t.x * t.y * t.z
            assert (t.x.re, t.y.re, t.z.re) == plain[word].as_tuple()


def test_c03_special_orbit_equals_topograph():
    import random
    with criterion(3, "special-orbit shadows = form topograph, 20 random", 5.0):
        rng = random.Random(2024)
        for _ in range(20):
            a, b, c = (rng.randint(-10, 10) for _ in range(3))
            orbit = special_orbit_shadow_tree(a, b, c, 10)
            topo = enumerate_topograph(QuadForm(a, c - a - b, b), 10)
            assert orbit.keys() == topo.keys()
            for word, (dx, dy, dz) in orbit.items():
                assert (dx.re, dy.re, dz.re) == (1, 1, 1)
                assert (dx.sh, dy.sh, dz.sh) == topo[word].triple.as_tuple()


def test_c04_pell_fundamental():
    with criterion(4, "Pell fundamental solutions vs brute force, d <= 50", 5.0):
        two = pell_fundamental(2)
        assert (two.p, two.q) == (3, 2)
        for d in range(2, 51):
            if isqrt(d) ** 2 != d:
                assert pell_fundamental(d) == pell_brute_force(d)


def test_c05_mordell_exactness():
    with criterion(5, "Mordell + shadow exactness, d in 6 values, |a|,|b| <= 30", 10.0):
        for d in (2, 3, 5, 6, 7, 13):
            ctxs = [PellContext.for_d(d, m) for m in (-2, 1, 3)]
            for a in range(-30, 31):
                for b in range(-30, 31):
                    e = EuclidTriple(a, b, a + b)
                    x, y, z = mordell_triple(ctxs[0], e).as_tuple()
                    assert x * x + y * y + z * z == 2 * x * y * z + 1
                    for ctx in ctxs:
                        sx, sy, sz = principal_shadow(ctx, e).shadow
                        assert (x - y * z) * sx + (y - x * z) * sy + (z - x * y) * sz == 0
                        dx, dy, dz = DualInt(x, sx), DualInt(y, sy), DualInt(z, sz)
                        assert dx * dx + dy * dy + dz * dz == 2 * dx * dy * dz + 1


def test_c06_shadow_ratio_limit():
    with criterion(6, "shadow ratio at a=30 vs 1/sqrt(2), tol 1e-9", 1.0):
        ratio = principal_shadow_ratio(PellContext.for_d(2, 1), 30)
        sqrt2_40 = Fraction(isqrt(2 * 10**80), 10**40)  # sqrt(2) to 40 digits
        assert abs(ratio - 1 / sqrt2_40) < Fraction(1, 10**9)


def test_c07_lyapunov_endpoints():
    with criterion(7, "Lyapunov spectrum endpoints", 2.0):
        assert abs(lyapunov_exact_periodic("LR") - LN_PHI) < 1e-12
        estimates = [
            lyapunov_estimate(PathSpec.golden(), 40).value,
            lyapunov_estimate(PathSpec.from_fraction(Fraction(3, 7)), 500).value,
        ]
        assert abs(estimates[0] - LN_PHI) < 0.02
        assert estimates[1] < 0.05
        assert all(e <= LN_PHI + 0.02 for e in estimates)


def test_c08_growth_exponents():
    with criterion(8, "form growth: 2 ln(phi) on golden path, flat on river", 5.0):
        hexagonal = topograph_growth_exponent(QuadForm(1, 1, 1), PathSpec.golden(), 40)
        assert abs(hexagonal - 2 * LN_PHI) < 0.05
        assert river_growth_exponent(QuadForm(17, -12, 2), repeats=20) < 0.05


def test_c09_relative_shadow_growth():
    with criterion(9, "relative shadow growth on golden path, n=30", 2.0):
        value = relative_shadow_growth(PellContext.for_d(2, 1), PathSpec.golden(), 30)
        assert abs(value - LN_PHI) < 0.05


def test_c10_river_correctness():
    with criterion(10, "river periodicity, separation, and scan match", 5.0):
        q = QuadForm(17, -12, 2)
        river = find_river(q)
        assert river.period and len(river.states) == len(river.period)
        for edge in river.states:
            assert edge.left_value * edge.right_value < 0
        scanned = {frozenset((a.as_tuple(), b.as_tuple()))
                   for a, b in sign_change_edges(q, 12)}
        assert scanned and scanned <= _traced_river_pairs(q, river, 600)


def test_c11_jacobi_oracle():
    with criterion(11, "Jacobi two-squares formula vs lattice count, n <= 1000", 2.0):
        for n in range(1, 1001):
            assert jacobi_two_squares(n) == brute_force_two_squares(n)


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-s", "-q"]))
