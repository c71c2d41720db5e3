"""Machine-checkable invariant suites behind the ``verify`` command.

Each suite returns a dict with one entry per named check.  Checks are
exact integer identities wherever the mathematics is exact; growth
checks carry the pinned tolerances stated with them.  A check entry is
``{"name", "passed", "detail"}``.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from math import isqrt

from .dual import DualInt
from .euclid import (
    EuclidTriple,
    PathSpec,
    lyapunov_estimate,
    lyapunov_exact_periodic,
    principal_shadow_ratio,
    relative_shadow_growth,
    river_growth_exponent,
    topograph_growth_exponent,
)
from .forms import (
    QuadForm,
    brute_force_two_squares,
    enumerate_topograph,
    find_river,
    jacobi_two_squares,
    sign_change_edges,
)
from .markov import (
    fibonacci_branch_shadow,
    markov_tree,
    shadow_markov_tree,
    shadow_vieta,
)
from .mordell import (
    PellContext,
    mordell_triple,
    pell_brute_force,
    pell_fundamental,
    principal_shadow,
    special_orbit_shadow_tree,
    vieta_mordell,
)

__all__ = [
    "verify_topograph",
    "verify_markov",
    "verify_mordell",
    "verify_growth",
    "verify_suite",
    "SUITES",
]

LN_PHI = math.log((1 + math.sqrt(5)) / 2)

#: OEIS A238846: shadow components of the Fibonacci branch.
FIBONACCI_SHADOWS = [1, 4, 13, 40, 120, 354, 1031, 2972, 8495]


def _check(name: str, passed: bool, detail: str = "") -> dict:
    return {"name": name, "passed": bool(passed), "detail": detail}


def _suite(name: str, checks: list[dict]) -> dict:
    failed = sum(1 for c in checks if not c["passed"])
    return {
        "suite": name,
        "checks": checks,
        "passed": len(checks) - failed,
        "failed": failed,
    }


def verify_topograph(depth: int = 10, trials: int = 10_000, seed: int = 0) -> dict:
    rng = random.Random(seed)
    checks = []

    q = QuadForm(1, 1, 1)
    tree = enumerate_topograph(q, depth)
    consistent = all(
        q(*node.regions[i].as_tuple()) == node.triple.as_tuple()[i]
        for node in tree.values() for i in range(3))
    checks.append(_check(
        "ap-rule-consistency",
        consistent,
        f"Q(region) equals propagated value on {len(tree)} nodes, depth {depth}"))

    ok = True
    for _ in range(trials):
        f = QuadForm(rng.randint(-9, 9), rng.randint(-9, 9), rng.randint(-9, 9))
        u = (rng.randint(-50, 50), rng.randint(-50, 50))
        v = (rng.randint(-50, 50), rng.randint(-50, 50))
        lhs = f(u[0] + v[0], u[1] + v[1]) + f(u[0] - v[0], u[1] - v[1])
        if lhs != 2 * (f(*u) + f(*v)):
            ok = False
            break
    checks.append(_check(
        "parallelogram-law", ok,
        f"Q(u+v)+Q(u-v) = 2(Q(u)+Q(v)) on {trials} random (form, u, v)"))

    f = QuadForm(3, -5, 7)
    disc = f.discriminant
    invariant = all(
        node.triple.local_discriminant() == disc
        for node in enumerate_topograph(f, 8).values())
    checks.append(_check(
        "discriminant-invariance", invariant,
        "local h^2 - 4xy constant over the tree, depth 8"))

    q17 = QuadForm(17, -12, 2)
    river = find_river(q17)
    separated = all(e.left_value * e.right_value < 0 for e in river.states)
    checks.append(_check(
        "river-separation", separated,
        f"opposite flanking signs over period of length {len(river.period)}"))

    scanned = {frozenset((e[0].as_tuple(), e[1].as_tuple()))
               for e in sign_change_edges(QuadForm(1, 0, -2), 12)}
    river2 = find_river(QuadForm(1, 0, -2))
    traced = _traced_river_pairs(QuadForm(1, 0, -2), river2, 400)
    checks.append(_check(
        "river-vs-scan", bool(scanned) and scanned <= traced,
        f"{len(scanned)} sign-change edges at depth 12 all lie on the traced river"))

    jac = all(jacobi_two_squares(n) == brute_force_two_squares(n)
              for n in range(1, 1001))
    checks.append(_check(
        "jacobi-two-squares", jac, "divisor formula equals lattice count, n <= 1000"))

    return _suite("topograph", checks)


def _traced_river_pairs(q, river, steps: int) -> set:
    """Region-vector pairs of river edges, traced both ways from the start.

    Reversing the directed edge (u, v) gives (u, -v) (the head vertex moves
    to the old tail), so the upstream half is the forward trace of that."""
    from .forms import RegionVector

    u0, v0 = river.basis
    pairs = set()
    for u, v in ((u0, v0), (u0, (-v0[0], -v0[1]))):
        y = q(*v)
        for _ in range(steps):
            pairs.add(frozenset((RegionVector.of(*u).as_tuple(),
                                 RegionVector.of(*v).as_tuple())))
            m = (u[0] + v[0], u[1] + v[1])
            w = q(*m)
            if (w > 0) == (y > 0):
                v, y = m, w
            else:
                u = m
    return pairs


def verify_markov(depth: int = 10, sample: int = 1000, seed: int = 1) -> dict:
    checks = []
    rng = random.Random(seed)

    shadow = shadow_markov_tree(depth)
    coeff = DualInt(3, -2)
    closed = all(
        t.x * t.x + t.y * t.y + t.z * t.z == coeff * t.x * t.y * t.z
        for t in shadow.values())
    checks.append(_check(
        "shadow-closure", closed,
        f"X^2+Y^2+Z^2 = (3-2ε)XYZ on {len(shadow)} nodes, depth {depth}"))

    plain = markov_tree(depth)
    projected = all(
        shadow[w].value_part().as_tuple() == plain[w].as_tuple() for w in plain)
    checks.append(_check(
        "projection-commutes", projected,
        "value parts reproduce the integer Markov tree node-by-node"))

    nodes = list(shadow.values())
    involutive = all(
        shadow_vieta(shadow_vieta(t)) == t
        for t in (rng.choice(nodes) for _ in range(sample)))
    checks.append(_check(
        "vieta-involution", involutive,
        f"double dual Vieta is the identity on {sample} sampled nodes"))

    checks.append(_check(
        "fibonacci-branch-shadow",
        fibonacci_branch_shadow(9) == FIBONACCI_SHADOWS,
        "all-L branch shadows are 1, 4, 13, 40, ... (OEIS A238846)"))

    return _suite("markov", checks)


def verify_mordell(ds=(2, 3, 5, 6, 7, 13), ms=(-2, 1, 3), bound: int = 30,
                   pell_limit: int = 50, seed: int = 2) -> dict:
    checks = []
    rng = random.Random(seed)

    mismatched = [d for d in range(2, pell_limit + 1)
                  if isqrt(d) ** 2 != d
                  and pell_fundamental(d) != pell_brute_force(d)]
    checks.append(_check(
        "pell-cf-vs-scan", not mismatched,
        f"continued-fraction solver equals ascending-q oracle, d <= {pell_limit}"))

    pu_ok = True
    for d in ds:
        ctx = PellContext.for_d(d)
        q = ctx.pell.q
        for a in range(61):
            p, u = ctx.half_pair(a)
            if p * p - d * q * q * u * u != 1:
                pu_ok = False
    checks.append(_check(
        "half-sequence-identity", pu_ok,
        "P_a^2 - d q^2 U_a^2 = 1 for a <= 60 over all tested d"))

    eq_ok = sys_ok = dual_ok = True
    for d in ds:
        base = PellContext.for_d(d)
        ctxs = [PellContext.for_d(d, m) for m in ms]
        for a in range(-bound, bound + 1):
            for b in range(-bound, bound + 1):
                e = EuclidTriple(a, b, a + b)
                x, y, z = mordell_triple(base, e).as_tuple()
                if x * x + y * y + z * z != 2 * x * y * z + 1:
                    eq_ok = False
                for ctx in ctxs:
                    sx, sy, sz = principal_shadow(ctx, e).shadow
                    if (x - y * z) * sx + (y - x * z) * sy + (z - x * y) * sz != 0:
                        sys_ok = False
                    dx, dy, dz = DualInt(x, sx), DualInt(y, sy), DualInt(z, sz)
                    if dx * dx + dy * dy + dz * dz != 2 * dx * dy * dz + 1:
                        dual_ok = False
    span = f"|a|,|b| <= {bound}, d in {tuple(ds)}"
    checks.append(_check("equation-exact", eq_ok, f"x^2+y^2+z^2 = 2xyz+1 on {span}"))
    checks.append(_check(
        "shadow-system-exact", sys_ok,
        f"linearised equation holds for m in {tuple(ms)} on {span}"))
    checks.append(_check(
        "dual-solution-exact", dual_ok,
        "value + shadow*eps solves the equation over dual integers"))

    ctx2 = PellContext.for_d(2)
    commute = all(
        vieta_mordell(mordell_triple(ctx2, EuclidTriple(a, b, a + b)))
        == mordell_triple(ctx2, EuclidTriple(a, -b, a - b))
        for a in range(-12, 13) for b in range(-12, 13))
    checks.append(_check(
        "vieta-index-commutation", commute,
        "Vieta move sends index c = a+b to c' = a-b"))

    equiv = True
    for _ in range(20):
        a, b, c = (rng.randint(-10, 10) for _ in range(3))
        orbit = special_orbit_shadow_tree(a, b, c, 10)
        topo = enumerate_topograph(QuadForm(a, c - a - b, b), 10)
        for w, (dx, dy, dz) in orbit.items():
            t = topo[w].triple
            if (dx.re, dy.re, dz.re) != (1, 1, 1) or (dx.sh, dy.sh, dz.sh) != t.as_tuple():
                equiv = False
                break
    checks.append(_check(
        "special-orbit-topograph", equiv,
        "dual Vieta orbit of (1,1,1) shadows equals the form topograph, "
        "20 random (a,b,c), depth 10"))

    return _suite("mordell", checks)


def verify_growth(seed: int = 3) -> dict:
    checks = []
    rng = random.Random(seed)
    golden = PathSpec.golden()

    exact = lyapunov_exact_periodic("LR")
    checks.append(_check(
        "exact-periodic-golden", abs(exact - LN_PHI) < 1e-12,
        f"ln(spectral radius)/2 of LR = {exact!r} vs ln(phi), tol 1e-12"))

    rotations = {lyapunov_exact_periodic(w) for w in ("LLR", "LRL", "RLL")}
    checks.append(_check(
        "cyclic-invariance", len(rotations) == 1,
        "exact value invariant under rotation of the period word"))

    estimates = []
    g40 = lyapunov_estimate(golden, 40).value
    estimates.append(g40)
    checks.append(_check(
        "golden-estimate", abs(g40 - LN_PHI) < 0.02,
        f"windowed estimate at n=40 is {g40:.6f}, within 0.02 of ln(phi)"))

    r500 = lyapunov_estimate(PathSpec.from_fraction(Fraction(3, 7)), 500).value
    estimates.append(r500)
    checks.append(_check(
        "rational-estimate", r500 < 0.05,
        f"rational path estimate at n=500 is {r500:.6f} < 0.05"))

    conv_ok = True
    for _ in range(10):
        word = "".join(rng.choice("LR") for _ in range(rng.randint(1, 8)))
        if "L" not in word or "R" not in word:
            word += "LR"
        est = lyapunov_estimate(PathSpec.from_word(word), 300).value
        estimates.append(est)
        if abs(est - lyapunov_exact_periodic(word)) >= 0.02:
            conv_ok = False
    checks.append(_check(
        "windowed-vs-exact", conv_ok,
        "10 random periodic words, |estimate(n=300) - exact| < 0.02"))

    checks.append(_check(
        "spectrum-bound", all(e <= LN_PHI + 0.02 for e in estimates),
        f"all {len(estimates)} computed estimates <= ln(phi) + 0.02"))

    hex_growth = topograph_growth_exponent(QuadForm(1, 1, 1), golden, 40)
    checks.append(_check(
        "definite-growth-doubles", abs(hex_growth - 2 * LN_PHI) < 0.05,
        f"|Q| growth exponent on golden path is {hex_growth:.6f} vs 2 ln(phi)"))

    river_exp = river_growth_exponent(QuadForm(17, -12, 2), repeats=20)
    checks.append(_check(
        "river-growth-zero", river_exp < 0.05,
        f"growth along the Conway river is {river_exp:.6f} < 0.05"))

    ctx = PellContext.for_d(2, 1)
    rel = relative_shadow_growth(ctx, golden, 30)
    checks.append(_check(
        "relative-shadow-growth", abs(rel - LN_PHI) < 0.05,
        f"(1/n) ln(shadow/value) at n=30 is {rel:.6f} vs ln(phi)"))

    ratio = principal_shadow_ratio(ctx, 30)
    sqrt2_scaled = isqrt(2 * 10**80)
    gap = abs(ratio - Fraction(10**40, sqrt2_scaled))
    # |ratio - 1/sqrt(2)|: compare against a 40-digit rational enclosure.
    close = gap < Fraction(1, 10**9)
    checks.append(_check(
        "shadow-ratio-limit", close,
        "m q U_30 / P_30 within 1e-9 of 1/sqrt(2) (40-digit comparison)"))

    rational_rel = relative_shadow_growth(ctx, PathSpec.from_fraction(Fraction(3, 7)), 200)
    checks.append(_check(
        "relative-growth-rational", rational_rel < 0.08,
        f"relative growth on a rational path tends to zero ({rational_rel:.6f})"))

    return _suite("growth", checks)


SUITES = {
    "topograph": verify_topograph,
    "markov": verify_markov,
    "mordell": verify_mordell,
    "growth": verify_growth,
}


def verify_suite(name: str, **kwargs) -> list[dict]:
    """Run one suite (or 'all'); returns a list of suite reports."""
    if name == "all":
        return [fn() for fn in SUITES.values()]
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}")
    return [SUITES[name](**kwargs)]
