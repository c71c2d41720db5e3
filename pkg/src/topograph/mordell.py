"""Mordell triples x^2 + y^2 + z^2 = 2xyz + 1 and their integer shadows.

Solutions come in two families: (1, y, y), and half-traces of powers of
a Pell unit.  With xi = p + q*sqrt(d), eta = p - q*sqrt(d) for a
fundamental solution p^2 - d q^2 = 1, the triple indexed by a Euclid
triple (a, b, c = a+b) is

    ( (xi^a + eta^a)/2, (xi^b + eta^b)/2, (xi^c + eta^c)/2 ).

Everything is computed through the integer half-trace and half-difference
sequences

    P_0 = 1, P_1 = p, P_{k+1} = 2p P_k - P_{k-1}      (= (xi^k + eta^k)/2)
    U_0 = 0, U_1 = 1, U_{k+1} = 2p U_k - U_{k-1}      (= (xi^k - eta^k)/(xi - eta))

with P_{-k} = P_k and U_{-k} = -U_k; sqrt(d) never appears at runtime.
For large indices the same sequences are evaluated by exact binary
doubling over GMP integers.

Background picture (documentation only, nothing here is evaluated at
runtime): writing x = cosh(u), y = cosh(v), z = cosh(w) linearises the
equation to w = u + v, with u = a*log(xi) on the integer family.  That
is why Vieta moves act on indices by c = a+b -> a-b (cosh subtraction)
and why the index triples live on the Euclid tree.

The principal shadow of the triple is (m*a*q*U_a, m*b*q*U_b, m*c*q*U_c)
for an integer scale m; it satisfies the linearisation

    (x - yz)*sx + (y - xz)*sy + (z - xy)*sz = 0,

so value + shadow*eps solves the Mordell equation over dual integers.
The stationary solution (1, 1, 1) is special: its dual orbits have unit
values, and their shadow components follow the arithmetic progression
rule, i.e. they sweep out the Conway topograph of the quadratic form
a x^2 + (c - a - b) x y + b y^2 determined by the starting shadows.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import gmpy2

from . import trees
from .cf import convergents, sqrt_cf
from .dual import DualInt
from .errors import InvalidTriple, SquareInput
from .euclid import EuclidTriple, euclid_tree

__all__ = [
    "PellSolution",
    "PellContext",
    "MordellTriple",
    "ShadowMordellTriple",
    "pell_fundamental",
    "pell_brute_force",
    "mordell_triple",
    "principal_shadow",
    "vieta_mordell",
    "shadow_vieta_mordell",
    "special_orbit_shadow_tree",
    "mordell_tree",
    "shadow_mordell_tree",
]

# Indices up to this bound use the cached three-term recurrence; larger
# ones switch to GMP-backed binary doubling.
_TABLE_LIMIT = 4096


def _check_pell_d(d: int) -> None:
    if d < 2 or isqrt(d) ** 2 == d:
        raise SquareInput(f"Pell's equation needs a nonsquare d >= 2, got {d}")


@dataclass(frozen=True)
class PellSolution:
    """A solution of p^2 - d*q^2 = 1 with positive p, q."""

    d: int
    p: int
    q: int

    def __post_init__(self) -> None:
        _check_pell_d(self.d)
        if self.p < 1 or self.q < 1:
            raise ValueError("Pell solution must have positive p, q")
        if self.p**2 - self.d * self.q**2 != 1:
            raise ValueError(f"({self.p}, {self.q}) fails p^2 - {self.d}q^2 = 1")


def pell_fundamental(d: int) -> PellSolution:
    """Minimal positive solution of p^2 - d*q^2 = 1 via the continued
    fraction of sqrt(d).

    Convergents are scanned until the Pell form equals +1; this walks one
    period when the period length is even and two when it is odd."""
    _check_pell_d(d)
    a0, period = sqrt_cf(d)

    def quotient_stream():
        yield a0
        while True:
            yield from period

    for h, k in convergents(quotient_stream()):
        if h * h - d * k * k == 1:
            return PellSolution(d, h, k)
    raise AssertionError("unreachable: Pell's equation always has a solution")


def pell_brute_force(d: int, q_limit: int = 10**6) -> PellSolution:
    """Ascending-q scan oracle for :func:`pell_fundamental`."""
    _check_pell_d(d)
    for q in range(1, q_limit + 1):
        p2 = 1 + d * q * q
        p = isqrt(p2)
        if p * p == p2:
            return PellSolution(d, p, q)
    raise RuntimeError(f"no Pell solution with q <= {q_limit} for d = {d}")


@dataclass(frozen=True)
class PellContext:
    """A fundamental Pell solution plus the integer shadow scale m."""

    pell: PellSolution
    m: int = 1

    def __post_init__(self) -> None:
        fundamental = pell_fundamental(self.pell.d)
        if (self.pell.p, self.pell.q) != (fundamental.p, fundamental.q):
            raise ValueError(
                f"({self.pell.p}, {self.pell.q}) is not the fundamental solution "
                f"for d = {self.pell.d}: expected ({fundamental.p}, {fundamental.q})")
        object.__setattr__(self, "_ptable", [1, self.pell.p])
        object.__setattr__(self, "_utable", [0, 1])

    @classmethod
    def for_d(cls, d: int, m: int = 1) -> "PellContext":
        return cls(pell_fundamental(d), m)

    @property
    def d(self) -> int:
        return self.pell.d

    def _extend_tables(self, upto: int) -> None:
        ptable, utable = self._ptable, self._utable
        twop = 2 * self.pell.p
        while len(ptable) <= upto:
            ptable.append(twop * ptable[-1] - ptable[-2])
            utable.append(twop * utable[-1] - utable[-2])

    def _pair_by_doubling(self, a: int) -> tuple[int, int]:
        # Track (P_k, V_k) with V_k = q*U_k, i.e. xi^k = P_k + V_k*sqrt(d):
        # squaring gives (P^2 + d V^2, 2 P V), a step multiplies by (p, q).
        d = gmpy2.mpz(self.pell.d)
        p = gmpy2.mpz(self.pell.p)
        q = gmpy2.mpz(self.pell.q)
        big_p, big_v = gmpy2.mpz(1), gmpy2.mpz(0)
        for bit in bin(a)[2:]:
            big_p, big_v = big_p * big_p + d * big_v * big_v, 2 * big_p * big_v
            if bit == "1":
                big_p, big_v = p * big_p + d * q * big_v, q * big_p + p * big_v
        return int(big_p), int(big_v // q)

    def half_pair(self, a: int) -> tuple[int, int]:
        """(P_a, U_a) for any integer index; P is even in a, U is odd."""
        k = abs(a)
        if k <= _TABLE_LIMIT:
            self._extend_tables(k)
            p, u = self._ptable[k], self._utable[k]
        else:
            p, u = self._pair_by_doubling(k)
        return p, (u if a >= 0 else -u)

    def half_trace(self, a: int) -> int:
        """P_a = (xi^a + eta^a) / 2."""
        return self.half_pair(a)[0]

    def half_diff_unit(self, a: int) -> int:
        """U_a = (xi^a - eta^a) / (xi - eta), so (xi^a - eta^a)/(2 sqrt d) = q*U_a."""
        return self.half_pair(a)[1]


@dataclass(frozen=True)
class MordellTriple:
    x: int
    y: int
    z: int

    def __post_init__(self) -> None:
        if self.x**2 + self.y**2 + self.z**2 != 2 * self.x * self.y * self.z + 1:
            raise InvalidTriple(f"{self.as_tuple()} fails x^2+y^2+z^2 = 2xyz+1")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)


@dataclass(frozen=True)
class ShadowMordellTriple:
    """A Mordell triple with an integer shadow satisfying the linearised
    equation, so that value + shadow*eps solves the equation over duals."""

    value: MordellTriple
    shadow: tuple[int, int, int]

    def __post_init__(self) -> None:
        x, y, z = self.value.as_tuple()
        sx, sy, sz = self.shadow
        if (x - y * z) * sx + (y - x * z) * sy + (z - x * y) * sz != 0:
            raise InvalidTriple(
                f"shadow {self.shadow} of {self.value.as_tuple()} fails the "
                "linearised Mordell equation")

    def duals(self) -> tuple[DualInt, DualInt, DualInt]:
        x, y, z = self.value.as_tuple()
        sx, sy, sz = self.shadow
        return (DualInt(x, sx), DualInt(y, sy), DualInt(z, sz))


def mordell_triple(ctx: PellContext, e: EuclidTriple) -> MordellTriple:
    """Half-traces (P_a, P_b, P_c) of Pell-unit powers; a Mordell solution."""
    return MordellTriple(
        ctx.half_trace(e.a), ctx.half_trace(e.b), ctx.half_trace(e.c))


def principal_shadow(ctx: PellContext, e: EuclidTriple) -> ShadowMordellTriple:
    """Principal integer shadow (m*a*q*U_a, m*b*q*U_b, m*c*q*U_c)."""
    q, m = ctx.pell.q, ctx.m
    return ShadowMordellTriple(
        value=mordell_triple(ctx, e),
        shadow=(
            m * e.a * q * ctx.half_diff_unit(e.a),
            m * e.b * q * ctx.half_diff_unit(e.b),
            m * e.c * q * ctx.half_diff_unit(e.c),
        ),
    )


def vieta_mordell(t: MordellTriple) -> MordellTriple:
    """Vieta involution (x, y, z) -> (x, y, 2xy - z); on half-trace triples
    it moves the index c = a + b to c' = a - b."""
    return MordellTriple(t.x, t.y, 2 * t.x * t.y - t.z)


def shadow_vieta_mordell(t: ShadowMordellTriple) -> ShadowMordellTriple:
    """Dual Vieta involution Z' = 2XY - Z applied to value and shadow."""
    big_x, big_y, big_z = t.duals()
    new_z = 2 * big_x * big_y - big_z
    return ShadowMordellTriple(
        value=MordellTriple(big_x.re, big_y.re, new_z.re),
        shadow=(big_x.sh, big_y.sh, new_z.sh),
    )


def special_orbit_shadow_tree(a: int, b: int, c: int, depth: int,
                              limit: int = trees.DEFAULT_DEPTH_LIMIT
                              ) -> dict[str, tuple[DualInt, DualInt, DualInt]]:
    """Dual Vieta tree of (1 + a*eps, 1 + b*eps, 1 + c*eps), the shadows of
    the stationary Mordell solution (1, 1, 1).

    The shadow components reproduce, node by node, the Conway topograph of
    a x^2 + (c - a - b) x y + b y^2: the dual Vieta rule on units is the
    arithmetic progression rule on shadows."""
    root = (DualInt(1, a), DualInt(1, b), DualInt(1, c))

    def step(state, direction):
        x, y, z = state
        if direction == "L":
            return (x, z, 2 * x * z - y)
        return (z, y, 2 * z * y - x)

    return trees.grow(root, step, depth, limit)


def mordell_tree(ctx: PellContext, depth: int,
                 limit: int = trees.DEFAULT_DEPTH_LIMIT) -> dict[str, MordellTriple]:
    """Mordell triples indexed by the Euclid tree (root (1,1,2) -> (p, p, P_2))."""
    return {w: mordell_triple(ctx, e) for w, e in euclid_tree(depth, limit).items()}


def shadow_mordell_tree(ctx: PellContext, depth: int,
                        limit: int = trees.DEFAULT_DEPTH_LIMIT
                        ) -> dict[str, ShadowMordellTriple]:
    """Principal shadows along the Euclid tree."""
    return {w: principal_shadow(ctx, e) for w, e in euclid_tree(depth, limit).items()}
