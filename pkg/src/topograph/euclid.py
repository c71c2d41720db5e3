"""Euclid tree paths, Lyapunov growth, and topograph growth experiments.

The Euclid tree holds triples (a, b, c) with a + b = c, rooted at
(1, 1, 2); the children of a node are (a, c, a+c) and (c, b, c+b), the
L/R convention shared with :mod:`topograph.forms`.  Running the tree
downward is the subtractive Euclidean algorithm, so gcd(a, b) = 1
everywhere.

Directed infinite paths are addressed by points of the projective line
through the Farey labelling: for xi with continued fraction
[c0; c1, c2, ...] the path word consists of alternating letter blocks,
c1 of L, then c2 of R, and so on.  (The integer part c0 only shifts xi
by an integer-translation symmetry of the tree, so it does not affect
any growth quantity; it is accepted and ignored.)  For rational xi the
quotients run out and the word continues with its last letter forever:
the path runs along a tree edge and growth becomes linear.

The growth of a path is measured by the limsup of ln(a_n)/n.  Finite-n
estimates take the maximum of ln(a_k)/k over the last 25% of steps; for
eventually periodic words the exact value is ln of the spectral radius
of the corresponding product of the matrices L = [[1,0],[1,1]] and
R = [[1,1],[0,1]], divided by the word length.  The spectrum of the
limit over all paths is [0, ln(golden ratio)].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

from . import trees
from .cf import Surd, fraction_mobius, rational_cf, sqrt_cf
from .errors import BadEuclidTriple, DegenerateImage, ZeroValueEncountered
from .forms import QuadForm, find_river

if TYPE_CHECKING:
    from .mordell import PellContext

__all__ = [
    "EuclidTriple",
    "EUCLID_ROOT",
    "PathSpec",
    "LyapunovEstimate",
    "euclid_step",
    "euclid_path",
    "euclid_tree",
    "word_from_cf",
    "lyapunov_estimate",
    "lyapunov_exact_periodic",
    "periodic_letter_word",
    "gl2_invariance_check",
    "topograph_growth_exponent",
    "river_growth_exponent",
    "relative_shadow_growth",
    "principal_shadow_ratio",
    "ln_int",
]


@dataclass(frozen=True)
class EuclidTriple:
    """Integer triple with a + b = c."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if self.a + self.b != self.c:
            raise BadEuclidTriple(f"{(self.a, self.b, self.c)} violates a + b = c")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


EUCLID_ROOT = EuclidTriple(1, 1, 2)


def euclid_step(t: EuclidTriple, direction: str) -> EuclidTriple:
    if direction == "L":
        return EuclidTriple(t.a, t.c, t.a + t.c)
    if direction == "R":
        return EuclidTriple(t.c, t.b, t.c + t.b)
    raise ValueError(f"direction must be 'L' or 'R', got {direction!r}")


def euclid_path(word: str) -> list[EuclidTriple]:
    """Triples from the root along a word; length |word| + 1."""
    trees.check_word(word)
    return trees.walk(EUCLID_ROOT, euclid_step, word)


def euclid_tree(depth: int, limit: int = trees.DEFAULT_DEPTH_LIMIT) -> dict[str, EuclidTriple]:
    return trees.grow(EUCLID_ROOT, euclid_step, depth, limit)


# ---------------------------------------------------------------------------
# Path addressing


@dataclass(frozen=True)
class PathSpec:
    """A directed path, given either by an explicit word or a continued
    fraction (finite, or eventually periodic).  Explicit words repeat
    cyclically when extended."""

    word: str | None = None
    quotients: tuple[int, ...] = ()
    period: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if (self.word is None) == (not self.quotients):
            raise ValueError("give exactly one of word or quotients")
        if self.word is not None:
            if not self.word:
                raise ValueError("path word must be nonempty")
            trees.check_word(self.word)
            if self.period or self.quotients:
                raise ValueError("word and continued fraction are exclusive")
        else:
            if any(c < 1 for c in self.quotients[1:]):
                raise ValueError("partial quotients c_i must be >= 1 for i >= 1")
            if any(c < 1 for c in self.period):
                raise ValueError("period entries must be >= 1")

    @classmethod
    def from_word(cls, word: str) -> "PathSpec":
        return cls(word=word)

    @classmethod
    def from_cf(cls, quotients, period=()) -> "PathSpec":
        quotients = tuple(quotients)
        period = tuple(period)
        if not quotients:
            if not period:
                raise ValueError("empty continued fraction")
            quotients, period = period[:1], period[1:] + period[:1]
        return cls(quotients=quotients, period=period)

    @classmethod
    def from_fraction(cls, x: Fraction) -> "PathSpec":
        return cls.from_cf(rational_cf(x.numerator, x.denominator))

    @classmethod
    def golden(cls) -> "PathSpec":
        return cls.from_cf([1], period=[1])

    @classmethod
    def sqrt(cls, d: int) -> "PathSpec":
        a0, period = sqrt_cf(d)
        return cls.from_cf([a0], period=period)

    @property
    def is_periodic(self) -> bool:
        return bool(self.period)

    def fraction_value(self) -> Fraction:
        """Exact value of a finite continued fraction."""
        if self.word is not None or self.is_periodic:
            raise ValueError("fraction_value needs a finite continued fraction")
        num, den = 1, 0
        for c in reversed(self.quotients):
            num, den = c * num + den, num
        return Fraction(num, den)

    def surd_value(self) -> Surd:
        """Exact quadratic irrational of an eventually periodic CF."""
        if not self.is_periodic:
            raise ValueError("surd_value needs a periodic continued fraction")
        return Surd.from_periodic_cf(self.quotients, self.period)

    def _blocks(self):
        yield from self.quotients[1:]
        while self.period:
            yield from self.period

    def letters(self, n: int) -> str:
        """First n letters of the path word."""
        if n < 0:
            raise ValueError("n must be nonnegative")
        if self.word is not None:
            reps = -(-n // len(self.word))
            return (self.word * reps)[:n]
        parts: list[str] = []
        total = 0
        for i, c in enumerate(self._blocks()):
            if total >= n:
                break
            parts.append(("L" if i % 2 == 0 else "R") * c)
            total += c
        if total < n:
            last = parts[-1][-1] if parts else "L"
            parts.append(last * (n - total))
        return "".join(parts)[:n]


def word_from_cf(cf, n: int) -> str:
    """Path word of length n for a continued fraction (PathSpec or
    quotient sequence)."""
    spec = cf if isinstance(cf, PathSpec) else PathSpec.from_cf(list(cf))
    return spec.letters(n)


# ---------------------------------------------------------------------------
# Lyapunov growth


@dataclass(frozen=True)
class LyapunovEstimate:
    """Growth estimate for a path; ``method`` records how it was obtained."""

    n: int
    value: float
    method: str  # "windowed-limsup" or "exact-periodic"


def ln_int(n) -> float:
    """Natural log of a positive arbitrary-precision integer.

    math.log decomposes big integers as mantissa * 2**e internally, so
    the result has ordinary double relative accuracy regardless of bit
    length."""
    n = int(n)
    if n <= 0:
        raise ValueError("ln_int requires a positive integer")
    return math.log(n)


def _window_start(n: int) -> int:
    return max(1, n - n // 4)


def lyapunov_estimate(spec: PathSpec, n: int) -> LyapunovEstimate:
    """Finite-n surrogate for the limsup of ln(a_k)/k: the maximum over
    the last quarter of the steps."""
    if n < 1:
        raise ValueError("n must be >= 1")
    path = euclid_path(spec.letters(n))
    value = max(ln_int(path[k].a) / k for k in range(_window_start(n), n + 1))
    return LyapunovEstimate(n=n, value=value, method="windowed-limsup")


_ML = ((1, 0), (1, 1))
_MR = ((1, 1), (0, 1))


def _word_matrix(word: str) -> tuple[tuple[int, int], tuple[int, int]]:
    m = ((1, 0), (0, 1))
    for ch in word:
        g = _ML if ch == "L" else _MR
        m = (
            (m[0][0] * g[0][0] + m[0][1] * g[1][0], m[0][0] * g[0][1] + m[0][1] * g[1][1]),
            (m[1][0] * g[0][0] + m[1][1] * g[1][0], m[1][0] * g[0][1] + m[1][1] * g[1][1]),
        )
    return m


_SWAP = str.maketrans("LR", "RL")


def _canonical_period(word: str) -> str:
    """Smallest representative among rotations and L/R swaps of the word's
    primitive root.  Repetition drops out via rho(M^k) = rho(M)^k, rotation
    conjugates the product, and the swap conjugates by [[0,1],[1,0]]; all
    three leave the growth rate unchanged, so equivalent period words are
    evaluated through one representative and compare bit-identically."""
    n = len(word)
    prim = word
    for p in range(1, n):
        if n % p == 0 and word[:p] * (n // p) == word:
            prim = word[:p]
            break
    swapped = prim.translate(_SWAP)
    return min(
        min(prim[i:] + prim[:i] for i in range(len(prim))),
        min(swapped[i:] + swapped[:i] for i in range(len(swapped))),
    )


def lyapunov_exact_periodic(word: str) -> float:
    """Exact growth rate of the periodic word: ln(spectral radius of the
    matrix product over one period) / period length.

    The product has determinant 1, so the radius is (t + sqrt(t^2-4))/2
    for trace t.  The word is first reduced to a canonical primitive
    period, making the value invariant (to the last bit) under rotation,
    repetition, and global L/R exchange."""
    trees.check_word(word)
    if not word:
        raise ValueError("period word must be nonempty")
    word = _canonical_period(word)
    m = _word_matrix(word)
    t = m[0][0] + m[1][1]
    if t <= 2:
        return 0.0
    # ln((t + sqrt(t^2 - 4)) / 2) without overflowing floats for huge t.
    ratio = 0.0 if t.bit_length() > 512 else 4.0 / (float(t) * float(t))
    return (ln_int(t) + math.log((1.0 + math.sqrt(1.0 - ratio)) / 2.0)) / len(word)


def periodic_letter_word(spec: PathSpec) -> str:
    """Letter period of an eventually periodic continued fraction.

    One pass through the quotient period flips the L/R block parity when
    its length is odd, in which case two passes close the letter cycle.
    """
    if spec.word is not None:
        return spec.word
    if not spec.is_periodic:
        raise ValueError("spec has no period")
    parity = (len(spec.quotients) - 1) % 2
    passes = 1 if len(spec.period) % 2 == 0 else 2
    parts = []
    for i, c in enumerate(spec.period * passes):
        parts.append(("L" if (parity + i) % 2 == 0 else "R") * c)
    return "".join(parts)


def gl2_invariance_check(spec: PathSpec, g, n: int = 300
                         ) -> tuple[LyapunovEstimate, LyapunovEstimate]:
    """Growth estimates for a path and its Moebius image under an integer
    matrix of determinant +-1.

    Quadratic irrationals are re-expanded exactly, and both sides use the
    exact-periodic method, so the two values agree exactly.  Rational
    paths use the windowed estimate (both sides near zero); a rational
    mapped to the point at infinity raises DegenerateImage.
    """
    (a, b), (c, d) = g
    if a * d - b * c not in (1, -1):
        raise ValueError("matrix must be integer with determinant +-1")
    if spec.is_periodic:
        here = lyapunov_exact_periodic(periodic_letter_word(spec))
        pre, per = spec.surd_value().mobius(g).cf()
        image = PathSpec.from_cf(pre, per)
        there = lyapunov_exact_periodic(periodic_letter_word(image))
        return (
            LyapunovEstimate(n=0, value=here, method="exact-periodic"),
            LyapunovEstimate(n=0, value=there, method="exact-periodic"),
        )
    if spec.word is not None:
        raise ValueError("explicit-word specs have no projective value to map")
    image_value = fraction_mobius(spec.fraction_value(), g)
    if image_value is None:
        raise DegenerateImage("Moebius image is the point at infinity")
    image = PathSpec.from_fraction(image_value)
    return (lyapunov_estimate(spec, n), lyapunov_estimate(image, n))


# ---------------------------------------------------------------------------
# Growth of form values and shadows along paths


def _growth_along(q: QuadForm, basis, letters: str) -> float:
    u, v = basis
    values = []
    for ch in letters:
        m = (u[0] + v[0], u[1] + v[1])
        w = q(*m)
        if w == 0:
            raise ZeroValueEncountered(f"{q} vanishes at {m}")
        values.append(abs(w))
        u, v = (u, m) if ch == "L" else (m, v)
    n = len(values)
    return max(ln_int(values[k - 1]) / k for k in range(_window_start(n), n + 1))


def topograph_growth_exponent(q: QuadForm, spec: PathSpec, n: int) -> float:
    """Windowed growth exponent of |Q| on the new region at each step of
    the path.  For definite forms this approaches twice the path's
    Lyapunov value."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _growth_along(q, ((1, 0), (0, 1)), spec.letters(n))


def river_growth_exponent(q: QuadForm, repeats: int = 20) -> float:
    """Growth exponent along the form's own Conway river (period word
    repeated); the flanking values cycle, so this tends to zero."""
    if repeats < 1:
        raise ValueError("repeats must be >= 1")
    river = find_river(q)
    return _growth_along(q, river.basis, river.period * repeats)


def relative_shadow_growth(ctx: "PellContext", spec: PathSpec, n: int) -> float:
    """(1/n) * ln(shadow_n / value_n) for the principal shadows of the
    Pell-power triples indexed along the Euclid path; approaches the
    path's Lyapunov value.

    Both the shadow m*a*q*U_a and the value P_a are computed as exact
    integers before the single logarithm at the boundary."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if ctx.m == 0:
        raise ValueError("relative growth needs a nonzero shadow scale m")
    a_n = euclid_path(spec.letters(n))[-1].a
    p, u = ctx.half_pair(a_n)
    shadow = abs(ctx.m) * a_n * ctx.pell.q * u
    return (ln_int(shadow) - ln_int(p)) / n


def principal_shadow_ratio(ctx: "PellContext", a: int) -> Fraction:
    """Exact rational shadow(a) / (a * value(a)) = m*q*U_a / P_a.

    As a grows this approaches m / sqrt(d) at the rate of the square of
    the small Pell unit."""
    if a == 0:
        raise ValueError("index a must be nonzero")
    p, u = ctx.half_pair(abs(a))
    return Fraction(ctx.m * ctx.pell.q * u, p)
