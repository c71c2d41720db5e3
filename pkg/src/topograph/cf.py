"""Exact continued fractions: rationals, square roots, quadratic surds.

Everything here is integer arithmetic.  Quadratic irrationals are kept
in the form ``(p + q*sqrt(root)) / den`` and expanded with the classical
``(P, Q)`` recurrence; eventual periodicity is detected by repetition of
the complete quotient.  No floating point is used, so periods and
partial quotients are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

__all__ = ["rational_cf", "sqrt_cf", "convergents", "Surd"]


def rational_cf(num: int, den: int) -> list[int]:
    """Floor-based continued fraction of num/den (partial quotients)."""
    if den == 0:
        raise ZeroDivisionError("rational_cf with zero denominator")
    if den < 0:
        num, den = -num, -den
    out = []
    while True:
        q = num // den
        out.append(q)
        rem = num - q * den
        if rem == 0:
            return out
        num, den = den, rem


def sqrt_cf(d: int) -> tuple[int, list[int]]:
    """Continued fraction of sqrt(d) for nonsquare d >= 2.

    Returns ``(a0, period)`` where sqrt(d) = [a0; period, period, ...].
    """
    a0 = isqrt(d)
    if d < 2 or a0 * a0 == d:
        raise ValueError(f"sqrt_cf requires a nonsquare d >= 2, got {d}")
    period = []
    p, q, a = 0, 1, a0
    while True:
        p = a * q - p
        q = (d - p * p) // q
        a = (a0 + p) // q
        period.append(a)
        if q == 1:
            return a0, period


def convergents(quotients):
    """Yield convergent pairs (h, k) for a quotient iterable."""
    h_prev, h = 0, 1
    k_prev, k = 1, 0
    for a in quotients:
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
        yield h, k


def _floor_surd(p: int, n: int, q: int) -> int:
    """Exact floor of (p + sqrt(n))/q for nonsquare n > 0, q != 0."""
    s = isqrt(n)
    if q > 0:
        return (p + s) // q
    # (p + sqrt(n))/q = -((p + sqrt(n))/(-q)); the value is irrational,
    # so floor(-y) = -floor(y) - 1.
    return -((p + s) // (-q)) - 1


@dataclass(frozen=True)
class Surd:
    """Exact quadratic irrational (p + q*sqrt(root)) / den."""

    p: int
    q: int
    den: int
    root: int

    def __post_init__(self) -> None:
        if self.den == 0:
            raise ZeroDivisionError("Surd with zero denominator")
        if self.q == 0:
            raise ValueError("Surd must be irrational (q != 0)")
        r = isqrt(self.root)
        if self.root < 2 or r * r == self.root:
            raise ValueError(f"Surd root must be nonsquare >= 2, got {self.root}")

    @classmethod
    def from_periodic_cf(cls, quotients, period) -> "Surd":
        """Value of the eventually periodic continued fraction
        [q0; q1, ..., p0, p1, ..., p0, p1, ...]."""
        period = list(period)
        if not period or any(c < 1 for c in period):
            raise ValueError("period must be nonempty with entries >= 1")
        # Purely periodic tail t satisfies t = (A t + B) / (C t + D),
        # where [[A, B], [C, D]] is the product of [[c, 1], [1, 0]].
        a, b, c, d = 1, 0, 0, 1
        for e in period:
            a, b, c, d = e * a + c, e * b + d, a, b
        disc = (a - d) * (a - d) + 4 * b * c
        tail = cls(a - d, 1, 2 * c, disc)
        g = ((1, 0), (0, 1))
        for e in reversed(list(quotients)):
            g = ((e * g[0][0] + g[1][0], e * g[0][1] + g[1][1]), g[0])
        return tail.mobius(g)

    def mobius(self, g) -> "Surd":
        """Apply the fractional-linear map with integer matrix g."""
        (al, be), (ga, de) = g
        a = al * self.p + be * self.den
        b = al * self.q
        c = ga * self.p + de * self.den
        d = ga * self.q
        # (a + b sqrt r)/(c + d sqrt r), rationalised by the conjugate.
        num_p = a * c - b * d * self.root
        num_q = b * c - a * d
        den = c * c - d * d * self.root
        if num_q == 0 or den == 0:
            raise ZeroDivisionError("Moebius image is rational or infinite")
        return Surd(num_p, num_q, den, self.root)

    def cf(self, max_terms: int = 100_000) -> tuple[list[int], list[int]]:
        """Continued fraction as (preperiod, period), both exact."""
        p, q, den = self.p, self.q, self.den
        if q < 0:
            p, q, den = -p, -q, -den
        n = q * q * self.root
        big_p, big_q = p, den
        if (n - big_p * big_p) % big_q:
            n *= big_q * big_q
            big_p *= abs(big_q)
            big_q *= abs(big_q)
        terms: list[int] = []
        seen: dict[tuple[int, int], int] = {}
        while len(terms) <= max_terms:
            state = (big_p, big_q)
            if state in seen:
                i = seen[state]
                return terms[:i], terms[i:]
            seen[state] = len(terms)
            a = _floor_surd(big_p, n, big_q)
            terms.append(a)
            big_p = a * big_q - big_p
            big_q = (n - big_p * big_p) // big_q
        raise RuntimeError("continued fraction did not close within max_terms")

    def __float__(self) -> float:
        return (self.p + self.q * self.root**0.5) / self.den

    def __str__(self) -> str:
        return f"({self.p}+{self.q}√{self.root})/{self.den}"


def fraction_mobius(x: Fraction, g) -> Fraction | None:
    """Image of a rational under an integer Moebius map; None for infinity."""
    (a, b), (c, d) = g
    den = c * x.numerator + d * x.denominator
    if den == 0:
        return None
    return Fraction(a * x.numerator + b * x.denominator, den)
