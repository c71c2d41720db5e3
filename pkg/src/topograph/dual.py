"""Exact dual-number arithmetic.

A dual number is ``a + b*eps`` with ``eps**2 = 0``.  The ``eps``
coefficient is called the *shadow* of the value ``a``.  Over the
integers these form a commutative ring whose units are exactly
``+-1 + b*eps`` for any integer ``b``.

Two flavours are provided:

* :class:`DualInt` over arbitrary-precision integers -- the ring in
  which all shadow Markov / Mordell triples live;
* :class:`DualRat` over exact rationals -- used by analysis helpers
  only, never by the integer tree generators.

``eps**2 = 0`` is structural: multiplication simply never produces a
second-order term, so no rounding or truncation is involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotAUnit

__all__ = ["DualInt", "DualRat", "analytic_lift"]


@dataclass(frozen=True, eq=False)
class DualInt:
    """Integer dual number ``re + sh*eps``, immutable and exact."""

    re: int
    sh: int = 0

    def __post_init__(self) -> None:
        if not isinstance(self.re, int) or not isinstance(self.sh, int):
            raise TypeError("DualInt components must be int")

    @staticmethod
    def _coerce(other: "DualInt | int") -> "DualInt | None":
        if isinstance(other, DualInt):
            return other
        if isinstance(other, int):
            return DualInt(other)
        return None

    def __add__(self, other: "DualInt | int") -> "DualInt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return DualInt(self.re + o.re, self.sh + o.sh)

    __radd__ = __add__

    def __sub__(self, other: "DualInt | int") -> "DualInt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return DualInt(self.re - o.re, self.sh - o.sh)

    def __rsub__(self, other: "DualInt | int") -> "DualInt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> "DualInt":
        return DualInt(-self.re, -self.sh)

    def __mul__(self, other: "DualInt | int") -> "DualInt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # (a + b eps)(c + d eps) = ac + (ad + bc) eps
        return DualInt(self.re * o.re, self.re * o.sh + self.sh * o.re)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "DualInt":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = DualInt(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DualInt):
            return self.re == other.re and self.sh == other.sh
        if isinstance(other, int):
            return self.sh == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.re) if self.sh == 0 else hash((self.re, self.sh))

    def is_unit(self) -> bool:
        """True iff the value part is +-1 (shadows never obstruct)."""
        return self.re in (1, -1)

    def inverse(self) -> "DualInt":
        """Inverse of a unit: (s + b eps)^-1 = s - s*b*s eps for s = +-1."""
        if not self.is_unit():
            raise NotAUnit(f"{self} has value part {self.re}, not +-1")
        # (1 + b eps)^-1 = 1 - b eps;  (-1 + b eps)^-1 = -1 - b eps
        return DualInt(self.re, -self.sh)

    def as_rat(self) -> "DualRat":
        return DualRat(Fraction(self.re), Fraction(self.sh))

    def json_dict(self) -> dict[str, str]:
        """Decimal-string encoding, safe for consumers without big ints."""
        return {"re": str(self.re), "sh": str(self.sh)}

    def __str__(self) -> str:
        if self.sh == 0:
            return str(self.re)
        sign = "+" if self.sh > 0 else "-"
        mag = abs(self.sh)
        coeff = "" if mag == 1 else str(mag)
        return f"{self.re}{sign}{coeff}ε"

    def __repr__(self) -> str:
        return f"DualInt({self.re}, {self.sh})"


@dataclass(frozen=True, eq=False)
class DualRat:
    """Dual number over exact rationals, for analysis helpers."""

    re: Fraction
    sh: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "sh", Fraction(self.sh))

    @staticmethod
    def _coerce(other: "DualRat | Fraction | int") -> "DualRat | None":
        if isinstance(other, DualRat):
            return other
        if isinstance(other, (int, Fraction)):
            return DualRat(Fraction(other))
        return None

    def __add__(self, other: "DualRat | Fraction | int") -> "DualRat":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return DualRat(self.re + o.re, self.sh + o.sh)

    __radd__ = __add__

    def __sub__(self, other: "DualRat | Fraction | int") -> "DualRat":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return DualRat(self.re - o.re, self.sh - o.sh)

    def __rsub__(self, other: "DualRat | Fraction | int") -> "DualRat":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> "DualRat":
        return DualRat(-self.re, -self.sh)

    def __mul__(self, other: "DualRat | Fraction | int") -> "DualRat":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return DualRat(self.re * o.re, self.re * o.sh + self.sh * o.re)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "DualRat":
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = DualRat(Fraction(1))
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DualRat):
            return self.re == other.re and self.sh == other.sh
        if isinstance(other, (int, Fraction)):
            return self.sh == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.re) if self.sh == 0 else hash((self.re, self.sh))

    def __str__(self) -> str:
        if self.sh == 0:
            return str(self.re)
        sign = "+" if self.sh > 0 else "-"
        mag = abs(self.sh)
        coeff = "" if mag == 1 else str(mag)
        return f"{self.re}{sign}{coeff}ε"

    def __repr__(self) -> str:
        return f"DualRat({self.re!r}, {self.sh!r})"


def analytic_lift(value: Fraction | int, derivative: Fraction | int, x: DualRat) -> DualRat:
    """Lift an analytic function to dual numbers: f(a + b eps) = f(a) + b f'(a) eps.

    The caller supplies ``value = f(a)`` and ``derivative = f'(a)`` for
    the value part ``a`` of ``x``; this routine only assembles the dual
    result, keeping everything rational.
    """
    return DualRat(Fraction(value), x.sh * Fraction(derivative))
