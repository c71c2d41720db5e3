"""Markov triples and their shadow companions over dual integers.

Integer Markov triples solve x^2 + y^2 + z^2 = 3xyz and form a single
Vieta orbit of (1, 1, 1).  The shadow version replaces the coefficient
3 by 3 - 2*eps over dual integers and starts from the unit triple
(1, 1+eps, 1+eps); the same Vieta dynamics then produces dual solutions
whose value parts reproduce the integer tree exactly.

Tree layout follows the shared topograph convention: the root node of
the binary tree is the triple reached from the origin (1, 1, 1) by one
Vieta move, with ordered state (kept, kept, new); L keeps the first and
third entries, R the third and second (see :mod:`topograph.trees`).
The all-L branch is the Fibonacci branch: its maxima are the odd-index
Fibonacci numbers 1, 2, 5, 13, 34, 89, ... and its shadow components
are OEIS A238846.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import trees
from .dual import DualInt
from .errors import InvalidTriple

__all__ = [
    "MarkovTriple",
    "ShadowMarkovTriple",
    "MARKOV_ORIGIN",
    "SHADOW_ORIGIN",
    "vieta_markov",
    "shadow_vieta",
    "markov_tree",
    "shadow_markov_tree",
    "fibonacci_branch_maxima",
    "fibonacci_branch_shadow",
]

#: Dual coefficient of the shadow Markov equation X^2+Y^2+Z^2 = (3-2eps)XYZ.
SHADOW_COEFF = DualInt(3, -2)


@dataclass(frozen=True)
class MarkovTriple:
    x: int
    y: int
    z: int

    def __post_init__(self) -> None:
        if min(self.x, self.y, self.z) < 1:
            raise InvalidTriple(f"Markov triples are positive: {self.as_tuple()}")
        if self.x**2 + self.y**2 + self.z**2 != 3 * self.x * self.y * self.z:
            raise InvalidTriple(f"{self.as_tuple()} fails x^2+y^2+z^2 = 3xyz")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)


@dataclass(frozen=True)
class ShadowMarkovTriple:
    x: DualInt
    y: DualInt
    z: DualInt

    def __post_init__(self) -> None:
        lhs = self.x * self.x + self.y * self.y + self.z * self.z
        rhs = SHADOW_COEFF * self.x * self.y * self.z
        if lhs != rhs:
            raise InvalidTriple(
                f"({self.x}, {self.y}, {self.z}) fails X^2+Y^2+Z^2 = (3-2ε)XYZ")

    def as_tuple(self) -> tuple[DualInt, DualInt, DualInt]:
        return (self.x, self.y, self.z)

    def value_part(self) -> MarkovTriple:
        """Projection eps -> 0, a ring morphism onto the integer tree."""
        return MarkovTriple(self.x.re, self.y.re, self.z.re)


MARKOV_ORIGIN = MarkovTriple(1, 1, 1)
SHADOW_ORIGIN = ShadowMarkovTriple(DualInt(1), DualInt(1, 1), DualInt(1, 1))


def vieta_markov(t: MarkovTriple) -> MarkovTriple:
    """Vieta involution (x, y, z) -> (x, y, 3xy - z)."""
    return MarkovTriple(t.x, t.y, 3 * t.x * t.y - t.z)


def shadow_vieta(t: ShadowMarkovTriple) -> ShadowMarkovTriple:
    """Dual Vieta involution (X, Y, Z) -> (X, Y, (3-2eps)XY - Z)."""
    return ShadowMarkovTriple(t.x, t.y, SHADOW_COEFF * t.x * t.y - t.z)


def _markov_step(t: MarkovTriple, direction: str) -> MarkovTriple:
    x, y, z = t.as_tuple()
    if direction == "L":
        return MarkovTriple(x, z, 3 * x * z - y)
    return MarkovTriple(z, y, 3 * z * y - x)


def _shadow_step(t: ShadowMarkovTriple, direction: str) -> ShadowMarkovTriple:
    x, y, z = t.as_tuple()
    if direction == "L":
        return ShadowMarkovTriple(x, z, SHADOW_COEFF * x * z - y)
    return ShadowMarkovTriple(z, y, SHADOW_COEFF * z * y - x)


def _tree_root() -> MarkovTriple:
    o = MARKOV_ORIGIN
    return MarkovTriple(o.y, o.z, 3 * o.y * o.z - o.x)


def _shadow_tree_root() -> ShadowMarkovTriple:
    o = SHADOW_ORIGIN
    return ShadowMarkovTriple(o.y, o.z, SHADOW_COEFF * o.y * o.z - o.x)


def markov_tree(depth: int, limit: int = trees.DEFAULT_DEPTH_LIMIT) -> dict[str, MarkovTriple]:
    """Markov tree to ``depth``, one Vieta move past the origin (1, 1, 1).

    The root node is (1, 1, 2); the origin itself is stationary up to
    permutation and sits below the root edge.
    """
    return trees.grow(_tree_root(), _markov_step, depth, limit)


def shadow_markov_tree(depth: int,
                       limit: int = trees.DEFAULT_DEPTH_LIMIT) -> dict[str, ShadowMarkovTriple]:
    """Shadow Markov tree to ``depth``, rooted one move past (1, 1+eps, 1+eps)."""
    return trees.grow(_shadow_tree_root(), _shadow_step, depth, limit)


def fibonacci_branch_maxima(n: int) -> list[int]:
    """First n maxima along the all-L (Fibonacci) branch: 1, 2, 5, 13, ..."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []
    if n:
        out.append(max(MARKOV_ORIGIN.as_tuple()))
    t = _tree_root()
    while len(out) < n:
        out.append(t.z)
        t = _markov_step(t, "L")
    return out[:n]


def fibonacci_branch_shadow(n: int) -> list[int]:
    """First n shadow components along the Fibonacci branch (OEIS A238846):
    1, 4, 13, 40, 120, 354, 1031, 2972, 8495, ..."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []
    if n:
        out.append(SHADOW_ORIGIN.y.sh)
    t = _shadow_tree_root()
    while len(out) < n:
        out.append(t.z.sh)
        t = _shadow_step(t, "L")
    return out[:n]
