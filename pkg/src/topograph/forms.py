"""Conway topographs of binary quadratic forms.

A binary quadratic form ``Q(x, y) = a x^2 + h x y + b y^2`` takes the
values ``(a, b, a+b+h)`` on the root superbase ``(e1, e2, -e1-e2)`` of
the integer lattice.  Values on all other primitive vectors follow
recursively from the arithmetic progression rule (parallelogram law)

    Q(u+v) + Q(u-v) = 2*(Q(u) + Q(v)),

which locally replaces the value z opposite an edge by 2*(x+y) - z.

Orientation convention (fixed here once and shared by every tree in the
package): a tree position is a directed edge with *left* region vector
``u`` and *right* region vector ``v``; the vertex at its head touches
the regions ``u``, ``v`` and ``u + v``.  The root edge has
``u = (1, 0)``, ``v = (0, 1)``.  Stepping through the head vertex,

    L keeps the left region:  (u, v) -> (u, u+v)
    R keeps the right region: (u, v) -> (u+v, v)

so region vectors follow the Stern-Brocot mediant recursion and the
face triple (Q(u), Q(v), Q(u+v)) follows the L/R rules in
:mod:`topograph.trees`.  Node words address vertices from the root.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from . import trees
from .errors import (
    NotIndefinite,
    SquareDiscriminant,
    ZeroValueEncountered,
)

__all__ = [
    "QuadForm",
    "FaceTriple",
    "RegionVector",
    "TopographNode",
    "RiverEdge",
    "RiverDescription",
    "ap_step",
    "values_along_path",
    "region_vector",
    "region_vectors",
    "enumerate_topograph",
    "find_river",
    "sign_change_edges",
    "jacobi_two_squares",
    "brute_force_two_squares",
]

Vec = tuple[int, int]


@dataclass(frozen=True)
class QuadForm:
    """Binary quadratic form a x^2 + h x y + b y^2 (Conway's notation)."""

    a: int
    h: int
    b: int

    def __call__(self, x: int, y: int) -> int:
        return self.a * x * x + self.h * x * y + self.b * y * y

    @property
    def discriminant(self) -> int:
        return self.h * self.h - 4 * self.a * self.b

    def root_triple(self) -> "FaceTriple":
        """Values on the root superbase: (a, b, a+b+h)."""
        return FaceTriple(self.a, self.b, self.a + self.b + self.h)

    def __str__(self) -> str:
        def term(c: int, var: str) -> str:
            if c == 0:
                return ""
            coeff = "" if abs(c) == 1 else str(abs(c))
            return f"{'+' if c > 0 else '-'}{coeff}{var}"

        text = term(self.a, "x²") + term(self.h, "xy") + term(self.b, "y²")
        return text.lstrip("+") or "0"


@dataclass(frozen=True)
class FaceTriple:
    """Values of a form on the three regions around a tree vertex."""

    x: int
    y: int
    z: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)

    def local_h(self) -> int:
        """Middle coefficient of the form in the local superbase basis."""
        return self.z - self.x - self.y

    def local_discriminant(self) -> int:
        h = self.local_h()
        return h * h - 4 * self.x * self.y


@dataclass(frozen=True)
class RegionVector:
    """Primitive lattice vector labelling a topograph region.

    Stored up to overall sign with v > 0, or u > 0 when v = 0; forms are
    even, so the sign quotient loses nothing.
    """

    u: int
    v: int

    def __post_init__(self) -> None:
        if gcd(abs(self.u), abs(self.v)) != 1:
            raise ValueError(f"region vector must be primitive: ({self.u}, {self.v})")
        if self.v < 0 or (self.v == 0 and self.u < 0):
            raise ValueError("region vector must be sign-normalized")

    @classmethod
    def of(cls, u: int, v: int) -> "RegionVector":
        if v < 0 or (v == 0 and u < 0):
            u, v = -u, -v
        return cls(u, v)

    def farey(self) -> str:
        """Farey label u/v (1/0 denotes the region at infinity)."""
        return f"{self.u}/{self.v}"

    def fraction(self) -> Fraction | None:
        return None if self.v == 0 else Fraction(self.u, self.v)

    def as_tuple(self) -> Vec:
        return (self.u, self.v)


def ap_step(parent: FaceTriple, direction: str) -> FaceTriple:
    """One arithmetic-progression step; direction L or R picks the child edge."""
    x, y, z = parent.x, parent.y, parent.z
    if direction == "L":
        return FaceTriple(x, z, 2 * (x + z) - y)
    if direction == "R":
        return FaceTriple(z, y, 2 * (z + y) - x)
    raise ValueError(f"direction must be 'L' or 'R', got {direction!r}")


def _vec_step(uv: tuple[Vec, Vec], direction: str) -> tuple[Vec, Vec]:
    (u, v) = uv
    m = (u[0] + v[0], u[1] + v[1])
    return (u, m) if direction == "L" else (m, v)


def values_along_path(q: QuadForm, word: str) -> list[FaceTriple]:
    """Face triples from the root along an L/R word (length |word| + 1)."""
    trees.check_word(word)
    return trees.walk(q.root_triple(), ap_step, word)


def region_vectors(word: str) -> tuple[RegionVector, RegionVector, RegionVector]:
    """Normalized region vectors (left, right, new) at the word's vertex."""
    trees.check_word(word)
    u, v = (1, 0), (0, 1)
    for ch in word:
        u, v = _vec_step((u, v), ch)
    return (
        RegionVector.of(*u),
        RegionVector.of(*v),
        RegionVector.of(u[0] + v[0], u[1] + v[1]),
    )


def region_vector(word: str, which: str) -> RegionVector:
    """Vector of one of the three regions ('x', 'y' or 'z') at a vertex."""
    try:
        index = "xyz".index(which)
    except ValueError:
        raise ValueError(f"which must be one of 'x', 'y', 'z': {which!r}") from None
    return region_vectors(word)[index]


@dataclass(frozen=True)
class TopographNode:
    word: str
    triple: FaceTriple
    regions: tuple[RegionVector, RegionVector, RegionVector]


def enumerate_topograph(q: QuadForm, depth: int,
                        limit: int = trees.DEFAULT_DEPTH_LIMIT) -> dict[str, TopographNode]:
    """Complete topograph tree to ``depth``, preorder with L before R.

    Node count is 2**(depth+1) - 1.  Raises DepthLimit beyond ``limit``.
    """
    root = (q.root_triple(), ((1, 0), (0, 1)))

    def step(state, direction):
        triple, uv = state
        return (ap_step(triple, direction), _vec_step(uv, direction))

    raw = trees.grow(root, step, depth, limit)
    out: dict[str, TopographNode] = {}
    for word, (triple, (u, v)) in raw.items():
        regions = (
            RegionVector.of(*u),
            RegionVector.of(*v),
            RegionVector.of(u[0] + v[0], u[1] + v[1]),
        )
        out[word] = TopographNode(word, triple, regions)
    return out


# ---------------------------------------------------------------------------
# Conway river


@dataclass(frozen=True)
class RiverEdge:
    """A river edge: flanking region values of opposite signs.

    ``ahead_value`` is the value of the region revealed past the head
    vertex, so (left_value, right_value, ahead_value) is the face triple
    at the head of the edge.
    """

    left: RegionVector
    right: RegionVector
    left_value: int
    right_value: int
    ahead_value: int

    def face_triple(self) -> FaceTriple:
        return FaceTriple(self.left_value, self.right_value, self.ahead_value)


@dataclass(frozen=True)
class RiverDescription:
    """One period of the Conway river of an indefinite form.

    ``basis`` holds raw (non-normalized) left/right vectors of the start
    edge, usable to resume walking the river with ``period`` letters.
    """

    start: RiverEdge
    period: str
    states: tuple[RiverEdge, ...]
    basis: tuple[Vec, Vec]


def _sign(n: int) -> int:
    return (n > 0) - (n < 0)


def _descend_to_river_edge(q: QuadForm, max_steps: int) -> tuple[Vec, Vec]:
    """Walk from the root edge toward the zero set of Q until the flanking
    values take opposite signs.  Exact integer tests throughout: the sign
    of Q at the mediant, and the side of the parabola's roots the mediant
    falls on, decide each step."""
    u, v = (1, 0), (0, 1)
    x, y = q(*u), q(*v)
    a, h = q.a, q.h
    for _ in range(max_steps):
        if x == 0 or y == 0:
            raise ZeroValueEncountered(f"{q} vanishes on a primitive vector")
        if (x > 0) != (y > 0):
            return u, v
        m = (u[0] + v[0], u[1] + v[1])
        w = q(*m)
        if w == 0:
            raise ZeroValueEncountered(f"{q} vanishes at {m}")
        if (w > 0) != (x > 0):
            return u, m
        # All three values share a sign: move toward the interval of
        # fractions where Q(t, 1) changes sign.
        side = _sign(2 * a * m[0] + h * m[1]) * _sign(m[1]) * _sign(a)
        if side > 0:
            u, v, x = m, v, w
        else:
            v, y = m, w
    raise RuntimeError(f"no river edge found within {max_steps} steps for {q}")


def _trace_river(q: QuadForm, u: Vec, v: Vec, max_steps: int) -> RiverDescription:
    """Follow the river forward from a sign-separating edge until the local
    edge state (left value, right value, ahead value) recurs."""
    basis = (u, v)
    edges: list[RiverEdge] = []
    letters: list[str] = []
    start_key = None
    x, y = q(*u), q(*v)
    for _ in range(max_steps):
        m = (u[0] + v[0], u[1] + v[1])
        w = q(*m)
        if w == 0:
            raise ZeroValueEncountered(f"{q} vanishes at {m}")
        key = (x, y, w)
        if start_key is None:
            start_key = key
        elif key == start_key:
            return RiverDescription(
                start=edges[0],
                period="".join(letters),
                states=tuple(edges),
                basis=basis,
            )
        edges.append(RiverEdge(
            left=RegionVector.of(*u),
            right=RegionVector.of(*v),
            left_value=x,
            right_value=y,
            ahead_value=w,
        ))
        if (w > 0) == (y > 0):
            letters.append("L")
            v, y = m, w
        else:
            letters.append("R")
            u, x = m, w
    raise RuntimeError(f"river period did not close within {max_steps} steps for {q}")


def find_river(q: QuadForm, max_steps: int = 10**6) -> RiverDescription:
    """Locate the Conway river of an indefinite form and return one period.

    The river is the unique bi-infinite edge path separating positive from
    negative values; it is periodic because the flanking values along it
    are bounded by the discriminant.  Requires D = h^2 - 4ab > 0 and not a
    perfect square (otherwise the river degenerates).
    """
    d = q.discriminant
    if d <= 0:
        raise NotIndefinite(f"{q} has discriminant {d} <= 0")
    r = isqrt(d)
    if r * r == d:
        raise SquareDiscriminant(f"{q} has square discriminant {d}")
    if q.a * q.b > 0 and q.a * q.h > 0:
        # Both roots of Q(t, 1) are negative, outside the root edge's cone.
        # Search the mirror form Q(x, -y) and map the found edge back
        # (mirroring swaps left and right).
        mu, mv = _descend_to_river_edge(QuadForm(q.a, -q.h, q.b), max_steps)
        u = (mv[0], -mv[1])
        v = (mu[0], -mu[1])
    else:
        u, v = _descend_to_river_edge(q, max_steps)
    return _trace_river(q, u, v, max_steps)


def sign_change_edges(q: QuadForm, depth: int) -> list[tuple[RegionVector, RegionVector]]:
    """Brute-force oracle: all edges up to ``depth`` whose flanking values
    have opposite signs.  The root edge counts as depth 0."""
    out: list[tuple[RegionVector, RegionVector]] = []
    stack: list[tuple[int, Vec, Vec]] = [(0, (1, 0), (0, 1))]
    while stack:
        level, u, v = stack.pop()
        x, y = q(*u), q(*v)
        if (x > 0 and y < 0) or (x < 0 and y > 0):
            out.append((RegionVector.of(*u), RegionVector.of(*v)))
        if level < depth:
            m = (u[0] + v[0], u[1] + v[1])
            stack.append((level + 1, m, v))
            stack.append((level + 1, u, m))
    return out


# ---------------------------------------------------------------------------
# Sums of two squares


def jacobi_two_squares(n: int) -> int:
    """Number of (x, y) in Z^2 with x^2 + y^2 = n, by Jacobi's divisor
    formula: 4 * (#divisors = 1 mod 4  -  #divisors = 3 mod 4)."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    balance = 0
    for i in range(1, isqrt(n) + 1):
        if n % i:
            continue
        for d in {i, n // i}:
            if d % 4 == 1:
                balance += 1
            elif d % 4 == 3:
                balance -= 1
    return 4 * balance


def brute_force_two_squares(n: int) -> int:
    """Lattice-count oracle for :func:`jacobi_two_squares`."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    count = 0
    for x in range(-isqrt(n), isqrt(n) + 1):
        rest = n - x * x
        y = isqrt(rest)
        if y * y == rest:
            count += 1 if y == 0 else 2
    return count
