"""Shared binary-tree walking for topograph-shaped dynamics.

All trees in this package (form values, Markov, Mordell, Euclid and
their shadow versions) share one combinatorial shape.  A node state is
a triple ``(x, y, z)`` where ``(x, y)`` sit on the two regions flanking
the edge just crossed and ``z`` is the freshly revealed region.  The
two child edges are::

    L: (x, y, z) -> (x, z, new(x, z, y))
    R: (x, y, z) -> (z, y, new(z, y, x))

with ``new`` the module-specific local rule (arithmetic progression,
Vieta move, plain sum, ...).  Nodes are addressed by L/R words from the
root; the empty word is the root.
"""

from __future__ import annotations

from typing import Callable, Iterable, TypeVar

from .errors import DepthLimit

__all__ = ["DEFAULT_DEPTH_LIMIT", "check_word", "grow", "walk"]

DEFAULT_DEPTH_LIMIT = 24

S = TypeVar("S")


def check_word(word: str) -> str:
    if any(ch not in "LR" for ch in word):
        raise ValueError(f"path word must use letters L and R only: {word!r}")
    return word


def check_depth(depth: int, limit: int) -> None:
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if depth > limit:
        raise DepthLimit(f"depth {depth} exceeds limit {limit}")


def grow(root: S, step: Callable[[S, str], S], depth: int,
         limit: int = DEFAULT_DEPTH_LIMIT) -> dict[str, S]:
    """Complete binary tree of states to ``depth``, preorder, L before R."""
    check_depth(depth, limit)
    out: dict[str, S] = {}
    stack: list[tuple[str, S]] = [("", root)]
    while stack:
        word, state = stack.pop()
        out[word] = state
        if len(word) < depth:
            stack.append((word + "R", step(state, "R")))
            stack.append((word + "L", step(state, "L")))
    return out


def walk(root: S, step: Callable[[S, str], S], letters: Iterable[str]) -> list[S]:
    """States along a single path; result has one more entry than letters."""
    states = [root]
    for ch in letters:
        if ch not in "LR":
            raise ValueError(f"path letters must be L or R, got {ch!r}")
        states.append(step(states[-1], ch))
    return states
