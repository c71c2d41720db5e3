"""Exception types shared across the package."""


class TopographError(Exception):
    """Base class for all errors raised by this package."""


class NotAUnit(TopographError):
    """Inverse requested for a dual number whose value part is not +-1."""


class DepthLimit(TopographError):
    """Requested tree depth exceeds the configured limit."""


class NotIndefinite(TopographError):
    """River search requires an indefinite form (positive discriminant)."""


class SquareDiscriminant(TopographError):
    """The discriminant is a perfect square: the river degenerates into a
    lake bounded by zero regions, which is unsupported."""


class ZeroValueEncountered(TopographError):
    """A form value of zero appeared where a nonzero value is required."""


class InvalidTriple(TopographError):
    """A triple does not satisfy its defining Diophantine equation."""


class BadEuclidTriple(TopographError):
    """An index triple (a, b, c) violates a + b = c."""


class SquareInput(TopographError):
    """Pell's equation p^2 - d*q^2 = 1 has no solution for square d."""


class DegenerateImage(TopographError):
    """A Moebius image collapsed to the projective point at infinity."""
