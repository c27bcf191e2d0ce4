"""Exact integer geometry on the Z^2 lattice.

Everything here stays in integer arithmetic.  Areas are carried around as
twice-area (the shoelace sum of lattice vertices is always an integer),
lattice point counts come from the gcd and Pick identities, and side
lengths are kept as squared lengths / radicands so that irrational values
are never materialised as floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

__all__ = [
    "LatticePoint",
    "LatticePolygon",
    "RadicalSum",
    "LATTICE_SYMMETRIES",
    "transform_point",
    "is_perfect_square",
    "twice_area",
    "boundary_point_count",
    "interior_point_count",
    "squared_side_lengths",
    "integer_side_lengths",
    "radical_sum_is_rational",
    "rational_radical_value",
    "two_radical_sum_is_rational",
    "three_radical_sum_is_rational",
]


def is_perfect_square(n: int) -> bool:
    """True iff n is the square of an integer.  Exact, no floating point."""
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


@dataclass(frozen=True, order=True)
class LatticePoint:
    """A point of the integer lattice.

    Coordinates are plain Python integers, so arithmetic is exact at any
    magnitude; there is no silent wraparound to guard against.
    """

    x: int
    y: int

    def __post_init__(self):
        if not isinstance(self.x, int) or not isinstance(self.y, int):
            raise TypeError("lattice coordinates must be integers")

    def __add__(self, other: "LatticePoint") -> "LatticePoint":
        return LatticePoint(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "LatticePoint") -> "LatticePoint":
        return LatticePoint(self.x - other.x, self.y - other.y)

    def norm_sq(self) -> int:
        return self.x * self.x + self.y * self.y


# The dihedral symmetries of the lattice (rotations by multiples of 90
# degrees plus the four reflections), each as (a, b, c, d) acting by
# (x, y) -> (a*x + b*y, c*x + d*y).
LATTICE_SYMMETRIES: tuple[tuple[int, int, int, int], ...] = (
    (1, 0, 0, 1),
    (0, -1, 1, 0),
    (-1, 0, 0, -1),
    (0, 1, -1, 0),
    (1, 0, 0, -1),
    (-1, 0, 0, 1),
    (0, 1, 1, 0),
    (0, -1, -1, 0),
)


def transform_point(sym: tuple[int, int, int, int], p: LatticePoint) -> LatticePoint:
    a, b, c, d = sym
    return LatticePoint(a * p.x + b * p.y, c * p.x + d * p.y)


@dataclass(frozen=True)
class LatticePolygon:
    """A polygon with vertices on the integer lattice, in boundary order.

    Consecutive vertices must be distinct.  Simplicity (no self
    intersection) is required by the point-counting operations; it is
    checked exactly for triangles and axis-aligned rectangles and is a
    documented caller obligation for anything else.
    """

    vertices: tuple[LatticePoint, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if len(self.vertices) < 3:
            raise ValueError("a polygon needs at least 3 vertices")
        n = len(self.vertices)
        for i in range(n):
            if self.vertices[i] == self.vertices[(i + 1) % n]:
                raise ValueError("consecutive vertices must be distinct")

    @classmethod
    def from_coords(cls, coords) -> "LatticePolygon":
        return cls(tuple(LatticePoint(x, y) for x, y in coords))

    def edges(self):
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]


def twice_area(poly: LatticePolygon) -> int:
    """2*Area by the shoelace sum, orientation-independent.

    Total on all polygons; a degenerate (collinear) input simply yields 0.
    """
    s = 0
    for p, q in poly.edges():
        s += p.x * q.y - q.x * p.y
    return abs(s)


def squared_side_lengths(poly: LatticePolygon) -> list[int]:
    """Squared length of every edge, in vertex order."""
    return [(q - p).norm_sq() for p, q in poly.edges()]


def _is_axis_aligned_rectangle(poly: LatticePolygon) -> bool:
    if len(poly.vertices) != 4:
        return False
    deltas = [q - p for p, q in poly.edges()]
    if any(d.x != 0 and d.y != 0 for d in deltas):
        return False
    # opposite edges cancel, adjacent edges alternate axes
    return (
        deltas[0] + deltas[2] == LatticePoint(0, 0)
        and deltas[1] + deltas[3] == LatticePoint(0, 0)
        and (deltas[0].x == 0) != (deltas[1].x == 0)
    )


def _require_countable(poly: LatticePolygon) -> int:
    """Validate the preconditions of the point-counting operations.

    Returns twice_area.  A nondegenerate triangle is automatically simple;
    a 4-gon with axis-parallel edges must close up as a rectangle, which is
    checked exactly.  Any other polygon relies on the documented simplicity
    precondition.
    """
    doubled = twice_area(poly)
    if doubled == 0:
        raise ValueError("degenerate polygon: twice_area is 0")
    if len(poly.vertices) == 4:
        deltas = [q - p for p, q in poly.edges()]
        if all(d.x == 0 or d.y == 0 for d in deltas) and not _is_axis_aligned_rectangle(poly):
            raise ValueError("axis-parallel 4-gon is not a simple rectangle")
    return doubled


def boundary_point_count(poly: LatticePolygon) -> int:
    """Number of lattice points on the boundary: sum of gcd(|dx|, |dy|) over edges."""
    _require_countable(poly)
    return sum(gcd(abs(q.x - p.x), abs(q.y - p.y)) for p, q in poly.edges())


def interior_point_count(poly: LatticePolygon) -> int:
    """Number of interior lattice points via Pick: 2*Area = 2*I + B - 2."""
    doubled = _require_countable(poly)
    return (doubled - boundary_point_count(poly) + 2) // 2


def integer_side_lengths(poly: LatticePolygon) -> list[int] | None:
    """The side lengths in edge order if every one is an integer, else None."""
    out = []
    for sq in squared_side_lengths(poly):
        if not is_perfect_square(sq):
            return None
        out.append(isqrt(sq))
    return out


@dataclass(frozen=True)
class RadicalSum:
    """A value of the form sum(sqrt(a_i)), stored as the multiset of radicands.

    The represented value is rational exactly when every radicand is a
    perfect square, in which case it is the integer sum of the roots.
    """

    radicands: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "radicands", tuple(sorted(self.radicands)))
        if not self.radicands:
            raise ValueError("a radical sum needs at least one radicand")
        for a in self.radicands:
            if not isinstance(a, int) or a < 1:
                raise ValueError(f"radicand must be a positive integer, got {a!r}")

    @classmethod
    def of(cls, *radicands: int) -> "RadicalSum":
        return cls(tuple(radicands))


def radical_sum_is_rational(r: RadicalSum) -> bool:
    """True iff the represented value is rational (every radicand a perfect square)."""
    return all(is_perfect_square(a) for a in r.radicands)


def rational_radical_value(r: RadicalSum) -> int | None:
    """The integer value of the sum when rational, else None."""
    if not radical_sum_is_rational(r):
        return None
    return sum(isqrt(a) for a in r.radicands)


def _require_positive_radicand(n: int):
    if n < 1:
        raise ValueError(f"radicand must be a positive integer, got {n!r}")


def two_radical_sum_is_rational(x: int, y: int) -> bool:
    """Decide rationality of sqrt(x) + sqrt(y) by conjugation/squaring.

    Squaring gives x + y + 2*sqrt(x*y).  The sum is rational exactly when
    x*y is a perfect square and x + y + 2*isqrt(x*y) is one as well: the
    conjugate (x - y)/(sqrt(x) + sqrt(y)) then forces both roots to be
    rational, hence integers.  This route never tests x or y individually,
    so it is an independent cross-check of radical_sum_is_rational.
    """
    _require_positive_radicand(x)
    _require_positive_radicand(y)
    if not is_perfect_square(x * y):
        return False
    return is_perfect_square(x + y + 2 * isqrt(x * y))


def three_radical_sum_is_rational(a: int, b: int, c: int) -> bool:
    """Decide rationality of sqrt(a) + sqrt(b) + sqrt(c) by the squaring identity.

    If the sum equals an integer d, squaring (sqrt(a) + sqrt(b))^2 =
    (d - sqrt(c))^2 rearranges to

        sqrt(a*b) + sqrt(d*d*c) = (d*d + c - a - b) / 2,

    a sum of two roots, which must itself pass the two-root test; peeling
    sqrt(c) off then leaves the two-root case for a and b.  Any integer the
    value could equal is bracketed by the floor roots, so only four
    candidates d need checking.
    """
    for n in (a, b, c):
        _require_positive_radicand(n)
    if not is_perfect_square(a * b):
        return False
    lo = isqrt(a) + isqrt(b) + isqrt(c)
    for d in range(lo, lo + 4):
        num = d * d + c - a - b
        if num < 0 or num % 2:
            continue
        if not is_perfect_square(d * d * c):
            continue
        if isqrt(a * b) + isqrt(d * d * c) != num // 2:
            continue
        # d*d*c being a perfect square with d >= 1 forces c to be one too
        remainder = d - isqrt(c)
        if remainder < 0 or not two_radical_sum_is_rational(a, b):
            continue
        if isqrt(a) + isqrt(b) == remainder:
            return True
    return False
