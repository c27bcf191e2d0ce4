"""Amicable and equable rectangles with integer sides.

The solver reduces the amicability equations a*b = 2*(x + y) and
2*(a + b) = x*y to a linear system in b and y, enumerates the finitely
many divisor cases for short side 1 or 2, and is cross-checked by an
exhaustive scan that uses nothing but the definition.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .lattice import is_perfect_square

__all__ = [
    "RectSides",
    "RectAmicablePair",
    "PartnerSolution",
    "perimeter_dominant",
    "small_side_candidates",
    "solve_partner",
    "partner_closed_form",
    "enumerate_by_divisors",
    "brute_force_pairs",
    "equable_rectangles",
]


@dataclass(frozen=True, order=True)
class RectSides:
    """Canonical rectangle side record with short <= long."""

    short: int
    long: int

    def __post_init__(self):
        if self.short < 1 or self.long < self.short:
            raise ValueError(f"need 1 <= short <= long, got {self.short}x{self.long}")

    @classmethod
    def of(cls, a: int, b: int) -> "RectSides":
        return cls(min(a, b), max(a, b))

    def area(self) -> int:
        return self.short * self.long

    def perimeter(self) -> int:
        return 2 * (self.short + self.long)

    def __str__(self):
        return f"{self.short}x{self.long}"


@dataclass(frozen=True, order=True)
class RectAmicablePair:
    """Unordered pair of distinct rectangles, cross equalities re-checked on construction."""

    first: RectSides
    second: RectSides

    def __post_init__(self):
        if self.first == self.second:
            raise ValueError(f"a rectangle does not pair with itself: {self.first}")
        if self.first > self.second:
            raise ValueError("pair must be stored with first <= second")
        if (
            self.first.area() != self.second.perimeter()
            or self.second.area() != self.first.perimeter()
        ):
            raise ValueError(f"cross equalities fail for {self.first} and {self.second}")

    @classmethod
    def of(cls, r1: RectSides, r2: RectSides) -> "RectAmicablePair":
        return cls(min(r1, r2), max(r1, r2))


def perimeter_dominant(r: RectSides) -> bool:
    """True iff area <= perimeter, i.e. short*long <= 2*(short + long)."""
    return r.area() <= r.perimeter()


def _partner_quadratic(r: RectSides) -> RectSides | None:
    """The unique rectangle whose perimeter is r's area and area is r's perimeter.

    Solves x + y = area/2, x*y = perimeter over positive integers via the
    discriminant; None when no such rectangle exists.
    """
    if r.area() % 2:
        return None  # a partner perimeter 2*(x + y) is always even
    s = r.area() // 2
    p = r.perimeter()
    disc = s * s - 4 * p
    if disc < 0 or not is_perfect_square(disc):
        return None
    root = isqrt(disc)
    if (s - root) % 2:
        return None
    x = (s - root) // 2
    if x < 1:
        return None
    return RectSides.of(x, (s + root) // 2)


def small_side_candidates(max_side: int) -> list[int]:
    """Short sides that can occur on the perimeter-dominant member of a pair.

    Scans every canonical rectangle with long side <= max_side, keeps the
    perimeter-dominant ones whose (even) area admits a genuine partner
    distinct from the rectangle itself, and returns the sorted set of short
    sides seen.  Comes out as [1, 2] for any max_side >= 54.
    """
    if max_side < 4:
        raise ValueError(f"max_side must be at least 4, got {max_side}")
    shorts = set()
    for a in range(1, max_side + 1):
        for b in range(a, max_side + 1):
            r = RectSides(a, b)
            if not perimeter_dominant(r):
                continue
            partner = _partner_quadratic(r)
            if partner is None or partner == r:
                continue
            shorts.add(a)
    return sorted(shorts)


@dataclass(frozen=True)
class PartnerSolution:
    """Outcome of solving the amicability system for fixed short sides a and x."""

    status: str  # "solved" | "singular" | "non-integer" | "non-positive"
    b: int | None = None
    y: int | None = None

    @property
    def solved(self) -> bool:
        return self.status == "solved"


def solve_partner(a: int, x: int) -> PartnerSolution:
    """Solve a*b = 2*(x + y), 2*(a + b) = x*y as a linear system in b and y.

    The coefficient matrix ((a, -2), (-2, x)) has determinant a*x - 4; when
    that is nonzero Cramer's rule gives the unique rational solution

        b = (2*x*x + 4*a) / (a*x - 4),   y = (2*a*a + 4*x) / (a*x - 4),

    which is accepted only if both values are positive integers and the
    original equations re-verify exactly.
    """
    if a < 1 or x < 1:
        raise ValueError("side lengths must be positive integers")
    det = a * x - 4
    if det == 0:
        return PartnerSolution("singular")
    b_num = 2 * x * x + 4 * a
    y_num = 2 * a * a + 4 * x
    if b_num % det or y_num % det:
        return PartnerSolution("non-integer")
    b = b_num // det
    y = y_num // det
    if b < 1 or y < 1:
        return PartnerSolution("non-positive")
    if a * b != 2 * (x + y) or 2 * (a + b) != x * y:
        raise AssertionError(f"closed form failed re-verification for a={a}, x={x}")
    return PartnerSolution("solved", b=b, y=y)


def partner_closed_form(a: int, x: int) -> tuple[int, int] | None:
    """(b, y) completing a and x to an amicable configuration, or None."""
    sol = solve_partner(a, x)
    if not sol.solved:
        return None
    return sol.b, sol.y


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def enumerate_by_divisors() -> list[RectAmicablePair]:
    """All amicable rectangle pairs, by divisor case analysis on the short side.

    With a = 1 the integrality of y forces x - 4 to divide 18; with a = 2 it
    forces x - 2 to divide 8.  Mirrored divisors produce the same unordered
    pair and are removed by canonicalisation.
    """
    pairs = set()
    for a, shift, modulus in ((1, 4, 18), (2, 2, 8)):
        for d in _divisors(modulus):
            x = d + shift
            sol = partner_closed_form(a, x)
            if sol is None:
                continue
            b, y = sol
            pairs.add(RectAmicablePair.of(RectSides.of(a, b), RectSides.of(x, y)))
    return sorted(pairs)


def brute_force_pairs(max_side: int) -> list[RectAmicablePair]:
    """Definition-only oracle: scan every canonical rectangle with sides <= max_side.

    Rectangles are matched purely on the cross equalities (area of one equals
    perimeter of the other, both ways); no dominance or divisor reasoning is
    used, so this is an independent check of enumerate_by_divisors.
    """
    if max_side < 1:
        raise ValueError(f"max_side must be positive, got {max_side}")
    rects = [
        RectSides(a, b)
        for a in range(1, max_side + 1)
        for b in range(a, max_side + 1)
    ]
    by_key: dict[tuple[int, int], list[RectSides]] = {}
    for r in rects:
        by_key.setdefault((r.area(), r.perimeter()), []).append(r)
    pairs = set()
    for r in rects:
        for t in by_key.get((r.perimeter(), r.area()), ()):
            if t != r:
                pairs.add(RectAmicablePair.of(r, t))
    return sorted(pairs)


def equable_rectangles(max_side: int) -> list[RectSides]:
    """Rectangles with area equal to perimeter, sides <= max_side, sorted."""
    if max_side < 1:
        raise ValueError(f"max_side must be positive, got {max_side}")
    return sorted(
        RectSides(a, b)
        for a in range(1, max_side + 1)
        for b in range(a, max_side + 1)
        if a * b == 2 * (a + b)
    )
