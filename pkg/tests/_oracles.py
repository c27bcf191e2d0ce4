"""Independent brute-force oracles used to cross-check the library.

Everything here works from first principles (point-by-point scans,
definitional all-pairs matching) and deliberately shares no code with the
implementation under test.
"""

from math import isqrt


def on_segment(px, py, ax, ay, bx, by):
    """True iff (px, py) lies on the closed segment from (ax, ay) to (bx, by)."""
    if (bx - ax) * (py - ay) - (by - ay) * (px - ax) != 0:
        return False
    return min(ax, bx) <= px <= max(ax, bx) and min(ay, by) <= py <= max(ay, by)


def direct_boundary_count(vertices):
    """Count lattice points on the polygon boundary by scanning the bounding box."""
    xs = [v[0] for v in vertices]
    ys = [v[1] for v in vertices]
    n = len(vertices)
    count = 0
    for px in range(min(xs), max(xs) + 1):
        for py in range(min(ys), max(ys) + 1):
            if any(
                on_segment(px, py, *vertices[i], *vertices[(i + 1) % n])
                for i in range(n)
            ):
                count += 1
    return count


def _sign(v):
    return (v > 0) - (v < 0)


def strictly_inside_triangle(px, py, t):
    (ax, ay), (bx, by), (cx, cy) = t
    d1 = (bx - ax) * (py - ay) - (by - ay) * (px - ax)
    d2 = (cx - bx) * (py - by) - (cy - by) * (px - bx)
    d3 = (ax - cx) * (py - cy) - (ay - cy) * (px - cx)
    return _sign(d1) == _sign(d2) == _sign(d3) != 0


def direct_interior_count(triangle):
    """Count lattice points strictly inside a (nondegenerate) triangle."""
    xs = [v[0] for v in triangle]
    ys = [v[1] for v in triangle]
    return sum(
        1
        for px in range(min(xs), max(xs) + 1)
        for py in range(min(ys), max(ys) + 1)
        if strictly_inside_triangle(px, py, triangle)
    )


def naive_amicable_scan(fingerprints):
    """Definitional O(n^2) matcher over (area, perimeter, shape_id) fingerprints."""
    pairs = set()
    for i, s in enumerate(fingerprints):
        for t in fingerprints[i + 1 :]:
            if s.shape_id == t.shape_id:
                continue
            if s.area == t.perimeter and t.area == s.perimeter:
                pairs.add((s, t) if s.shape_id < t.shape_id else (t, s))
    return sorted(pairs, key=lambda p: (p[0].shape_id, p[1].shape_id))


def floor_sqrt_scaled(n, digits=40):
    """floor(sqrt(n) * 10**digits) in exact integer arithmetic."""
    scale = 10**digits
    return isqrt(n * scale * scale)
