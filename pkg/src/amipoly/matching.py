"""Shape-agnostic amicability matching and certificate-carrying reports.

Shapes of any family reduce to (area, perimeter, shape_id) fingerprints;
amicable pairs come out of a keyed join instead of a quadratic scan.
Reports re-verify every certificate both when assembled and when read back
from JSON, so serialized results are never trusted blindly.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "CertificateError",
    "FAMILIES",
    "ShapeFingerprint",
    "ShapeRecord",
    "match_amicable",
    "SearchReport",
    "assemble_report",
    "report_from_dict",
]

FAMILIES = (
    "rectangles",
    "triangles",
    "equable-rectangles",
    "equable-triangles",
    "verification",  # consolidated multi-family report
)


class CertificateError(ValueError):
    """A pair or shape certificate failed re-verification."""


@dataclass(frozen=True, order=True)
class ShapeFingerprint:
    """The exact invariants a shape contributes to amicability matching."""

    area: int
    perimeter: int
    shape_id: str


@dataclass(frozen=True, order=True)
class ShapeRecord:
    """A shape with canonical sorted sides; the unit reports are built from."""

    family: str
    sides: tuple[int, ...]
    area: int
    perimeter: int

    @property
    def shape_id(self) -> str:
        return f"{self.family}:" + "x".join(str(s) for s in self.sides)

    def fingerprint(self) -> ShapeFingerprint:
        return ShapeFingerprint(self.area, self.perimeter, self.shape_id)

    def to_dict(self) -> dict:
        return {"sides": list(self.sides), "area": self.area, "perimeter": self.perimeter}


def _verify_record(rec: ShapeRecord):
    """Recompute area and perimeter from the sides and compare."""
    if list(rec.sides) != sorted(rec.sides):
        raise CertificateError(f"sides not sorted: {rec}")
    if any(s < 1 for s in rec.sides) or rec.area < 1 or rec.perimeter < 1:
        raise CertificateError(f"non-positive dimensions: {rec}")
    if len(rec.sides) == 2:
        a, b = rec.sides
        if rec.area != a * b or rec.perimeter != 2 * (a + b):
            raise CertificateError(f"rectangle invariants fail: {rec}")
    elif len(rec.sides) == 3:
        a, b, c = rec.sides
        heron = (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c)
        if rec.perimeter != a + b + c or 16 * rec.area * rec.area != heron:
            raise CertificateError(f"triangle invariants fail: {rec}")
    else:
        raise CertificateError(f"unsupported side count: {rec}")
    if rec.family.startswith("equable") and rec.area != rec.perimeter:
        raise CertificateError(f"shape claimed equable but is not: {rec}")


def _verify_pair(first: ShapeRecord, second: ShapeRecord):
    _verify_record(first)
    _verify_record(second)
    if first.shape_id == second.shape_id:
        raise CertificateError(f"self pair: {first.shape_id}")
    if first.area != second.perimeter or second.area != first.perimeter:
        raise CertificateError(
            f"cross equalities fail: {first.shape_id} vs {second.shape_id}"
        )


def match_amicable(
    shapes: list[ShapeFingerprint],
) -> list[tuple[ShapeFingerprint, ShapeFingerprint]]:
    """All unordered pairs {s, t} with s.area = t.perimeter and t.area = s.perimeter.

    Implemented as a join keyed on (area, perimeter) probed with the
    reversed key.  Distinct shape_ids are required, so an equable shape
    (area = perimeter) never pairs with itself, while two different equable
    shapes with the same value do pair.
    """
    seen_ids = set()
    for s in shapes:
        if s.shape_id in seen_ids:
            raise ValueError(f"duplicate shape_id: {s.shape_id}")
        seen_ids.add(s.shape_id)
    by_key: dict[tuple[int, int], list[ShapeFingerprint]] = {}
    for s in shapes:
        by_key.setdefault((s.area, s.perimeter), []).append(s)
    pairs = set()
    for s in shapes:
        for t in by_key.get((s.perimeter, s.area), ()):
            if t.shape_id == s.shape_id:
                continue
            pairs.add((s, t) if s.shape_id < t.shape_id else (t, s))
    return sorted(pairs, key=lambda p: (p[0].shape_id, p[1].shape_id))


@dataclass(frozen=True)
class SearchReport:
    """Deterministic, certificate-carrying result of one search run.

    elapsed is the only volatile field and is excluded from the canonical
    dictionary, so identical inputs serialize byte-identically.
    """

    family: str
    bound: int | None
    shapes_scanned: int
    pairs: tuple[tuple[ShapeRecord, ShapeRecord], ...]
    shapes: tuple[ShapeRecord, ...] = ()
    checks: tuple[tuple[str, bool], ...] = ()
    elapsed: float = 0.0

    def all_checks_pass(self) -> bool:
        return all(ok for _, ok in self.checks)

    def to_canonical_dict(self) -> dict:
        out = {
            "family": self.family,
            "bound": self.bound,
            "shapes_scanned": self.shapes_scanned,
            "pairs": [
                {"first": a.to_dict(), "second": b.to_dict()} for a, b in self.pairs
            ],
            "checks": [
                {"name": name, "status": "pass" if ok else "fail"}
                for name, ok in self.checks
            ],
        }
        if self.shapes:
            out["shapes"] = [s.to_dict() for s in self.shapes]
        return out


def assemble_report(
    family: str,
    bound: int | None,
    shapes: list[ShapeRecord],
    pairs: list[tuple[ShapeRecord, ShapeRecord]],
    elapsed: float = 0.0,
    checks: tuple[tuple[str, bool], ...] = (),
    shapes_scanned: int | None = None,
) -> SearchReport:
    """Build a SearchReport, re-verifying every certificate.

    Shape lists are retained in the report only for the equable families,
    where the shapes themselves are the result; pair searches keep just the
    scan count (len(shapes) unless shapes_scanned overrides it).  A pair
    that fails its cross equalities aborts assembly.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family: {family!r}")
    for rec in shapes:
        _verify_record(rec)
    normalized = []
    for a, b in pairs:
        first, second = sorted((a, b), key=lambda r: (r.sides, r.family))
        _verify_pair(first, second)
        normalized.append((first, second))
    normalized.sort(key=lambda p: (p[0].sides, p[1].sides))
    keep_shapes = tuple(sorted(shapes, key=lambda r: r.sides)) if family.startswith("equable") else ()
    return SearchReport(
        family=family,
        bound=bound,
        shapes_scanned=len(shapes) if shapes_scanned is None else shapes_scanned,
        pairs=tuple(normalized),
        shapes=keep_shapes,
        checks=tuple(checks),
        elapsed=elapsed,
    )


def _record_from_dict(d: dict, family: str) -> ShapeRecord:
    rec = ShapeRecord(
        family=family,
        sides=tuple(int(s) for s in d["sides"]),
        area=int(d["area"]),
        perimeter=int(d["perimeter"]),
    )
    _verify_record(rec)
    return rec


def report_from_dict(d: dict) -> SearchReport:
    """Rebuild a SearchReport from its canonical dictionary, re-verifying certificates."""
    family = d["family"]
    if family not in FAMILIES:
        raise CertificateError(f"unknown family: {family!r}")

    def member_family(shape_dict: dict) -> str:
        if family != "verification":
            return family
        return "rectangles" if len(shape_dict["sides"]) == 2 else "triangles"

    pairs = []
    for entry in d["pairs"]:
        first = _record_from_dict(entry["first"], member_family(entry["first"]))
        second = _record_from_dict(entry["second"], member_family(entry["second"]))
        _verify_pair(first, second)
        pairs.append((first, second))
    shapes = tuple(
        _record_from_dict(entry, family) for entry in d.get("shapes", ())
    )
    checks = tuple(
        (entry["name"], entry["status"] == "pass") for entry in d.get("checks", ())
    )
    return SearchReport(
        family=family,
        bound=d["bound"],
        shapes_scanned=int(d["shapes_scanned"]),
        pairs=tuple(pairs),
        shapes=shapes,
        checks=checks,
    )
