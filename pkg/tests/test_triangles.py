import itertools

import pytest

from amipoly.lattice import (
    LATTICE_SYMMETRIES,
    LatticePoint,
    integer_side_lengths,
    transform_point,
)
from amipoly.triangles import (
    HeronianTriangle,
    TriangleSides,
    _canonical_placement,
    as_heronian,
    embed_triangle,
    enumerate_heronian,
    find_amicable_triangle_pairs,
    find_equable_triangles,
    sixteen_area_sq,
    sum_two_squares_reps,
)

# golden values produced by the definitional brute-force scan, in
# enumeration order (perimeter, then sides)
EQUABLE_TRIPLES = [(6, 8, 10), (5, 12, 13), (9, 10, 17), (7, 15, 20), (6, 25, 29)]
THE_PAIR = ((3, 25, 26), (9, 12, 15))


class TestTriangleSides:
    def test_constructor_sorts(self):
        assert TriangleSides.of(26, 3, 25) == TriangleSides(3, 25, 26)

    def test_triangle_inequality_strict(self):
        with pytest.raises(ValueError):
            TriangleSides(1, 1, 3)
        with pytest.raises(ValueError):
            TriangleSides(1, 2, 3)

    def test_rejects_unsorted(self):
        with pytest.raises(ValueError):
            TriangleSides(5, 4, 3)

    def test_canonicalisation_idempotent(self):
        t = TriangleSides.of(15, 9, 12)
        assert TriangleSides.of(*t.as_tuple()) == t


class TestHeron:
    def test_right_triangle(self):
        assert sixteen_area_sq(TriangleSides(3, 4, 5)) == 576

    def test_sliver(self):
        assert sixteen_area_sq(TriangleSides(3, 25, 26)) == 20736

    def test_unit(self):
        assert sixteen_area_sq(TriangleSides(1, 1, 1)) == 3

    def test_as_heronian_present(self):
        assert as_heronian(TriangleSides(9, 12, 15)).area == 54
        assert as_heronian(TriangleSides(3, 4, 5)).area == 6
        assert as_heronian(TriangleSides(3, 25, 26)).area == 36

    def test_as_heronian_absent(self):
        assert as_heronian(TriangleSides(2, 3, 4)) is None  # 16*Area^2 = 135

    def test_quarter_integer_area_rejected(self):
        # odd perimeter makes the Heron product odd; even if it were a perfect
        # square the area would be a quarter-integer, never an integer
        t = TriangleSides(1, 1, 1)
        assert t.perimeter() % 2 == 1
        assert as_heronian(t) is None

    def test_certificate_checked(self):
        with pytest.raises(ValueError):
            HeronianTriangle(TriangleSides(3, 4, 5), 7)


class TestEnumeration:
    def test_smallest(self):
        got = enumerate_heronian(12)
        assert [h.sides.as_tuple() for h in got] == [(3, 4, 5)]

    def test_two_smallest(self):
        got = enumerate_heronian(16)
        assert [(h.sides.as_tuple(), h.area) for h in got] == [((3, 4, 5), 6), ((5, 5, 6), 12)]

    def test_contains_the_pair_members(self):
        triples = {h.sides.as_tuple() for h in enumerate_heronian(54)}
        assert {(3, 25, 26), (9, 12, 15)} <= triples

    def test_sorted_by_perimeter_then_sides(self):
        got = enumerate_heronian(60)
        keys = [(h.perimeter(), h.sides.a, h.sides.b) for h in got]
        assert keys == sorted(keys)

    def test_bound_too_small(self):
        with pytest.raises(ValueError):
            enumerate_heronian(2)


class TestAmicablePairs:
    def test_unique_pair_at_desk_scale(self):
        got = find_amicable_triangle_pairs(120)
        assert [(a.sides.as_tuple(), b.sides.as_tuple()) for a, b in got] == [THE_PAIR]
        (a, b), = got
        assert a.area == b.perimeter() == 36
        assert b.area == a.perimeter() == 54

    def test_empty_below_partner_perimeter(self):
        assert find_amicable_triangle_pairs(30) == []

    def test_found_once_both_members_fit(self):
        assert len(find_amicable_triangle_pairs(54)) == 1

    def test_join_equals_quadratic_scan(self):
        triangles = enumerate_heronian(120)
        naive = set()
        for h, g in itertools.combinations(triangles, 2):
            if h.area == g.perimeter() and g.area == h.perimeter():
                naive.add((min(h, g), max(h, g)))
        assert set(find_amicable_triangle_pairs(120)) == naive

    def test_cross_equalities_re_verified(self):
        for a, b in find_amicable_triangle_pairs(120):
            assert a.area == b.perimeter() and b.area == a.perimeter()


class TestEquableTriangles:
    def test_the_five(self):
        got = find_equable_triangles(200)
        assert [h.sides.as_tuple() for h in got] == EQUABLE_TRIPLES
        for h in got:
            assert h.area == h.perimeter()

    def test_none_below_isoperimetric_floor(self):
        # area <= perimeter^2 / (12*sqrt(3)) forces perimeter > 20 when equal
        assert find_equable_triangles(20) == []


class TestSumTwoSquares:
    def test_twenty_five(self):
        assert [(p.x, p.y) for p in sum_two_squares_reps(25)] == [
            (0, 5), (3, 4), (4, 3), (5, 0),
        ]

    def test_two(self):
        assert [(p.x, p.y) for p in sum_two_squares_reps(2)] == [(1, 1)]

    def test_625(self):
        got = {(p.x, p.y) for p in sum_two_squares_reps(625)}
        assert {(7, 24), (15, 20), (20, 15), (24, 7), (0, 25), (25, 0)} <= got

    def test_defining_property(self):
        for n in range(0, 500):
            for p in sum_two_squares_reps(n):
                assert p.x >= 0 and p.y >= 0 and p.x * p.x + p.y * p.y == n


class TestEmbedding:
    def test_right_triangle_certificate(self):
        emb = embed_triangle(as_heronian(TriangleSides(9, 12, 15)))
        assert emb.twice_area() == 108
        assert sorted(emb.squared_sides()) == [81, 144, 225]

    def test_sliver_certificate(self):
        emb = embed_triangle(as_heronian(TriangleSides(3, 25, 26)))
        assert emb.twice_area() == 72
        assert sorted(emb.squared_sides()) == [9, 625, 676]

    def test_three_four_five(self):
        emb = embed_triangle(as_heronian(TriangleSides(3, 4, 5)))
        assert sorted(emb.squared_sides()) == [9, 16, 25]
        assert emb.twice_area() == 12

    def test_origin_pinned(self):
        emb = embed_triangle(as_heronian(TriangleSides(5, 5, 6)))
        assert emb.v0 == LatticePoint(0, 0)

    def test_heron_shoelace_agreement_up_to_60(self):
        for h in enumerate_heronian(60):
            emb = embed_triangle(h)
            assert emb.twice_area() == 2 * h.area

    def test_embedding_realises_integer_sides(self):
        for h in enumerate_heronian(60):
            emb = embed_triangle(h)
            sides = integer_side_lengths(emb.as_polygon())
            assert sides is not None
            assert sorted(sides) == list(h.sides.as_tuple())

    def test_deterministic(self):
        h = as_heronian(TriangleSides(9, 12, 15))
        assert embed_triangle(h) == embed_triangle(h)

    def test_mirrored_candidates_canonicalise_identically(self):
        h = as_heronian(TriangleSides(3, 25, 26))
        emb = embed_triangle(h)
        for sym in LATTICE_SYMMETRIES:
            mirrored = [(transform_point(sym, emb.v1), transform_point(sym, emb.v2))]
            assert _canonical_placement(mirrored) == (emb.v1, emb.v2)

    def test_embedding_certificate_rejects_mismatch(self):
        h = as_heronian(TriangleSides(3, 4, 5))
        from amipoly.triangles import TriangleEmbedding

        with pytest.raises(ValueError):
            TriangleEmbedding(
                h, LatticePoint(0, 0), LatticePoint(5, 0), LatticePoint(0, 5)
            )
