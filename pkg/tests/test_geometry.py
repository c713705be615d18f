import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from latticesize import (
    ConvexPolygon,
    InvalidInputError,
    Point,
    UnimodularMap,
    apply_map,
    area,
    contained_in_dilate,
    drop_vertex,
    hull,
    lattice_points,
    parse_polygon_text,
    polygon_to_text,
    width,
)
from conftest import random_lattice_polygon, random_unimodular

coords = st.integers(min_value=-6, max_value=6)
points = st.tuples(coords, coords)
directions = points.filter(lambda u: u != (0, 0))


def polygons(min_points=3, max_points=8):
    return st.lists(points, min_size=min_points, max_size=max_points).map(hull)


class TestHull:
    def test_interior_point_removed(self):
        P = hull([(0, 0), (1, 0), (0, 1), (1, 1), (Fraction(1, 2), Fraction(1, 2))])
        assert len(P.vertices) == 4
        assert P.dim == 2

    def test_collinear_gives_segment(self):
        P = hull([(0, 0), (2, 0), (1, 0)])
        assert P.vertices == (Point(0, 0), Point(2, 0))
        assert P.dim == 1

    def test_single_point(self):
        P = hull([(3, 5), (3, 5)])
        assert P.vertices == (Point(3, 5),)
        assert P.dim == 0

    def test_empty_rejected(self):
        with pytest.raises(InvalidInputError):
            hull([])

    def test_starts_at_lex_min(self):
        P = hull([(2, 2), (0, 1), (1, 0), (2, 0), (0, 2)])
        assert P.vertices[0] == min(P.vertices)

    def test_hull_of_vertices_is_identity(self):
        P = hull([(0, 0), (3, 1), (2, 3), (0, 2)])
        assert hull(P.vertices) == P

    @given(polygons())
    def test_vertices_pass_validation(self, P):
        # reconstructing through the validating constructor must succeed
        assert ConvexPolygon(P.vertices) == P


class TestPolygonValidation:
    def test_repeated_vertex(self):
        with pytest.raises(InvalidInputError):
            ConvexPolygon((Point(0, 0), Point(1, 0), Point(0, 0)))

    def test_clockwise_rejected(self):
        with pytest.raises(InvalidInputError):
            ConvexPolygon((Point(0, 0), Point(0, 1), Point(1, 0)))

    def test_collinear_rejected(self):
        with pytest.raises(InvalidInputError):
            ConvexPolygon((Point(0, 0), Point(1, 0), Point(2, 0)))

    def test_wrong_start_rejected(self):
        with pytest.raises(InvalidInputError):
            ConvexPolygon((Point(1, 0), Point(1, 1), Point(0, 0)))

    def test_double_winding_rejected(self):
        # five-point star: every turn is a left turn but the cycle wraps twice
        star = ((-1, 2), (2, 0), (1, 4), (0, 0), (3, 2))
        with pytest.raises(InvalidInputError):
            ConvexPolygon(tuple(Point(x, y) for x, y in star))

    def test_segment_order(self):
        with pytest.raises(InvalidInputError):
            ConvexPolygon((Point(1, 0), Point(0, 0)))


class TestArea:
    def test_triangle(self):
        assert area(hull([(0, 0), (1, 2), (2, 1)])) == Fraction(3, 2)

    def test_unit_square(self):
        assert area(hull([(0, 0), (1, 0), (1, 1), (0, 1)])) == 1

    def test_quadrilateral(self):
        assert area(hull([(0, 0), (0, 3), (2, 2), (1, 3)])) == Fraction(7, 2)

    def test_degenerate(self):
        assert area(hull([(0, 0), (2, 0)])) == 0
        assert area(hull([(1, 1)])) == 0

    @given(polygons())
    def test_nonnegative_rational(self, P):
        a = area(P)
        assert isinstance(a, Fraction)
        assert a >= 0


class TestWidth:
    quad = hull([(0, 0), (0, 3), (2, 2), (1, 3)])

    def test_known_directions(self):
        assert width(self.quad, (1, 0)) == 2
        assert width(self.quad, (0, 1)) == 3
        assert width(self.quad, (1, 1)) == 4
        assert width(self.quad, (1, -1)) == 3

    def test_zero_direction_rejected(self):
        with pytest.raises(InvalidInputError):
            width(self.quad, (0, 0))

    def test_non_integer_rejected(self):
        with pytest.raises(InvalidInputError):
            width(self.quad, (Fraction(1, 2), 1))

    def test_translation_invariance(self):
        moved = hull(v.translated(5, 7) for v in self.quad.vertices)
        assert width(moved, (1, 0)) == width(self.quad, (1, 0))

    @given(polygons(min_points=1), directions, st.integers(1, 5))
    def test_homogeneous(self, P, u, k):
        assert width(P, (k * u[0], k * u[1])) == k * width(P, u)

    @given(polygons(min_points=1), directions, directions)
    def test_subadditive(self, P, u, v):
        s = (u[0] + v[0], u[1] + v[1])
        if s == (0, 0):
            return
        assert width(P, s) <= width(P, u) + width(P, v)


class TestUnimodularMap:
    def test_det_validated(self):
        with pytest.raises(InvalidInputError):
            UnimodularMap(((1, 0), (0, 2)))
        with pytest.raises(InvalidInputError):
            UnimodularMap(((Fraction(1, 2), 0), (0, 2)))

    def test_compose_inverse(self):
        rng = random.Random(7)
        for _ in range(50):
            phi = random_unimodular(rng)
            ident = phi.compose(phi.inverse())
            assert ident.matrix == ((1, 0), (0, 1))
            assert ident.translation == (0, 0)

    def test_rational_translation_flagged(self):
        phi = UnimodularMap(((1, 0), (0, 1)), (Fraction(1, 2), 0))
        assert not phi.is_lattice
        assert UnimodularMap.identity().is_lattice


class TestApplyMap:
    def test_known_image(self):
        P = hull([(4, 0), (5, 0), (2, 2), (0, 3), (1, 2)])
        phi = UnimodularMap(((1, 1), (-1, -2)), (-3, 6))
        assert apply_map(phi, P) == hull([(1, 2), (2, 1), (1, 0), (0, 0), (0, 1)])

    def test_identity(self):
        P = hull([(0, 0), (2, 1), (1, 2)])
        assert apply_map(UnimodularMap.identity(), P) == P

    def test_round_trip(self):
        rng = random.Random(11)
        for _ in range(50):
            P = random_lattice_polygon(rng)
            phi = random_unimodular(rng)
            assert apply_map(phi.inverse(), apply_map(phi, P)) == P

    def test_pullback_and_area(self):
        rng = random.Random(13)
        for _ in range(100):
            P = random_lattice_polygon(rng)
            phi = random_unimodular(rng)
            u = (rng.randint(-5, 5), rng.randint(-5, 5))
            if u == (0, 0):
                u = (1, 0)
            Q = apply_map(phi, P)
            (a, b), (c, d) = phi.matrix
            pulled = (a * u[0] + c * u[1], b * u[0] + d * u[1])
            assert width(Q, u) == width(P, pulled)
            assert area(Q) == area(P)


class TestLatticePoints:
    def test_triangle(self):
        pts = lattice_points(hull([(0, 0), (2, 0), (0, 2)]))
        assert pts == [Point(0, 0), Point(0, 1), Point(0, 2),
                       Point(1, 0), Point(1, 1), Point(2, 0)]

    def test_fractional_triangle_empty(self):
        P = hull([(Fraction(1, 3), Fraction(1, 3)),
                  (Fraction(2, 3), Fraction(1, 3)),
                  (Fraction(1, 2), Fraction(2, 3))])
        assert lattice_points(P) == []

    def test_offset_rational_box(self):
        P = hull([(Fraction(1, 2), Fraction(1, 2)),
                  (Fraction(3, 2), Fraction(1, 2)),
                  (Fraction(3, 2), Fraction(3, 2)),
                  (Fraction(1, 2), Fraction(3, 2))])
        assert lattice_points(P) == [Point(1, 1)]

    def test_segment_and_point(self):
        assert lattice_points(hull([(0, 0), (3, 0)])) == [
            Point(0, 0), Point(1, 0), Point(2, 0), Point(3, 0)]
        assert lattice_points(hull([(0, 0), (2, 1)])) == [Point(0, 0), Point(2, 1)]
        assert lattice_points(hull([(Fraction(1, 2), 0)])) == []

    def test_pick_formula(self):
        # interior + boundary/2 - 1 must reproduce the shoelace area
        rng = random.Random(17)
        for _ in range(60):
            P = random_lattice_polygon(rng, span=5)
            vs = P.vertices
            boundary = sum(
                math.gcd(abs(vs[i].x - vs[(i + 1) % len(vs)].x),
                         abs(vs[i].y - vs[(i + 1) % len(vs)].y))
                for i in range(len(vs)))
            total = len(lattice_points(P))
            interior = total - boundary
            assert area(P) == interior + Fraction(boundary, 2) - 1


class TestDrop:
    def test_known_drop(self):
        P = hull([(0, 0), (2, 0), (0, 2)])
        assert drop_vertex(P, Point(2, 0)) == hull([(0, 0), (1, 0), (1, 1), (0, 2)])

    def test_dimension_drop(self):
        P = hull([(0, 0), (1, 0), (0, 1)])
        assert drop_vertex(P, Point(1, 0)) == hull([(0, 0), (0, 1)])

    def test_square_corner(self):
        P = hull([(0, 0), (1, 0), (1, 1), (0, 1)])
        assert drop_vertex(P, Point(1, 1)) == hull([(0, 0), (1, 0), (0, 1)])

    def test_non_vertex_rejected(self):
        P = hull([(0, 0), (2, 0), (0, 2)])
        with pytest.raises(InvalidInputError):
            drop_vertex(P, Point(1, 1))

    def test_non_lattice_rejected(self):
        P = hull([(0, 0), (2, 0), (0, Fraction(1, 2))])
        with pytest.raises(InvalidInputError):
            drop_vertex(P, Point(2, 0))

    def test_subset_property(self):
        rng = random.Random(19)
        for _ in range(30):
            P = random_lattice_polygon(rng)
            v = rng.choice(P.vertices)
            Q = drop_vertex(P, v)
            kept = set(lattice_points(Q))
            assert v not in kept
            assert kept == {p for p in lattice_points(P) if p != v}


class TestContainment:
    image = hull([(1, 2), (2, 1), (1, 0), (0, 0), (0, 1)])

    def test_examples(self):
        assert contained_in_dilate(self.image, 2, "square")
        assert contained_in_dilate(self.image, 3, "simplex")
        assert not contained_in_dilate(self.image, 2, "simplex")

    def test_negative_rejected(self):
        with pytest.raises(InvalidInputError):
            contained_in_dilate(self.image, -1, "square")

    def test_unknown_target_rejected(self):
        with pytest.raises(InvalidInputError):
            contained_in_dilate(self.image, 1, "octagon")

    def test_rational_dilate(self):
        P = hull([(0, 0), (Fraction(3, 2), 0), (0, Fraction(3, 2))])
        assert contained_in_dilate(P, Fraction(3, 2), "simplex")
        assert not contained_in_dilate(P, Fraction(4, 3), "simplex")


class TestTextFormat:
    def test_round_trip(self):
        P = hull([(0, 0), (3, 1), (2, 3), (0, 2)])
        assert parse_polygon_text(polygon_to_text(P)) == P

    def test_comments_fractions_and_hulling(self):
        text = """
        # a square with a redundant interior point
        0 0
        1 0
        1/2 1/2
        1 1
        0 1
        """
        assert parse_polygon_text(text) == hull([(0, 0), (1, 0), (1, 1), (0, 1)])

    def test_bad_lines(self):
        with pytest.raises(InvalidInputError):
            parse_polygon_text("1 2 3\n")
        with pytest.raises(InvalidInputError):
            parse_polygon_text("a b\n")
        with pytest.raises(InvalidInputError):
            parse_polygon_text("1/0 2\n")
        with pytest.raises(InvalidInputError):
            parse_polygon_text("# nothing\n")
