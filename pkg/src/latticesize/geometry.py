"""Exact planar convex geometry over the rationals.

Coordinates are ints or Fractions (ints whenever the value is integral,
which keeps lattice-polygon arithmetic fast), every predicate is exact,
and polygons are stored canonically: vertices counterclockwise, no three
collinear, starting at the lexicographically smallest vertex.  Structural
equality of polygons is therefore geometric equality.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal, Union

from .errors import InvalidInputError

Coord = Union[int, Fraction]
IntVec = tuple[int, int]
Target = Literal["square", "simplex"]

SQUARE: Target = "square"
SIMPLEX: Target = "simplex"


def _norm(value) -> Coord:
    """Coerce to an exact rational, kept as a plain int when integral."""
    if isinstance(value, int):
        return value
    f = Fraction(value)
    return f.numerator if f.denominator == 1 else f


@dataclass(frozen=True, order=True, slots=True)
class Point:
    x: Coord
    y: Coord

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", _norm(self.x))
        object.__setattr__(self, "y", _norm(self.y))

    @property
    def is_lattice(self) -> bool:
        return isinstance(self.x, int) and isinstance(self.y, int)

    def translated(self, dx: Coord, dy: Coord) -> "Point":
        return Point(self.x + dx, self.y + dy)


def _cross(o: Point, a: Point, b: Point) -> Coord:
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def _edge_group(dx: Coord, dy: Coord) -> int:
    # 0 for directions pointing lexicographically forward, 1 for backward
    return 0 if dx > 0 or (dx == 0 and dy > 0) else 1


@dataclass(frozen=True, slots=True)
class ConvexPolygon:
    """A point, segment, or convex polygon in canonical vertex order."""

    vertices: tuple[Point, ...]

    def __post_init__(self) -> None:
        vs = tuple(self.vertices)
        object.__setattr__(self, "vertices", vs)
        n = len(vs)
        if n == 0:
            raise InvalidInputError("polygon needs at least one vertex")
        if not all(isinstance(v, Point) for v in vs):
            raise InvalidInputError("vertices must be Points")
        if n >= 2 and len(set(vs)) != n:
            raise InvalidInputError("repeated vertex")
        if n == 2 and vs[1] < vs[0]:
            raise InvalidInputError("segment endpoints out of canonical order")
        if n >= 3:
            if min(vs) != vs[0]:
                raise InvalidInputError("vertex list must start at its lexicographic minimum")
            seen_backward = False
            for i in range(n):
                a, b, c = vs[i], vs[(i + 1) % n], vs[(i + 2) % n]
                if _cross(a, b, c) <= 0:
                    raise InvalidInputError("vertices must be strictly convex counterclockwise")
                g = _edge_group(b.x - a.x, b.y - a.y)
                if g == 0 and seen_backward:
                    # a second angular wrap would mean the cycle winds twice
                    raise InvalidInputError("vertex cycle is not a simple polygon")
                seen_backward = seen_backward or g == 1

    @classmethod
    def _trusted(cls, vertices: tuple[Point, ...]) -> "ConvexPolygon":
        # internal fast path for callers that construct canonical tuples
        self = object.__new__(cls)
        object.__setattr__(self, "vertices", vertices)
        return self

    @property
    def dim(self) -> int:
        n = len(self.vertices)
        return n - 1 if n <= 2 else 2

    @property
    def is_lattice(self) -> bool:
        return all(v.is_lattice for v in self.vertices)

    def __repr__(self) -> str:  # pragma: no cover
        body = ", ".join(f"({v.x}, {v.y})" for v in self.vertices)
        return f"ConvexPolygon[{body}]"


def _as_point(p) -> Point:
    return p if isinstance(p, Point) else Point(p[0], p[1])


def hull(points: Iterable) -> ConvexPolygon:
    """Convex hull in canonical form; accepts Points or coordinate pairs."""
    pts = sorted({_as_point(p) for p in points})
    if not pts:
        raise InvalidInputError("hull of an empty point set")
    if len(pts) == 1:
        return ConvexPolygon._trusted((pts[0],))
    lo: list[Point] = []
    for p in pts:
        while len(lo) >= 2 and _cross(lo[-2], lo[-1], p) <= 0:
            lo.pop()
        lo.append(p)
    hi: list[Point] = []
    for p in reversed(pts):
        while len(hi) >= 2 and _cross(hi[-2], hi[-1], p) <= 0:
            hi.pop()
        hi.append(p)
    return ConvexPolygon._trusted(tuple(lo[:-1] + hi[:-1]))


def area(P: ConvexPolygon) -> Fraction:
    """Euclidean area by the shoelace sum; zero for segments and points."""
    vs = P.vertices
    if len(vs) <= 2:
        return Fraction(0)
    s = 0
    for i, v in enumerate(vs):
        w = vs[(i + 1) % len(vs)]
        s += v.x * w.y - w.x * v.y
    return Fraction(s) / 2


def width(P: ConvexPolygon, u: IntVec) -> Coord:
    """Spread of the linear functional u over P (directional width)."""
    a, b = u
    if not (isinstance(a, int) and isinstance(b, int)):
        raise InvalidInputError("direction must have integer coordinates")
    if a == 0 and b == 0:
        raise InvalidInputError("direction must be nonzero")
    dots = [a * v.x + b * v.y for v in P.vertices]
    return max(dots) - min(dots)


@dataclass(frozen=True, slots=True)
class UnimodularMap:
    """Affine map x -> M x + t with M integer of determinant +-1.

    The translation is rational in general; lattice equivalence uses
    integer translations, and every map this package produces for a
    lattice polygon has one (see the is_lattice property).
    """

    matrix: tuple[IntVec, IntVec]
    translation: tuple[Coord, Coord] = (0, 0)

    def __post_init__(self) -> None:
        (a, b), (c, d) = self.matrix
        if not all(isinstance(e, int) for e in (a, b, c, d)):
            raise InvalidInputError("matrix entries must be integers")
        if a * d - b * c not in (1, -1):
            raise InvalidInputError("matrix must have determinant +1 or -1")
        object.__setattr__(self, "matrix", ((a, b), (c, d)))
        tx, ty = self.translation
        object.__setattr__(self, "translation", (_norm(tx), _norm(ty)))

    @property
    def det(self) -> int:
        (a, b), (c, d) = self.matrix
        return a * d - b * c

    @property
    def is_lattice(self) -> bool:
        tx, ty = self.translation
        return isinstance(tx, int) and isinstance(ty, int)

    @classmethod
    def identity(cls) -> "UnimodularMap":
        return cls(((1, 0), (0, 1)))

    @classmethod
    def from_rows(cls, u1: IntVec, u2: IntVec,
                  translation: tuple[Coord, Coord] = (0, 0)) -> "UnimodularMap":
        return cls((tuple(u1), tuple(u2)), translation)

    def apply_point(self, p: Point) -> Point:
        (a, b), (c, d) = self.matrix
        tx, ty = self.translation
        return Point(a * p.x + b * p.y + tx, c * p.x + d * p.y + ty)

    def compose(self, inner: "UnimodularMap") -> "UnimodularMap":
        """The map sending x to self(inner(x))."""
        (a, b), (c, d) = self.matrix
        (e, f), (g, h) = inner.matrix
        ix, iy = inner.translation
        tx, ty = self.translation
        return UnimodularMap(
            ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h)),
            (a * ix + b * iy + tx, c * ix + d * iy + ty),
        )

    def inverse(self) -> "UnimodularMap":
        (a, b), (c, d) = self.matrix
        det = a * d - b * c
        ia, ib, ic, id_ = d * det, -b * det, -c * det, a * det
        tx, ty = self.translation
        return UnimodularMap(((ia, ib), (ic, id_)),
                             (-(ia * tx + ib * ty), -(ic * tx + id_ * ty)))


def apply_map(phi: UnimodularMap, P: ConvexPolygon) -> ConvexPolygon:
    """Image polygon; unimodular maps preserve strict convex position."""
    return hull(phi.apply_point(v) for v in P.vertices)


def lattice_points(P: ConvexPolygon) -> list[Point]:
    """All integer points inside or on P, sorted lexicographically.

    Scans bounding-box rows and intersects each row with the edges
    exactly, so rational vertices are handled without rounding.
    """
    vs = P.vertices
    if len(vs) == 1:
        return [vs[0]] if vs[0].is_lattice else []
    n = len(vs)
    edges = [(vs[i], vs[(i + 1) % n]) for i in range(n)]
    if n == 2:
        edges = edges[:1]
    ys = [v.y for v in vs]
    out: list[Point] = []
    for y in range(math.ceil(min(ys)), math.floor(max(ys)) + 1):
        xs: list[Coord] = []
        for a, b in edges:
            if a.y == b.y:
                if a.y == y:
                    xs.append(a.x)
                    xs.append(b.x)
            else:
                lo, hi = (a, b) if a.y < b.y else (b, a)
                if lo.y <= y <= hi.y:
                    t = Fraction(y - lo.y) / (hi.y - lo.y)
                    xs.append(lo.x + t * (hi.x - lo.x))
        if xs:
            out.extend(Point(x, y)
                       for x in range(math.ceil(min(xs)), math.floor(max(xs)) + 1))
    out.sort()
    return out


def drop_vertex(P: ConvexPolygon, v: Point) -> ConvexPolygon:
    """Hull of P's lattice points with the vertex v removed."""
    if not P.is_lattice:
        raise InvalidInputError("drop_vertex needs a lattice polygon")
    v = _as_point(v)
    if v not in P.vertices:
        raise InvalidInputError(f"({v.x}, {v.y}) is not a vertex")
    rest = [p for p in lattice_points(P) if p != v]
    if not rest:
        raise InvalidInputError("dropping the only lattice point leaves nothing")
    return hull(rest)


def contained_in_dilate(P: ConvexPolygon, dilate, target: Target) -> bool:
    """Whether P fits inside dilate times the unit square or the standard
    triangle with legs on the axes."""
    d = _norm(dilate)
    if d < 0:
        raise InvalidInputError("dilate must be nonnegative")
    if target == SQUARE:
        return all(0 <= v.x <= d and 0 <= v.y <= d for v in P.vertices)
    if target == SIMPLEX:
        return all(v.x >= 0 and v.y >= 0 and v.x + v.y <= d for v in P.vertices)
    raise InvalidInputError(f"unknown target {target!r}")


def parse_polygon_text(text: str) -> ConvexPolygon:
    """Read one 'x y' pair per line and hull the points.

    Blank lines are skipped and '#' starts a comment.  Coordinates are
    integers or fractions like 7/3.
    """
    pts: list[Point] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InvalidInputError(f"line {lineno}: expected 'x y', got {line!r}")
        try:
            pts.append(Point(Fraction(parts[0]), Fraction(parts[1])))
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInputError(f"line {lineno}: bad coordinate: {exc}") from exc
    if not pts:
        raise InvalidInputError("no points in input")
    return hull(pts)


def polygon_to_text(P: ConvexPolygon) -> str:
    """Canonical vertices, one 'x y' line each."""
    return "".join(f"{v.x} {v.y}\n" for v in P.vertices)
