"""Lattice width and lattice size of a polygon, with containment certificates.

The lattice size of a polygon for a target shape (unit square or standard
triangle) is the smallest dilate of the target that some unimodular image
of the polygon fits into.  For a width-reduced basis the two widths give
the lattice width and the square size outright, and the triangle size is
the best of the four axis sign flips of the reduced image; the returned
certificates make those containments directly checkable.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .geometry import (
    SIMPLEX,
    SQUARE,
    ConvexPolygon,
    Coord,
    Target,
    UnimodularMap,
    apply_map,
    area,
    contained_in_dilate,
    width,
)
from .reduction import LatticeBasis, gauss_reduce

# sign flips paired with the translation that moves the flipped minima to
# the origin, indexed like the four dilate formulas below
_FLIPS = (
    ((1, 0), (0, 1)),
    ((-1, 0), (0, -1)),
    ((1, 0), (0, -1)),
    ((-1, 0), (0, 1)),
)


@dataclass(frozen=True, slots=True)
class ContainmentCertificate:
    """A unimodular map witnessing that its image fits dilate * target."""

    map: UnimodularMap
    target: Target
    dilate: Coord

    def verify(self, P: ConvexPolygon) -> bool:
        return contained_in_dilate(apply_map(self.map, P), self.dilate, self.target)


@dataclass(frozen=True, slots=True)
class InvariantsReport:
    width: Coord
    ls_square: Coord
    ls_simplex: Coord
    area: Fraction
    basis: LatticeBasis
    cert_square: ContainmentCertificate
    cert_simplex: ContainmentCertificate


def simplex_dilates(P: ConvexPolygon) -> tuple[Coord, Coord, Coord, Coord]:
    """Smallest triangle dilates containing P after each axis sign flip.

    Translations are unconstrained, so each value reads off the vertex
    extremes: identity, both axes flipped, y flipped, x flipped.
    """
    xs = [v.x for v in P.vertices]
    ys = [v.y for v in P.vertices]
    sums = [v.x + v.y for v in P.vertices]
    difs = [v.x - v.y for v in P.vertices]
    return (
        max(sums) - min(xs) - min(ys),
        max(xs) + max(ys) - min(sums),
        max(ys) - min(xs) + max(difs),
        max(xs) - min(ys) - min(difs),
    )


def lattice_width(P: ConvexPolygon) -> Coord:
    """Smallest directional width over all nonzero integer directions."""
    if len(P.vertices) == 1:
        return 0
    return width(P, gauss_reduce(P).u1)


def ls_square(P: ConvexPolygon) -> Coord:
    """Lattice size for the unit-square target, without the certificate."""
    if len(P.vertices) == 1:
        return 0
    return width(P, gauss_reduce(P).u2)


def invariants(P: ConvexPolygon) -> InvariantsReport:
    """Lattice width, both lattice sizes, area, and witnessing maps."""
    if len(P.vertices) == 1:
        v = P.vertices[0]
        to_origin = UnimodularMap(((1, 0), (0, 1)), (-v.x, -v.y))
        return InvariantsReport(
            width=0, ls_square=0, ls_simplex=0, area=Fraction(0),
            basis=LatticeBasis((1, 0), (0, 1)),
            cert_square=ContainmentCertificate(to_origin, SQUARE, 0),
            cert_simplex=ContainmentCertificate(to_origin, SIMPLEX, 0),
        )
    basis = gauss_reduce(P)
    reduce_map = UnimodularMap.from_rows(basis.u1, basis.u2)
    Q = apply_map(reduce_map, P)
    min_x = min(v.x for v in Q.vertices)
    max_x = max(v.x for v in Q.vertices)
    min_y = min(v.y for v in Q.vertices)
    max_y = max(v.y for v in Q.vertices)

    square_side = width(P, basis.u2)
    cert_square = ContainmentCertificate(
        UnimodularMap(reduce_map.matrix, (-min_x, -min_y)), SQUARE, square_side)

    dilates = simplex_dilates(Q)
    best = min(dilates)
    which = dilates.index(best)
    (sx, _), (_, sy) = _FLIPS[which]
    (r1a, r1b), (r2a, r2b) = reduce_map.matrix
    flipped = ((sx * r1a, sx * r1b), (sy * r2a, sy * r2b))
    shift = (-min_x if sx > 0 else max_x, -min_y if sy > 0 else max_y)
    cert_simplex = ContainmentCertificate(
        UnimodularMap(flipped, shift), SIMPLEX, best)

    return InvariantsReport(
        width=width(P, basis.u1),
        ls_square=square_side,
        ls_simplex=best,
        area=area(P),
        basis=basis,
        cert_square=cert_square,
        cert_simplex=cert_simplex,
    )


def check_touch(P: ConvexPolygon) -> tuple[Coord, Coord] | None:
    """Shortcut invariants for polygons spanning equal axis widths.

    When both axis widths equal h, the square size is h and the lattice
    width is the smaller of h and the two diagonal widths; returns
    (ls_square, width), or None when the axis widths differ.
    """
    h = width(P, (1, 0))
    if h != width(P, (0, 1)):
        return None
    return h, min(h, width(P, (1, 1)), width(P, (1, -1)))
