"""Exhaustive searches that cross-check the reduced-basis fast path.

The key fact making brute force sound: any unimodular image fitting a
dilate d of either target has both row widths at most d.  The fast path
always yields a valid certificate, so searching unimodular pairs of
directions no wider than that certificate's dilate provably covers every
map that could do at least as well.
"""
from __future__ import annotations

from math import gcd

from .errors import DegenerateInputError, InvalidInputError
from .geometry import (
    SIMPLEX,
    SQUARE,
    ConvexPolygon,
    Coord,
    IntVec,
    Point,
    Target,
    area,
    drop_vertex,
    hull,
    width,
)
from .reduction import gauss_reduce
from .size import invariants, ls_square


def candidate_directions(P: ConvexPolygon, cap) -> list[IntVec]:
    """All primitive directions of width at most cap, up to sign.

    Representatives have positive first coordinate, or a zero first and
    positive second.  The scan runs in the width-reduced frame, where the
    axis widths are as small as any basis allows, and maps hits back
    through the transpose; that keeps the search bounded by the shape's
    intrinsic widths rather than whatever skewed coordinates it arrived
    in.  Square shells are scanned outward; widths are positively
    homogeneous along rays and change by at most one axis width per unit
    step along a shell, so once the narrowest integer point of a shell
    clears cap by that slack nothing further qualifies.
    """
    if P.dim != 2:
        raise DegenerateInputError("direction enumeration needs a full-dimensional polygon")
    if cap < 0:
        raise InvalidInputError("cap must be nonnegative")
    basis = gauss_reduce(P)
    dots1 = [basis.u1[0] * v.x + basis.u1[1] * v.y for v in P.vertices]
    dots2 = [basis.u2[0] * v.x + basis.u2[1] * v.y for v in P.vertices]

    def reduced_width(u: IntVec):
        a, b = u
        dots = [a * p + b * q for p, q in zip(dots1, dots2)]
        return max(dots) - min(dots)

    slack = max(reduced_width((1, 0)), reduced_width((0, 1)))
    found: list[IntVec] = []
    r = 0
    while True:
        r += 1
        shell_min = None
        for u in _shell(r):
            w = reduced_width(u)
            if shell_min is None or w < shell_min:
                shell_min = w
            if w <= cap and gcd(u[0], u[1]) == 1:
                a = u[0] * basis.u1[0] + u[1] * basis.u2[0]
                b = u[0] * basis.u1[1] + u[1] * basis.u2[1]
                if a < 0 or (a == 0 and b < 0):
                    a, b = -a, -b
                found.append((a, b))
        if shell_min > cap + slack:
            return sorted(set(found))


def _shell(r: int):
    """Integer points with max(|a|, |b|) = r."""
    for a in range(-r, r + 1):
        if abs(a) == r:
            for b in range(-r, r + 1):
                yield (a, b)
        else:
            yield (a, -r)
            yield (a, r)


def brute_force_lattice_size(P: ConvexPolygon, target: Target) -> Coord:
    """Smallest target dilate over every unimodular map, by direct search.

    Independent of the reduced-basis shortcut except for using its
    certificate dilate as the search cap, which only ever widens the
    search beyond what the optimum needs.
    """
    if P.dim != 2:
        raise DegenerateInputError("exhaustive search needs a full-dimensional polygon")
    if target not in (SQUARE, SIMPLEX):
        raise InvalidInputError(f"unknown target {target!r}")
    report = invariants(P)
    cap = report.ls_square if target == SQUARE else report.ls_simplex
    dirs = candidate_directions(P, cap)
    dots = {u: [u[0] * v.x + u[1] * v.y for v in P.vertices] for u in dirs}
    spread = {u: max(d) - min(d) for u, d in dots.items()}
    best = None
    for i, u in enumerate(dirs):
        for v in dirs[i + 1:]:
            if u[0] * v[1] - u[1] * v[0] not in (1, -1):
                continue
            if target == SQUARE:
                value = max(spread[u], spread[v])
            else:
                du, dv = dots[u], dots[v]
                sums = [a + b for a, b in zip(du, dv)]
                difs = [a - b for a, b in zip(du, dv)]
                value = min(
                    max(sums) - min(du) - min(dv),
                    max(du) + max(dv) - min(sums),
                    max(dv) - min(du) + max(difs),
                    max(du) - min(dv) - min(difs),
                )
            if best is None or value < best:
                best = value
    assert best is not None  # the reduced basis itself is always searched
    return best


def _normalized_images(P: ConvexPolygon, side) -> list[tuple[Point, ...]]:
    """Vertex tuples of every unimodular image of P inside the side-sized
    corner square, translated so both coordinate minima are zero."""
    dirs = candidate_directions(P, side)
    dots = {u: [u[0] * v.x + u[1] * v.y for v in P.vertices] for u in dirs}
    narrow = [u for u in dirs if max(dots[u]) - min(dots[u]) <= side]
    images = []
    for u in narrow:
        for v in narrow:
            if u[0] * v[1] - u[1] * v[0] not in (1, -1):
                continue
            du, dv = dots[u], dots[v]
            for sx in (1, -1):
                for sy in (1, -1):
                    xs = [sx * a for a in du]
                    ys = [sy * b for b in dv]
                    mx = min(xs)
                    my = min(ys)
                    images.append(hull(
                        Point(x - mx, y - my) for x, y in zip(xs, ys)).vertices)
    return images


def canonical_form(P: ConvexPolygon) -> ConvexPolygon:
    """Lexicographically smallest unimodular image with coordinate minima zero.

    Two polygons are unimodularly equivalent exactly when their canonical
    forms coincide, and the canonical form of a lattice polygon with
    square size h sits inside the corner square of side h.
    """
    if P.dim == 0:
        return ConvexPolygon((Point(0, 0),))
    if P.dim == 1:
        # of the four images that fit the bounding square, the vertical
        # segment from the origin is the lexicographic minimum
        length = ls_square(P)
        return hull([Point(0, 0), Point(0, length)])
    side = ls_square(P)
    best = min(_normalized_images(P, side))
    return ConvexPolygon._trusted(best)


def lattice_equivalent(P: ConvexPolygon, Q: ConvexPolygon) -> bool:
    """Whether some unimodular map carries P onto Q."""
    if len(P.vertices) != len(Q.vertices) or P.dim != Q.dim:
        return False
    if area(P) != area(Q):
        return False
    return canonical_form(P) == canonical_form(Q)


def is_minimal(P: ConvexPolygon) -> bool:
    """No vertex of P can be dropped without shrinking the square size.

    A proper lattice subpolygon misses some vertex of P, hence lies in
    that vertex's drop, and square size is monotone under inclusion, so
    single drops decide minimality.
    """
    if not P.is_lattice:
        raise InvalidInputError("minimality is about lattice polygons")
    if len(P.vertices) == 1:
        return True
    h = ls_square(P)
    for v in P.vertices:
        if ls_square(drop_vertex(P, v)) >= h:
            return False
    return True
