"""Minimal polygons of a fixed square size: generation and verification.

A lattice polygon is minimal when every drop of a vertex strictly
shrinks its square size.  Up to unimodular equivalence the minimal
objects of square size h are the axis segment of lattice length h, the
triangles conv{(0,0),(a,h),(h,b)} with a + b >= h, and the
quadrilaterals conv{(a,0),(0,b),(h,h-c),(h-d,h)} with
min(a,b) + min(c,d) > h; quadrilaterals satisfying instead
max(a,c) + max(b,d) < h are mirror images of members of that family,
so the generator omits them.  verify_classification replays the whole
claim against an exhaustive grid sweep.
"""
from __future__ import annotations

import itertools
import multiprocessing
from dataclasses import dataclass
from typing import Iterator, Literal

from .enumeration import enumerate_convex
from .errors import InvalidInputError, ResourceLimitError
from .geometry import ConvexPolygon, Point, hull, width
from .oracle import canonical_form, is_minimal
from .size import ls_square

Kind = Literal["segment", "triangle", "quad"]

DEFAULT_CLASSIFY_LIMIT = 5
_BATCH = 512  # polygons per worker task when sweeping in parallel


def _check_params(h: int, params: tuple[int, ...]) -> None:
    if not isinstance(h, int) or h < 1:
        raise InvalidInputError("square size must be a positive integer")
    for p in params:
        if not isinstance(p, int) or not 1 <= p <= h - 1:
            raise InvalidInputError(
                f"family parameters must be integers in 1..{h - 1}")


@dataclass(frozen=True, slots=True)
class MinimalFamily:
    """Symbolic descriptor of one classified minimal polygon.

    Parameters are (a, b) for a triangle and (a, b, c, d) for a
    quadrilateral; construction enforces the minimality condition, so
    every instance realizes an actually minimal polygon.
    """

    kind: Kind
    h: int
    params: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "params", tuple(self.params))
        if self.kind == "segment":
            expected = 0
        elif self.kind == "triangle":
            expected = 2
        elif self.kind == "quad":
            expected = 4
        else:
            raise InvalidInputError(f"unknown family kind {self.kind!r}")
        if len(self.params) != expected:
            raise InvalidInputError(
                f"{self.kind} family takes {expected} parameters")
        _check_params(self.h, self.params)
        if self.kind == "triangle" and not triangle_minimal(self.h, *self.params):
            raise InvalidInputError("triangle family needs a + b >= h")
        if self.kind == "quad":
            a, b, c, d = self.params
            if not min(a, b) + min(c, d) > self.h:
                raise InvalidInputError(
                    "quad family needs min(a,b) + min(c,d) > h")


def realize(family: MinimalFamily) -> ConvexPolygon:
    """The concrete polygon a family descriptor stands for."""
    h = family.h
    if family.kind == "segment":
        return hull([(0, 0), (h, 0)])
    if family.kind == "triangle":
        a, b = family.params
        return hull([(0, 0), (a, h), (h, b)])
    a, b, c, d = family.params
    return hull([(a, 0), (0, b), (h, h - c), (h - d, h)])


def triangle_minimal(h: int, a: int, b: int) -> bool:
    """Whether conv{(0,0),(a,h),(h,b)} is minimal for square size h."""
    _check_params(h, (a, b))
    return a + b >= h


def quad_minimal(h: int, a: int, b: int, c: int, d: int) -> bool:
    """Whether conv{(a,0),(0,b),(h,h-c),(h-d,h)} is minimal.

    The two clauses exclude each other and are swapped by the mirror
    (x, y) -> (h - x, y); see quad_reflect_params.
    """
    _check_params(h, (a, b, c, d))
    return min(a, b) + min(c, d) > h or max(a, c) + max(b, d) < h


def quad_reflect_params(h: int, a: int, b: int, c: int, d: int) -> tuple[int, int, int, int]:
    """Parameters of the quadrilateral's image under (x, y) -> (h - x, y).

    The mirror swaps the two minimality clauses, which is why
    generation may restrict itself to the first clause.
    """
    _check_params(h, (a, b, c, d))
    return (h - a, h - c, h - b, h - d)


def minimal_families(h: int) -> Iterator[MinimalFamily]:
    """All family descriptors for square size h, first-clause quads only.

    Distinct descriptors may still realize equivalent polygons (the
    triangle parameter pair is unordered up to the diagonal mirror), so
    class counting must deduplicate downstream.
    """
    if not isinstance(h, int) or h < 1:
        raise InvalidInputError("square size must be a positive integer")
    yield MinimalFamily("segment", h)
    for a in range(1, h):
        for b in range(max(1, h - a), h):
            yield MinimalFamily("triangle", h, (a, b))
    for a, b, c, d in itertools.product(range(1, h), repeat=4):
        if min(a, b) + min(c, d) > h:
            yield MinimalFamily("quad", h, (a, b, c, d))


def _class_key(P: ConvexPolygon):
    return (len(P.vertices), P.vertices)


def generate_minimal(h: int) -> list[ConvexPolygon]:
    """Canonical representatives of the minimal classes of square size h,
    sorted by vertex count and then vertex list."""
    classes = {canonical_form(realize(f)) for f in minimal_families(h)}
    return sorted(classes, key=_class_key)


@dataclass(frozen=True, slots=True)
class ClassificationReport:
    """Outcome of checking the generated classes against a full sweep."""

    h: int
    family_classes: tuple[ConvexPolygon, ...]
    search_classes: tuple[ConvexPolygon, ...]
    only_in_families: tuple[ConvexPolygon, ...]
    only_in_search: tuple[ConvexPolygon, ...]

    @property
    def matches(self) -> bool:
        return not self.only_in_families and not self.only_in_search


def _sweep_one(h: int, P: ConvexPolygon) -> ConvexPolygon | None:
    """Canonical form if P is a minimal polygon of square size h."""
    if len(P.vertices) == 1:
        return None
    # the square size never exceeds the larger axis span
    if max(width(P, (1, 0)), width(P, (0, 1))) < h:
        return None
    if ls_square(P) != h or not is_minimal(P):
        return None
    return canonical_form(P)


def _sweep_batch(payload) -> list[tuple]:
    h, batch = payload
    out = []
    for vs in batch:
        poly = ConvexPolygon._trusted(tuple(Point(x, y) for x, y in vs))
        c = _sweep_one(h, poly)
        if c is not None:
            out.append(tuple((v.x, v.y) for v in c.vertices))
    return out


def _batched(items: Iterator, size: int) -> Iterator[list]:
    while True:
        chunk = list(itertools.islice(items, size))
        if not chunk:
            return
        yield chunk


def verify_classification(h: int, limit: int = DEFAULT_CLASSIFY_LIMIT,
                          jobs: int = 1) -> ClassificationReport:
    """Compare the generated classes with an exhaustive minimality sweep.

    Every equivalence class of square size h has its canonical form
    inside the corner square of side h, so sweeping the full grid
    {0..h}^2 (degenerate members included) meets each class at least
    once.  The sweep cost grows quickly with h, hence the guard; raise
    the limit explicitly for a longer run, and pass jobs > 1 to spread
    the sweep over worker processes.
    """
    if not isinstance(h, int) or h < 1:
        raise InvalidInputError(f"square size must be a positive integer, got {h!r}")
    if h > limit:
        raise ResourceLimitError(
            f"classification sweep for h={h} exceeds the limit {limit}; "
            "pass a larger limit to run it anyway")
    found: set[ConvexPolygon] = set()
    stream = enumerate_convex(h, include_degenerate=True, limit=h)
    if jobs > 1:
        raw = (tuple((v.x, v.y) for v in P.vertices) for P in stream)
        tasks = ((h, batch) for batch in _batched(raw, _BATCH))
        with multiprocessing.Pool(jobs) as pool:
            for result in pool.imap_unordered(_sweep_batch, tasks):
                for vs in result:
                    found.add(ConvexPolygon._trusted(
                        tuple(Point(x, y) for x, y in vs)))
    else:
        for P in stream:
            c = _sweep_one(h, P)
            if c is not None:
                found.add(c)
    family = tuple(generate_minimal(h))
    search = tuple(sorted(found, key=_class_key))
    family_set = set(family)
    return ClassificationReport(
        h=h,
        family_classes=family,
        search_classes=search,
        only_in_families=tuple(p for p in family if p not in found),
        only_in_search=tuple(p for p in search if p not in family_set),
    )
