"""Gauss-style basis reduction under the width norm of a polygon.

Directional width is a seminorm on integer directions (a norm once the
polygon has interior), so the classical shortest-pair loop applies: shift
the wider basis vector by the best multiple of the narrower one, swap
while that strictly helps.  All tie-breaking is fixed, which makes the
output basis deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInputError
from .geometry import ConvexPolygon, IntVec, width

_MAX_ROUNDS = 10_000  # widths decrease strictly on swap; never reached


@dataclass(frozen=True, slots=True)
class LatticeBasis:
    """An ordered pair of integer directions spanning the whole lattice."""

    u1: IntVec
    u2: IntVec

    def __post_init__(self) -> None:
        object.__setattr__(self, "u1", tuple(self.u1))
        object.__setattr__(self, "u2", tuple(self.u2))
        if self.det not in (1, -1):
            raise InvalidInputError("basis must have determinant +1 or -1")

    @property
    def det(self) -> int:
        return self.u1[0] * self.u2[1] - self.u1[1] * self.u2[0]


def _check_unimodular(u1: IntVec, u2: IntVec) -> None:
    if u1[0] * u2[1] - u1[1] * u2[0] not in (1, -1):
        raise InvalidInputError("directions must form a unimodular pair")


def argmin_shift(P: ConvexPolygon, u1: IntVec, u2: IntVec) -> int:
    """Integer k minimizing width(P, u2 + k*u1).

    Width along the line of directions u2 + k*u1 is convex in k, so a
    walk from 0 that moves only while the value strictly drops finds the
    minimizer nearest zero; on a two-sided tie it returns 0.
    """
    _check_unimodular(u1, u2)

    def shifted(k: int):
        return width(P, (u2[0] + k * u1[0], u2[1] + k * u1[1]))

    w0 = shifted(0)
    wp = shifted(1)
    wm = shifted(-1)
    if w0 <= wp and w0 <= wm:
        return 0
    # convexity rules out both neighbors improving at once
    step, best = (1, wp) if wp < w0 else (-1, wm)
    k = step
    while True:
        nxt = shifted(k + step)
        if nxt >= best:
            return k
        k += step
        best = nxt


def gauss_reduce(P: ConvexPolygon) -> LatticeBasis:
    """Reduce the standard basis under P's width norm.

    The result (u1, u2) has width(u1) <= width(u2), and neither u2 + u1
    nor u2 - u1 is narrower than u2.  Points reduce to the standard
    basis; a segment yields its primitive normal direction (width zero)
    as u1.
    """
    u1, u2 = (1, 0), (0, 1)
    if width(P, u1) > width(P, u2):
        u1, u2 = u2, u1
    for _ in range(_MAX_ROUNDS):
        k = argmin_shift(P, u1, u2)
        if k:
            u2 = (u2[0] + k * u1[0], u2[1] + k * u1[1])
        if width(P, u2) < width(P, u1):
            u1, u2 = u2, u1
        else:
            return LatticeBasis(u1, u2)
    raise RuntimeError("basis reduction failed to converge")  # pragma: no cover


def is_reduced(P: ConvexPolygon, basis: LatticeBasis) -> bool:
    """Check the reducedness inequalities directly."""
    w1 = width(P, basis.u1)
    w2 = width(P, basis.u2)
    if w1 > w2:
        return False
    plus = (basis.u1[0] + basis.u2[0], basis.u1[1] + basis.u2[1])
    minus = (basis.u1[0] - basis.u2[0], basis.u1[1] - basis.u2[1])
    return width(P, plus) >= w2 and width(P, minus) >= w2
