"""Exact planar predicates on rational points.

Points are stored as integer triples ``(xn, yn, d)`` representing
``(xn/d, yn/d)`` with ``d > 0``.  All predicates reduce to signs of integer
expressions, so they are decision-exact; floating point is never used.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import DegenerateInputError

Point = tuple[int, int, int]  # (x_num, y_num, common_den), den > 0


def make_point(x, y) -> Point:
    """Normalize a coordinate pair (int, Fraction or (num, den)) to a Point."""
    fx, fy = Fraction(x), Fraction(y)
    d = fx.denominator * fy.denominator // gcd(fx.denominator, fy.denominator)
    xn = fx.numerator * (d // fx.denominator)
    yn = fy.numerator * (d // fy.denominator)
    g = gcd(gcd(abs(xn), abs(yn)), d)
    if g > 1:
        xn, yn, d = xn // g, yn // g, d // g
    return (xn, yn, d)


def point_fractions(p: Point) -> tuple[Fraction, Fraction]:
    return Fraction(p[0], p[2]), Fraction(p[1], p[2])


def orientation(a: Point, b: Point, c: Point) -> int:
    """Sign of the cross product (b-a) x (c-a): +1 ccw, -1 cw, 0 collinear."""
    ax, ay, da = a
    bx, by, db = b
    cx, cy, dc = c
    # denominators are positive, so the sign is carried by the numerator
    v = (bx * da - ax * db) * (cy * da - ay * dc) - (by * da - ay * db) * (cx * da - ax * dc)
    return (v > 0) - (v < 0)


def segments_cross(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True iff open segments ab and cd share exactly one interior point.

    Endpoint coincidence never counts.  A zero orientation between four
    pairwise-distinct endpoints means a collinear triple, which violates
    general position and raises.
    """
    if a in (c, d) or b in (c, d):
        return False
    o1 = orientation(a, b, c)
    o2 = orientation(a, b, d)
    o3 = orientation(c, d, a)
    o4 = orientation(c, d, b)
    if 0 in (o1, o2, o3, o4):
        raise DegenerateInputError(
            f"collinear triple among segment endpoints {a}, {b}, {c}, {d}"
        )
    return o1 != o2 and o3 != o4


def point_on_open_segment(p: Point, a: Point, b: Point) -> bool:
    """True iff p lies strictly inside segment ab."""
    if p == a or p == b:
        return False
    if orientation(a, b, p) != 0:
        return False
    # p collinear with ab: check the projection lies strictly between
    px, py = point_fractions(p)
    ax, ay = point_fractions(a)
    bx, by = point_fractions(b)
    if ax != bx:
        lo, hi = min(ax, bx), max(ax, bx)
        return lo < px < hi
    lo, hi = min(ay, by), max(ay, by)
    return lo < py < hi


def check_general_position(points: Sequence[Point]) -> None:
    """Raise unless no three points are collinear.  O(n^3); use at desk scale."""
    n = len(points)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if orientation(points[i], points[j], points[k]) == 0:
                    raise DegenerateInputError(
                        f"points {i}, {j}, {k} are collinear"
                    )


def crossing_counts(points: Sequence[Point], edges: Sequence[tuple[int, int]]) -> list[int]:
    """Number of proper crossings on each edge, by x-interval sweep.

    Runs in O(E log E + K) where K is the number of x-overlapping pairs.
    """
    fx = [Fraction(p[0], p[2]) for p in points]
    fy = [Fraction(p[1], p[2]) for p in points]
    order = sorted(
        range(len(edges)),
        key=lambda e: min(fx[edges[e][0]], fx[edges[e][1]]),
    )
    counts = [0] * len(edges)
    active: list[int] = []
    for ei in order:
        u, v = edges[ei]
        xlo = min(fx[u], fx[v])
        xhi = max(fx[u], fx[v])
        ylo, yhi = min(fy[u], fy[v]), max(fy[u], fy[v])
        keep = []
        for ej in active:
            p, q = edges[ej]
            if max(fx[p], fx[q]) < xlo:
                continue
            keep.append(ej)
            if min(fy[p], fy[q]) > yhi or max(fy[p], fy[q]) < ylo:
                continue
            if segments_cross(points[u], points[v], points[p], points[q]):
                counts[ei] += 1
                counts[ej] += 1
        active = keep
        active.append(ei)
    return counts


def count_crossings_of_segment(
    points: Sequence[Point],
    seg: tuple[int, int],
    edges: Iterable[tuple[int, int]],
) -> int:
    """Proper crossings between one vertex-indexed segment and an edge set."""
    u, v = seg
    total = 0
    for p, q in edges:
        if segments_cross(points[u], points[v], points[p], points[q]):
            total += 1
    return total
