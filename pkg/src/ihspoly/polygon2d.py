"""Exact 2D convex geometry over one quadratic extension.

Points are pairs of Surd; all predicates are exact sign tests, so
hulls, Minkowski sums, areas and containment are decided without any
epsilon.  Degenerate polygons (segments, points) are first-class: they
show up as polygon slices of non-big classes.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .surd import Surd

Point = tuple[Surd, Surd]


def _s(x) -> Surd:
    return x if isinstance(x, Surd) else Surd(x)


def point(x, y) -> Point:
    return (_s(x), _s(y))


def cross(o: Point, a: Point, b: Point) -> Surd:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Iterable[Point]) -> list[Point]:
    """Counterclockwise hull starting at the lexicographic minimum.

    Collinear points are dropped; a segment or single point comes back
    with 2 or 1 vertices.
    """
    pts = sorted(set((_s(x), _s(y)) for x, y in points))
    if len(pts) <= 2:
        return pts
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p).sign() <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p).sign() <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    return hull if len(hull) > 2 else sorted(set(hull))


def area(vertices: Sequence[Point]) -> Surd:
    """Shoelace area; zero for degenerate polygons."""
    if len(vertices) < 3:
        return Surd(0)
    total = Surd(0)
    for i, (x0, y0) in enumerate(vertices):
        x1, y1 = vertices[(i + 1) % len(vertices)]
        total = total + (x0 * y1 - x1 * y0)
    return abs(total) * Fraction(1, 2)


def minkowski_sum(p: Sequence[Point], q: Sequence[Point]) -> list[Point]:
    """Exact Minkowski sum of convex polygons (hull of pairwise sums)."""
    if not p or not q:
        return []
    return convex_hull([(a[0] + b[0], a[1] + b[1]) for a in p for b in q])


def scale(vertices: Sequence[Point], factor) -> list[Point]:
    f = Fraction(factor)
    if f < 0:
        raise ValueError("polygon scaling factor must be nonnegative")
    if f == 0:
        return [(Surd(0), Surd(0))] if vertices else []
    return [(x * f, y * f) for x, y in vertices]


def translate(vertices: Sequence[Point], dx, dy) -> list[Point]:
    dx, dy = _s(dx), _s(dy)
    return [(x + dx, y + dy) for x, y in vertices]


def contains_point(vertices: Sequence[Point], pt: Point) -> bool:
    pt = (_s(pt[0]), _s(pt[1]))
    if not vertices:
        return False
    if len(vertices) == 1:
        return vertices[0] == pt
    if len(vertices) == 2:
        a, b = vertices
        if cross(a, b, pt).sign() != 0:
            return False
        ab = (b[0] - a[0], b[1] - a[1])
        t = (pt[0] - a[0]) * ab[0] + (pt[1] - a[1]) * ab[1]
        return t.sign() >= 0 and (t - (ab[0] * ab[0] + ab[1] * ab[1])).sign() <= 0
    for i, v in enumerate(vertices):
        w = vertices[(i + 1) % len(vertices)]
        if cross(v, w, pt).sign() < 0:
            return False
    return True


def contains_polygon(outer: Sequence[Point], inner: Sequence[Point]) -> bool:
    """Convexity makes vertex containment sufficient."""
    return all(contains_point(outer, v) for v in inner)
