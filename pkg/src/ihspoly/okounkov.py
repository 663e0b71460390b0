"""Newton-Okounkov-type polygons from the BBF form.

For a pseudo-effective class D and a prime divisor E, the polygon is

    { (t, y) : 0 <= t <= mu_E(D),  0 <= y <= q(P(D - tE), E) }

computed after stripping nu_E(D) (the coefficient of E in the negative
part) off D, and reported together with the offset nu.  Its upper
boundary is piecewise linear because the positive part P(D - tE) is an
affine function of t on each Boucksom-Zariski chamber; the walk tracks
the chamber changes exactly.  The pseudo-effective threshold mu is the
exact LP optimum in polyhedral mode and a quadratic surd in round mode,
and the area always equals q(P(D))/2.

Everything here is exact: abscissae of interior breakpoints are
rational, the terminal abscissa may live in one quadratic extension.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .errors import ConsistencyError, DomainError
from .geometry import Geometry, Prime, is_pseudo_effective
from .lattice import DivClass
from .linprog import InfeasibleError, UnboundedError, max_step
from .minkowski import chamber_closure_rays, enumerate_chambers
from .polygon2d import Point, contains_polygon, convex_hull
from .polygon2d import area as hull_area
from .polygon2d import minkowski_sum as hull_minkowski_sum
from .polygon2d import scale as hull_scale
from .polygon2d import translate as hull_translate
from .surd import Surd, smallest_positive_root
from .zariski import chamber_positive_part, decompose


@dataclass(frozen=True)
class WalkSegment:
    """On [t_start, t_end] the positive part is base + t * slope."""

    t_start: Fraction
    t_end: Surd
    chamber: frozenset[str]
    base: DivClass
    slope: DivClass


@dataclass(frozen=True)
class BreakpointTrace:
    segments: tuple[WalkSegment, ...]
    mu: Surd

    @property
    def interior_breakpoints(self) -> tuple[Fraction, ...]:
        return tuple(seg.t_start for seg in self.segments[1:])

    @property
    def chambers(self) -> tuple[frozenset[str], ...]:
        return tuple(seg.chamber for seg in self.segments)


@dataclass(frozen=True)
class NOPolygon:
    """Exact polygon with its normalization offset nu and width mu.

    Vertices are counterclockwise from the lexicographic minimum, in
    normalized coordinates (the E-offset nu is carried separately);
    degenerate polygons keep 1 or 2 vertices.
    """

    vertices: tuple[Point, ...]
    nu: Fraction
    mu: Surd
    trace: Optional[BreakpointTrace] = field(default=None, compare=False, repr=False)

    @property
    def area(self) -> Surd:
        return hull_area(self.vertices)

    def absolute_vertices(self) -> tuple[Point, ...]:
        """Vertices translated by (nu, 0) -- un-normalized coordinates."""
        return tuple(hull_translate(self.vertices, self.nu, 0))


# ---------------------------------------------------------------------------
# pseudo-effective threshold


def _proportionality(d: DivClass, e: DivClass) -> Fraction:
    ratio = None
    for dc, ec in zip(d.coords, e.coords):
        if ec:
            r = dc / ec
            if ratio is None:
                ratio = r
            elif ratio != r:
                raise ConsistencyError("isotropic orthogonal classes not proportional")
        elif dc:
            raise ConsistencyError("isotropic orthogonal classes not proportional")
    return ratio if ratio is not None else Fraction(0)


def _threshold(geom: Geometry, d: DivClass, prime: Prime) -> Surd:
    """mu_E(D) = sup { t >= 0 : D - tE pseudo-effective }, D psef."""
    if geom.mode == "polyhedral":
        cols = [g.coords for g in geom.effective_generators]
        try:
            return Surd(max_step(cols, prime.cls.coords, d.coords))
        except InfeasibleError as exc:
            raise DomainError("class is not pseudo-effective in the declared cone") from exc
        except UnboundedError as exc:
            raise ConsistencyError(
                "threshold unbounded: declared effective cone is not pointed"
            ) from exc
    lat = geom.lattice
    qd, qde, qe = lat.square(d), lat.pair(d, prime.cls), lat.square(prime.cls)
    if qd == 0:
        if qde > 0:
            return Surd(0)
        if qde < 0:
            raise ConsistencyError("negative pairing of pseudo-effective classes")
        # both isotropic, orthogonal: proportional rays
        return Surd(_proportionality(d, prime.cls))
    root = smallest_positive_root(qe, -2 * qde, qd)
    if root is None:
        raise ConsistencyError("threshold equation has no positive root")
    return root


def mu_threshold(geom: Geometry, d: DivClass, prime_name: str) -> Surd:
    """Largest t with D - tE pseudo-effective (exact; degree <= 2)."""
    prime = geom.prime(prime_name)
    if not is_pseudo_effective(geom, d):
        raise DomainError("mu threshold requires a pseudo-effective class")
    return _threshold(geom, d, prime)


# ---------------------------------------------------------------------------
# chamber walk


def _trace(geom: Geometry, d: DivClass, prime: Prime) -> BreakpointTrace:
    """Piecewise-affine trace of t -> P(D - tE) on [0, mu]; nu already 0."""
    lat = geom.lattice
    try:
        dec = decompose(geom, d)
    except DomainError as exc:
        raise ConsistencyError(
            "normalized class left the declared effective cone"
        ) from exc
    if dec.coefficient(prime.name):
        raise DomainError(
            "flag prime must sit outside the negative support; strip nu first"
        )
    mu = _threshold(geom, d, prime)
    big = lat.square(dec.positive) > 0
    support = set(dec.support)
    segments: list[WalkSegment] = []
    t = Fraction(0)
    for _ in range(2 * len(geom.primes) + 4):
        base, _ = chamber_positive_part(geom, d, support)
        neg_slope, _ = chamber_positive_part(geom, prime.cls, support)
        slope = -neg_slope
        # Next wall: first prime outside the chamber whose pairing with
        # the affine positive part decreases through zero.
        t_next: Optional[Fraction] = None
        joiners: list[str] = []
        for q in geom.primes:
            if q.name in support or q.name == prime.name:
                continue
            c0, c1 = lat.pair(base, q.cls), lat.pair(slope, q.cls)
            if c1 >= 0:
                continue
            hit = -c0 / c1
            if hit < t:
                raise ConsistencyError(
                    f"prime {q.name!r} pairs negatively inside a chamber"
                )
            if t_next is None or hit < t_next:
                t_next, joiners = hit, [q.name]
            elif hit == t_next:
                joiners.append(q.name)
        if t_next is not None and t_next == t and Surd(t) < mu:
            support.update(joiners)  # wall at the current abscissa
            continue
        if t_next is None or t_next >= mu:
            segments.append(WalkSegment(t, mu, frozenset(support), base, slope))
            _check_terminus(lat, base, slope, mu, big)
            return BreakpointTrace(tuple(segments), mu)
        segments.append(WalkSegment(t, Surd(t_next), frozenset(support), base, slope))
        support.update(joiners)
        t = t_next
    raise ConsistencyError("chamber walk exceeded the iteration cap")


def _check_terminus(lat, base: DivClass, slope: DivClass, mu: Surd, big: bool) -> None:
    """Cross-check: at t = mu the positive part must reach the isotropic
    boundary (big start), confirming the LP threshold against the exact
    quadratic q(base + t slope) = 0."""
    if not big:
        return
    value = (
        Surd(lat.square(base))
        + mu * (2 * lat.pair(base, slope))
        + mu * mu * lat.square(slope)
    )
    if value != 0:
        raise ConsistencyError(
            "terminal cross-check failed: q(P(D - mu E)) != 0; "
            "the declared data is inconsistent"
        )


def chamber_walk(geom: Geometry, d: DivClass, prime_name: str) -> BreakpointTrace:
    """Walk the chambers met by D - tE for a big class with nu = 0."""
    prime = geom.prime(prime_name)
    dec = decompose(geom, d)
    if geom.lattice.square(dec.positive) <= 0:
        raise DomainError("chamber walk requires a big class")
    if dec.coefficient(prime_name):
        raise DomainError(
            "flag prime must sit outside the negative support; strip nu first"
        )
    return _trace(geom, d, prime)


# ---------------------------------------------------------------------------
# polygons


def polygon(geom: Geometry, d: DivClass, prime_name: str) -> NOPolygon:
    """The polygon of (D, E), normalized by nu_E(D).

    Big classes produce a genuine 2-dimensional polygon of area
    q(P(D))/2; non-big classes degenerate to a segment or point swept
    by the same construction.
    """
    prime = geom.prime(prime_name)
    dec = decompose(geom, d)  # raises DomainError when not psef
    nu = dec.coefficient(prime_name)
    d_norm = d - prime.cls.scale(nu) if nu else d
    trace = _trace(geom, d_norm, prime)
    lat = geom.lattice
    pts: list[Point] = [(Surd(0), Surd(0)), (trace.mu, Surd(0))]
    for seg in trace.segments:
        c0, c1 = lat.pair(seg.base, prime.cls), lat.pair(seg.slope, prime.cls)
        pts.append((Surd(seg.t_start), Surd(c0 + seg.t_start * c1)))
        pts.append((seg.t_end, Surd(c0) + seg.t_end * c1))
    verts = tuple(convex_hull(pts))
    return NOPolygon(verts, nu, trace.mu, trace)


def polygon_area(poly: NOPolygon) -> Surd:
    return poly.area


def polygon_minkowski_sum(p: NOPolygon, q: NOPolygon) -> NOPolygon:
    verts = tuple(hull_minkowski_sum(p.vertices, q.vertices))
    return NOPolygon(verts, p.nu + q.nu, p.mu + q.mu, None)


def polygon_scale(factor, p: NOPolygon) -> NOPolygon:
    f = Fraction(factor)
    if f < 0:
        raise DomainError("polygon scaling factor must be nonnegative")
    if f == 0:
        return NOPolygon(((Surd(0), Surd(0)),), Fraction(0), Surd(0), None)
    verts = tuple(hull_scale(p.vertices, f))
    return NOPolygon(verts, p.nu * f, p.mu * f, None)


def polygon_contains(outer: NOPolygon, inner: NOPolygon) -> bool:
    """Containment in absolute coordinates (nu offsets applied)."""
    return contains_polygon(outer.absolute_vertices(), inner.absolute_vertices())


# ---------------------------------------------------------------------------
# the global polygon cone


def cone_contains(geom: Geometry, prime_name: str, zeta: DivClass, t, y) -> bool:
    """Exact membership of (zeta, t, y) in the polygon cone of E.

    The defining inequalities: nu_E(zeta) <= t <= mu_E(zeta) and
    0 <= y <= q(P(zeta - tE), E), evaluated in the quadratic extension.
    """
    prime = geom.prime(prime_name)
    if not is_pseudo_effective(geom, zeta):
        raise DomainError("cone membership requires a pseudo-effective class")
    t = t if isinstance(t, Surd) else Surd(t)
    y = y if isinstance(y, Surd) else Surd(y)
    if y.sign() < 0:
        return False
    dec = decompose(geom, zeta)
    nu = dec.coefficient(prime_name)
    if t < nu:
        return False
    z_norm = zeta - prime.cls.scale(nu) if nu else zeta
    trace = _trace(geom, z_norm, prime)
    t_rel = t - nu
    if t_rel > trace.mu:
        return False
    lat = geom.lattice
    for seg in trace.segments:
        if t_rel >= seg.t_start and t_rel <= seg.t_end:
            c0, c1 = lat.pair(seg.base, prime.cls), lat.pair(seg.slope, prime.cls)
            return y <= Surd(c0) + t_rel * c1
    raise ConsistencyError("trace segments do not cover [0, mu]")  # unreachable


@dataclass(frozen=True)
class ConePoint:
    """A rational generator (class, t, y) of the polygon cone."""

    cls: DivClass
    t: Fraction
    y: Fraction


def _primitive_cone_point(cls: DivClass, t: Fraction, y: Fraction) -> ConePoint:
    vec = list(cls.coords) + [t, y]
    denom = 1
    for c in vec:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    ints = [int(c * denom) for c in vec]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g:
        vec = [Fraction(v, g) for v in ints]
    return ConePoint(DivClass(vec[:-2]), vec[-2], vec[-1])


def cone_generators(geom: Geometry, prime_name: str) -> tuple[ConePoint, ...]:
    """Rational generators of the polygon cone over the effective cone.

    For every extremal generator D_i of a chamber closure the points
    (D_i, 0, q(P(D_i), E)) and (D_i, 0, 0) are emitted, plus (E, 1, 0);
    duplicates collapse after primitive rescaling.
    """
    if geom.mode != "polyhedral":
        raise DomainError("cone generators require polyhedral mode")
    prime = geom.prime(prime_name)
    lat = geom.lattice
    rays: list[DivClass] = []
    for chamber in enumerate_chambers(geom):
        for ray in chamber_closure_rays(geom, chamber):
            if ray not in rays:
                rays.append(ray)
    points: list[ConePoint] = []
    for ray in rays:
        try:
            pos = decompose(geom, ray).positive
        except DomainError as exc:
            raise ConsistencyError(
                "chamber-closure ray is not pseudo-effective; catalog inconsistent"
            ) from exc
        height = lat.pair(pos, prime.cls)
        points.append(_primitive_cone_point(ray, Fraction(0), height))
        points.append(_primitive_cone_point(ray, Fraction(0), Fraction(0)))
    points.append(_primitive_cone_point(prime.cls, Fraction(1), Fraction(0)))
    uniq: list[ConePoint] = []
    for pt in points:
        if pt not in uniq:
            uniq.append(pt)
    uniq.sort(key=lambda p: (p.cls.coords, p.t, p.y))
    return tuple(uniq)


# ---------------------------------------------------------------------------
# synthetic simplex flag


def simplex_flag(geom: Geometry, d: DivClass) -> tuple[DivClass, NOPolygon]:
    """Synthetic integral flag E = k P(D) and its triangle polygon.

    With k clearing the denominators of P(D), the polygon of D along
    its own positive part is the triangle with legs 1/k and k q(P(D)),
    of area q(P(D))/2 -- a simplex witness that needs no catalog prime.
    """
    dec = decompose(geom, d)
    q = geom.lattice.square(dec.positive)
    if q <= 0:
        raise DomainError("simplex flag requires a big class")
    k = 1
    for c in dec.positive.coords:
        k = k * c.denominator // gcd(k, c.denominator)
    flag = dec.positive.scale(k)
    verts = convex_hull(
        [
            (Surd(0), Surd(0)),
            (Surd(Fraction(1, k)), Surd(0)),
            (Surd(0), Surd(k * q)),
        ]
    )
    poly = NOPolygon(tuple(verts), Fraction(0), Surd(Fraction(1, k)), None)
    return flag, poly
