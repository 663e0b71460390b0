"""Minkowski bases on the movable cone.

A chamber is a negative-definite set S of exceptional prime classes;
the classes whose negative support is exactly S form the (possibly
empty) locus Sigma_S, and the closure of Sigma_S is spanned by the
extremal rays of Mov intersected with S-perp together with the primes
in S.  For a flag prime E the Minkowski basis collects one distinguished
generator per chamber not containing E -- the primitive class on the ray
of E + sum x_i E_i orthogonal to every E_i in S -- plus the isotropic
extremal rays of the movable cone.  Every big-and-movable class then
decomposes as a nonnegative rational combination of basis elements by
walking down the chambers, and the polygons add up along the way.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .errors import ConsistencyError, DomainError
from .geometry import Geometry
from .lattice import DivClass
from .linalg import solve
from .linprog import (
    InfeasibleError,
    UnboundedError,
    intersect_halfspace,
    intersect_hyperplane,
    max_step,
    prune_to_extremal,
)
from .zariski import decompose, null_set


def enumerate_chambers(geom: Geometry) -> tuple[frozenset[str], ...]:
    """All negative-definite subsets of the exceptional primes.

    The empty set (the movable chamber) always comes first; the rest
    follow by size and then by name, so the order is reproducible.
    """
    exceptional = geom.exceptional_primes
    found: list[frozenset[str]] = [frozenset()]
    for size in range(1, len(exceptional) + 1):
        for combo in combinations(exceptional, size):
            classes = [p.cls for p in combo]
            if geom.lattice.is_negative_definite(classes):
                found.append(frozenset(p.name for p in combo))
    found.sort(key=lambda s: (len(s), tuple(sorted(s))))
    return tuple(found)


def chamber_generator(geom: Geometry, chamber: frozenset[str], flag_name: str) -> DivClass:
    """Primitive generator of the ray of the flag pushed into S-perp.

    Solves pair(E + sum x_i E_i, E_j) = 0 for all E_j in S; the x_i
    must come out nonnegative or the catalog is contradictory.
    """
    flag = geom.prime(flag_name)
    if flag.name in chamber:
        raise DomainError("flag prime cannot lie in the chamber it generates against")
    if not chamber:
        return flag.cls.primitive()
    primes = [geom.prime(name) for name in sorted(chamber)]
    lat = geom.lattice
    gram = lat.sub_gram([p.cls for p in primes])
    rhs = [-lat.pair(flag.cls, p.cls) for p in primes]
    xs = solve(gram, rhs)
    if any(x < 0 for x in xs):
        raise ConsistencyError(
            "chamber generator acquired a negative correction coefficient"
        )
    result = flag.cls
    for x, p in zip(xs, primes):
        result = result + p.cls.scale(x)
    return result.primitive()


def _prime_functional(geom: Geometry, cls: DivClass) -> tuple[Fraction, ...]:
    """Row vector v -> pair(v, cls) in coordinates."""
    gram = geom.lattice.gram
    n = geom.lattice.rank
    return tuple(
        sum(gram[i][j] * cls.coords[j] for j in range(n)) for i in range(n)
    )


def movable_cone_rays(geom: Geometry) -> tuple[DivClass, ...]:
    """Extremal rays of Mov = Eff cut by pair(-, Q) >= 0 for all primes Q."""
    if geom.mode != "polyhedral":
        raise DomainError("movable cone rays require polyhedral mode")
    rays = [g.coords for g in geom.effective_generators]
    for prime in geom.primes:
        rays = intersect_halfspace(rays, _prime_functional(geom, prime.cls))
    rays = prune_to_extremal(rays)
    return tuple(DivClass(r) for r in rays)


def isotropic_extremal_rays(geom: Geometry) -> tuple[DivClass, ...]:
    """The movable extremal rays sitting on the isotropic boundary q = 0."""
    lat = geom.lattice
    return tuple(r for r in movable_cone_rays(geom) if lat.square(r) == 0)


def chamber_closure_rays(geom: Geometry, chamber: frozenset[str]) -> tuple[DivClass, ...]:
    """Extremal rays of the closure of Sigma_S.

    The closure is spanned by Mov intersected with S-perp plus the
    prime classes of S itself.
    """
    rays = [r.coords for r in movable_cone_rays(geom)]
    for name in sorted(chamber):
        rays = intersect_hyperplane(rays, _prime_functional(geom, geom.prime(name).cls))
    rays += [geom.prime(name).cls.coords for name in sorted(chamber)]
    rays = prune_to_extremal(rays)
    return tuple(DivClass(r) for r in rays)


@dataclass(frozen=True)
class BasisElement:
    """One Minkowski basis member with its provenance."""

    cls: DivClass
    origin: str  # "chamber" or "isotropic"
    chamber: Optional[frozenset[str]] = None


def minkowski_basis(geom: Geometry, flag_name: str) -> tuple[BasisElement, ...]:
    """The Minkowski basis of the flag prime: one generator per chamber
    not containing the flag, then the isotropic extremal rays.

    Coinciding classes are listed once, keeping the first provenance.
    """
    if geom.mode != "polyhedral":
        raise DomainError("minkowski basis requires polyhedral mode")
    flag = geom.prime(flag_name)
    elements: list[BasisElement] = []
    seen: list[DivClass] = []
    for chamber in enumerate_chambers(geom):
        if flag.name in chamber:
            continue
        cls = chamber_generator(geom, chamber, flag_name)
        if cls not in seen:
            seen.append(cls)
            elements.append(BasisElement(cls, "chamber", chamber))
    for ray in isotropic_extremal_rays(geom):
        if ray not in seen:
            seen.append(ray)
            elements.append(BasisElement(ray, "isotropic", None))
    return tuple(elements)


@dataclass(frozen=True)
class MinkowskiDecomposition:
    """P(D) = sum of coefficient * element.cls, plus the flag offset nu."""

    terms: tuple[tuple[Fraction, BasisElement], ...]
    nu: Fraction

    def reconstruct(self, rank: int) -> DivClass:
        total = DivClass([Fraction(0)] * rank)
        for coeff, element in self.terms:
            total = total + element.cls.scale(coeff)
        return total


def _match_isotropic(geom: Geometry, m: DivClass) -> tuple[Fraction, BasisElement]:
    for ray in isotropic_extremal_rays(geom):
        ratio: Optional[Fraction] = None
        for mc, rc in zip(m.coords, ray.coords):
            if rc:
                ratio = mc / rc
                break
        if ratio is None or ratio <= 0:
            continue
        if ray.scale(ratio) == m:
            return ratio, BasisElement(ray, "isotropic", None)
    raise ConsistencyError(
        "isotropic movable class is not a multiple of any listed extremal ray"
    )


def minkowski_decompose(geom: Geometry, d: DivClass, flag_name: str) -> MinkowskiDecomposition:
    """Decompose P(D) over the Minkowski basis of the flag prime.

    Each round subtracts as much of the current chamber's generator as
    the movable cone allows; the leftover lands on a wall and the walk
    repeats until zero or an isotropic ray remains.
    """
    if geom.mode != "polyhedral":
        raise DomainError("minkowski decomposition requires polyhedral mode")
    flag = geom.prime(flag_name)
    dec = decompose(geom, d)  # DomainError when not pseudo-effective
    nu = dec.coefficient(flag_name)
    lat = geom.lattice
    eff_cols = [g.coords for g in geom.effective_generators]
    m = dec.positive
    terms: list[tuple[Fraction, BasisElement]] = []
    for _ in range(2 * (len(geom.primes) + lat.rank) + 4):
        if m.is_zero:
            return MinkowskiDecomposition(tuple(terms), nu)
        if lat.square(m) == 0:
            terms.append(_match_isotropic(geom, m))
            return MinkowskiDecomposition(tuple(terms), nu)
        sigma = frozenset(null_set(geom, m))
        if flag.name in sigma:
            raise DomainError(
                "flag prime is orthogonal to the positive part; "
                "no chamber generator exists for it"
            )
        gen = chamber_generator(geom, sigma, flag_name)
        tau: Optional[Fraction] = None
        for prime in geom.primes:
            down = lat.pair(gen, prime.cls)
            if down > 0:
                bound = lat.pair(m, prime.cls) / down
                if tau is None or bound < tau:
                    tau = bound
        try:
            eff_bound = max_step(eff_cols, gen.coords, m.coords)
            if tau is None or eff_bound < tau:
                tau = eff_bound
        except UnboundedError:
            pass
        except InfeasibleError as exc:
            raise ConsistencyError(
                "movable class left the declared effective cone"
            ) from exc
        if tau is None:
            raise ConsistencyError("no wall bounds the chamber generator direction")
        if tau <= 0:
            raise ConsistencyError(
                "chamber generator cannot be subtracted; catalog inconsistent"
            )
        terms.append((tau, BasisElement(gen, "chamber", sigma)))
        m = m - gen.scale(tau)
    raise ConsistencyError("minkowski decomposition exceeded the iteration cap")
