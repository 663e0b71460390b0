"""Randomized structural self-checks over a geometry catalog.

Every identity asserted here is exact, so a check either holds on a
sample or the catalog/engine is wrong; there are no tolerances.  The
sampler draws big classes from the declared effective (or ample) cone
with a seeded generator, and each check reports how many samples it
ran against and which ones failed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from fractions import Fraction

from .errors import DomainError, IHSError
from .geometry import Geometry, format_divisor, is_pseudo_effective
from .lattice import DivClass
from .minkowski import chamber_generator, enumerate_chambers, minkowski_decompose
from .okounkov import (
    polygon,
    polygon_contains,
    polygon_minkowski_sum,
    polygon_scale,
)
from .polygon2d import contains_point, contains_polygon, translate
from .surd import Surd
from .zariski import chamber_positive_part, decompose, volume


@dataclass(frozen=True)
class CheckResult:
    name: str
    runs: int
    failed: int
    messages: tuple[str, ...]  # first few failure descriptions

    @property
    def passed(self) -> bool:
        return self.failed == 0

    @property
    def skipped(self) -> bool:
        return self.runs == 0


_MAX_MESSAGES = 5


class _Recorder:
    def __init__(self, name: str) -> None:
        self.name = name
        self.runs = 0
        self.failed = 0
        self.messages: list[str] = []

    def run(self, label: str, fn) -> None:
        self.runs += 1
        try:
            ok = fn()
        except IHSError as exc:
            ok = False
            label = f"{label}: {exc}"
        if not ok:
            self.failed += 1
            if len(self.messages) < _MAX_MESSAGES:
                self.messages.append(label)

    def result(self) -> CheckResult:
        return CheckResult(self.name, self.runs, self.failed, tuple(self.messages))


def sample_big_classes(geom: Geometry, count: int, seed: int = 0) -> list[DivClass]:
    """Deterministic sample of big classes inside the declared cone."""
    rng = random.Random(seed)
    lat = geom.lattice
    out: list[DivClass] = []
    if geom.mode == "polyhedral":
        gens = geom.effective_generators
        while len(out) < count:
            for _ in range(200):
                coeffs = [
                    Fraction(rng.randint(0, 6), rng.choice((1, 1, 1, 2)))
                    for _ in gens
                ]
                cand = DivClass([Fraction(0)] * lat.rank)
                for c, g in zip(coeffs, gens):
                    cand = cand + g.scale(c)
                if cand.is_zero:
                    continue
                if lat.square(decompose(geom, cand).positive) > 0:
                    out.append(cand)
                    break
            else:
                raise DomainError("could not sample a big class from the catalog")
    else:
        ample = geom.ample
        units = [
            DivClass([Fraction(1 if i == j else 0) for j in range(lat.rank)])
            for i in range(lat.rank)
        ]
        while len(out) < count:
            for _ in range(200):
                cand = ample.scale(rng.randint(1, 4))
                for u in units:
                    cand = cand + u.scale(rng.randint(-2, 2))
                if (
                    is_pseudo_effective(geom, cand)
                    and lat.square(cand) > 0
                    and lat.pair(cand, ample) > 0
                ):
                    out.append(cand)
                    break
            else:
                raise DomainError("could not sample a big class from the catalog")
    return out


def _fmt(geom: Geometry, d: DivClass) -> str:
    return format_divisor(geom, d)


def run_checks(geom: Geometry, samples: int = 100, seed: int = 0) -> tuple[CheckResult, ...]:
    """Run every structural check on `samples` seeded big classes."""
    lat = geom.lattice
    classes = sample_big_classes(geom, samples, seed)
    n = geom.lattice.half_dim
    c = geom.lattice.fujiki
    primes = geom.primes
    flag_pool = [p for p in primes if not p.exceptional] or list(primes)
    flag = flag_pool[0]

    area_id = _Recorder("polygon-area-identity")
    for d in classes:
        qp = lat.square(decompose(geom, d).positive)
        for p in primes:
            area_id.run(
                f"2*area != q(P) for D={_fmt(geom, d)}, E={p.name}",
                lambda d=d, p=p, qp=qp: polygon(geom, d, p.name).area * 2 == qp,
            )

    vol_chain = _Recorder("volume-chain")
    for d in classes:
        def chain(d=d) -> bool:
            qp = lat.square(decompose(geom, d).positive)
            v = volume(geom, d)
            a = polygon(geom, d, flag.name).area
            return a * 2 == qp and (a * 2) ** n * c == v and Surd(qp) ** n * c == v
        vol_chain.run(f"volume chain broke for D={_fmt(geom, d)}", chain)

    structure = _Recorder("breakpoint-structure")
    for d in classes:
        def struct(d=d) -> bool:
            tr = polygon(geom, d, flag.name).trace
            slopes = []
            for prev, nxt in zip(tr.segments, tr.segments[1:]):
                if not prev.chamber <= nxt.chamber:
                    return False
                if not isinstance(nxt.t_start, Fraction):
                    return False
            for seg in tr.segments:
                slopes.append(lat.pair(seg.slope, flag.cls))
            return all(a >= b for a, b in zip(slopes, slopes[1:]))
        structure.run(f"trace structure broke for D={_fmt(geom, d)}", struct)

    translation = _Recorder("flag-translation")
    for d in classes[: max(1, len(classes) // 2)]:
        for p in primes:
            def shift(d=d, p=p) -> bool:
                # The absolute polygon of D + E beyond t = 1 is exactly the
                # polygon of D shifted by (1, 0) (substitute t -> t - 1);
                # left of t = 1 it may grow, so equality is one-sided.
                base = polygon(geom, d, p.name)
                moved = polygon(geom, d + p.cls, p.name)
                if moved.nu + moved.mu != Surd(base.nu) + base.mu + 1:
                    return False
                shifted = translate(base.absolute_vertices(), 1, 0)
                if not contains_polygon(moved.absolute_vertices(), shifted):
                    return False
                if not all(
                    contains_point(shifted, v)
                    for v in moved.absolute_vertices()
                    if v[0] >= 1
                ):
                    return False
                if base.nu > 0:
                    # with E already in the negative support the whole
                    # normalized picture is unchanged
                    return (
                        moved.vertices == base.vertices
                        and moved.nu == base.nu + 1
                        and moved.mu == base.mu
                    )
                return True
            translation.run(
                f"translation by {p.name} broke for D={_fmt(geom, d)}", shift
            )

    superadd = _Recorder("polygon-superadditivity")
    logconc = _Recorder("volume-log-concavity")
    for d1, d2 in zip(classes, classes[1:]):
        def supa(d1=d1, d2=d2) -> bool:
            p1 = polygon(geom, d1, flag.name)
            p2 = polygon(geom, d2, flag.name)
            return polygon_contains(
                polygon(geom, d1 + d2, flag.name), polygon_minkowski_sum(p1, p2)
            )
        superadd.run(
            f"superadditivity broke for {_fmt(geom, d1)} and {_fmt(geom, d2)}", supa
        )

        def logc(d1=d1, d2=d2) -> bool:
            s1 = lat.square(decompose(geom, d1).positive)
            s2 = lat.square(decompose(geom, d2).positive)
            s12 = lat.square(decompose(geom, d1 + d2).positive)
            gap = s12 - s1 - s2
            return gap >= 0 and gap * gap >= 4 * s1 * s2
        logconc.run(
            f"log-concavity broke for {_fmt(geom, d1)} and {_fmt(geom, d2)}", logc
        )

    idem = _Recorder("zariski-idempotence")
    for d in classes:
        def idempotent(d=d) -> bool:
            pos = decompose(geom, d).positive
            again = decompose(geom, pos)
            if again.negative or again.positive != pos:
                return False
            return polygon(geom, pos, flag.name).vertices == polygon(
                geom, d, flag.name
            ).vertices
        idem.run(f"idempotence broke for D={_fmt(geom, d)}", idempotent)

    reorder = _Recorder("catalog-order-invariance")
    shuffled = replace(
        geom,
        primes=tuple(reversed(geom.primes)),
        effective_generators=tuple(reversed(geom.effective_generators)),
    )
    for d in classes[: max(1, len(classes) // 4)]:
        def invariant(d=d) -> bool:
            a, b = decompose(geom, d), decompose(shuffled, d)
            if a.positive != b.positive or dict(a.negative) != dict(b.negative):
                return False
            pa = polygon(geom, d, flag.name)
            pb = polygon(shuffled, d, flag.name)
            return pa.vertices == pb.vertices and pa.nu == pb.nu and pa.mu == pb.mu
        reorder.run(f"catalog order changed results for D={_fmt(geom, d)}", invariant)

    recon = _Recorder("minkowski-reconstruction")
    if geom.mode == "polyhedral":
        for i, d in enumerate(classes):
            def rebuild(d=d, full=(i < 5)) -> bool:
                mk = minkowski_decompose(geom, d, flag.name)
                pos = decompose(geom, d).positive
                if mk.reconstruct(lat.rank) != pos:
                    return False
                if any(coeff <= 0 for coeff, _ in mk.terms):
                    return False
                if not full:
                    return True
                total = polygon_scale(0, polygon(geom, d, flag.name))
                for coeff, element in mk.terms:
                    piece = polygon_scale(coeff, polygon(geom, element.cls, flag.name))
                    total = polygon_minkowski_sum(total, piece)
                return total.vertices == polygon(geom, d, flag.name).vertices
            try:
                recon.run(f"reconstruction broke for D={_fmt(geom, d)}", rebuild)
            except DomainError:
                continue

    walls = _Recorder("wall-continuity")
    if geom.mode == "polyhedral":
        chambers = enumerate_chambers(geom)
        chamber_set = set(chambers)
        for small in chambers:
            for q in geom.exceptional_primes:
                if q.name in small:
                    continue
                big_ch = small | {q.name}
                if big_ch not in chamber_set:
                    continue
                outside = [p for p in primes if p.name not in big_ch]
                if not outside:
                    continue
                def continuous(small=small, big_ch=big_ch, flag_name=outside[0].name) -> bool:
                    wall = chamber_generator(geom, frozenset(big_ch), flag_name)
                    for name in small:
                        wall = wall + geom.prime(name).cls
                    lo, _ = chamber_positive_part(geom, wall, small)
                    hi, _ = chamber_positive_part(geom, wall, big_ch)
                    return lo == hi
                walls.run(
                    f"wall between {sorted(small)} and {sorted(big_ch)} discontinuous",
                    continuous,
                )

    results = [
        area_id,
        vol_chain,
        structure,
        translation,
        superadd,
        logconc,
        idem,
        reorder,
        recon,
        walls,
    ]
    return tuple(r.result() for r in results)
