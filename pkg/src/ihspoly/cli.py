"""Command-line interface.

Every subcommand takes the geometry catalog path first, then its own
arguments; divisor classes are written in basis/prime names, e.g.
"3*H - 2*d" or "H + E".  Exit codes: 0 success, 2 unreadable input
(file, JSON, or divisor expression), 3 request outside the domain of
the operation or a contradictory catalog, 4 self-checks ran and failed.

With --format machine the result is a single JSON object on stdout
(errors included, as {"status": "error", ...}); the payload carries no
timing or environment fields, so reruns on the same input are
byte-identical.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import report
from .checks import run_checks
from .errors import ConsistencyError, DomainError, GeometryError
from .geometry import Geometry, load_geometry, parse_divisor
from .minkowski import (
    chamber_closure_rays,
    enumerate_chambers,
    minkowski_basis,
    minkowski_decompose,
)
from .okounkov import cone_generators, polygon
from .zariski import decompose, restricted_volume, volume

_PARSE, _DOMAIN, _CHECKS = 2, 3, 4


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("text", "machine"),
        default="text",
        help="output style: human text (default) or deterministic JSON",
    )
    parser = argparse.ArgumentParser(
        prog="ihspoly",
        description="Exact Zariski chambers, polygons, and Minkowski bases "
        "for irreducible holomorphic symplectic geometries.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text, parents=[common])
        p.add_argument("geometry", help="path to a geometry catalog (JSON)")
        return p

    p = add("decompose", "divisorial Zariski decomposition of a class")
    p.add_argument("divisor", help='class expression, e.g. "3*H - E"')

    p = add("polygon", "polygon of a class along a flag prime")
    p.add_argument("divisor")
    p.add_argument("prime", help="flag prime name")
    p.add_argument("--svg", metavar="PATH", help="also write an SVG rendering")

    p = add("volume", "volume via the Fujiki relation on the positive part")
    p.add_argument("divisor")

    p = add("restricted-volume", "restricted volume along a prime divisor")
    p.add_argument("divisor")
    p.add_argument("prime")

    p = add("minkowski", "decompose the positive part over a Minkowski basis")
    p.add_argument("divisor")
    p.add_argument("prime", help="flag prime name")

    p = add("minkowski-basis", "list the Minkowski basis of a flag prime")
    p.add_argument("prime", help="flag prime name")

    add("chambers", "list the Zariski chambers and their closures")

    p = add("cone-generators", "rational generators of the global polygon cone")
    p.add_argument("prime", help="flag prime name")

    p = add("check", "run randomized structural self-checks")
    p.add_argument("--samples", type=int, default=100, help="big classes to sample")
    p.add_argument("--seed", type=int, default=0, help="sampler seed")
    return parser


def _emit(args: argparse.Namespace, text: str, payload: dict) -> None:
    if args.format == "machine":
        print(report.machine_ok(args.command, payload))
    else:
        print(text)


def _cmd_decompose(geom: Geometry, args: argparse.Namespace) -> int:
    d = parse_divisor(geom, args.divisor)
    dec = decompose(geom, d)
    _emit(
        args,
        report.decomposition_text(geom, d, dec),
        report.decomposition_json(geom, d, dec),
    )
    return 0


def _cmd_polygon(geom: Geometry, args: argparse.Namespace) -> int:
    d = parse_divisor(geom, args.divisor)
    poly = polygon(geom, d, args.prime)
    text = report.polygon_text(geom, d, args.prime, poly)
    payload = report.polygon_json(geom, d, args.prime, poly)
    if args.svg:
        Path(args.svg).write_text(report.polygon_svg(geom, d, args.prime, poly))
        text += f"\nsvg             {args.svg}"
        payload["svg"] = args.svg
    _emit(args, text, payload)
    return 0


def _cmd_volume(geom: Geometry, args: argparse.Namespace) -> int:
    d = parse_divisor(geom, args.divisor)
    value = volume(geom, d)
    q = geom.lattice.square(decompose(geom, d).positive)
    _emit(
        args,
        report.volume_text(geom, d, value, q),
        report.volume_json(geom, d, value, q),
    )
    return 0


def _cmd_restricted_volume(geom: Geometry, args: argparse.Namespace) -> int:
    d = parse_divisor(geom, args.divisor)
    value = restricted_volume(geom, d, args.prime)
    _emit(
        args,
        report.restricted_volume_text(geom, d, args.prime, value),
        report.restricted_volume_json(geom, d, args.prime, value),
    )
    return 0


def _cmd_minkowski(geom: Geometry, args: argparse.Namespace) -> int:
    d = parse_divisor(geom, args.divisor)
    mk = minkowski_decompose(geom, d, args.prime)
    _emit(
        args,
        report.minkowski_text(geom, d, args.prime, mk),
        report.minkowski_json(geom, d, args.prime, mk),
    )
    return 0


def _cmd_minkowski_basis(geom: Geometry, args: argparse.Namespace) -> int:
    basis = minkowski_basis(geom, args.prime)
    _emit(
        args,
        report.basis_text(geom, args.prime, basis),
        report.basis_json(geom, args.prime, basis),
    )
    return 0


def _cmd_chambers(geom: Geometry, args: argparse.Namespace) -> int:
    chambers = enumerate_chambers(geom)
    closures = None
    if geom.mode == "polyhedral":
        closures = {c: chamber_closure_rays(geom, c) for c in chambers}
    _emit(
        args,
        report.chambers_text(geom, chambers, closures),
        report.chambers_json(geom, chambers, closures),
    )
    return 0


def _cmd_cone_generators(geom: Geometry, args: argparse.Namespace) -> int:
    points = cone_generators(geom, args.prime)
    _emit(
        args,
        report.cone_text(geom, args.prime, points),
        report.cone_json(geom, args.prime, points),
    )
    return 0


def _cmd_check(geom: Geometry, args: argparse.Namespace) -> int:
    if args.samples < 1:
        raise DomainError("--samples must be at least 1")
    started = time.perf_counter()
    results = run_checks(geom, samples=args.samples, seed=args.seed)
    elapsed = time.perf_counter() - started
    _emit(
        args,
        report.checks_text(geom, results, elapsed),
        report.checks_json(geom, results),
    )
    return 0 if all(r.passed for r in results) else _CHECKS


_HANDLERS = {
    "decompose": _cmd_decompose,
    "polygon": _cmd_polygon,
    "volume": _cmd_volume,
    "restricted-volume": _cmd_restricted_volume,
    "minkowski": _cmd_minkowski,
    "minkowski-basis": _cmd_minkowski_basis,
    "chambers": _cmd_chambers,
    "cone-generators": _cmd_cone_generators,
    "check": _cmd_check,
}


def _fail(args: argparse.Namespace, code: int, message: str) -> int:
    if getattr(args, "format", "text") == "machine":
        print(report.machine_error(code, message))
    else:
        print(f"error: {message}", file=sys.stderr)
    return code


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        geom = load_geometry(args.geometry)
    except OSError as exc:
        return _fail(args, _PARSE, f"cannot read geometry: {exc}")
    except GeometryError as exc:
        return _fail(args, _PARSE, str(exc))
    try:
        return _HANDLERS[args.command](geom, args)
    except GeometryError as exc:
        return _fail(args, _PARSE, str(exc))
    except DomainError as exc:
        return _fail(args, _DOMAIN, str(exc))
    except ConsistencyError as exc:
        return _fail(args, _DOMAIN, str(exc))
    except OSError as exc:
        return _fail(args, _PARSE, str(exc))


if __name__ == "__main__":
    sys.exit(main())
