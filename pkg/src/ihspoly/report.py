"""Rendering of results as text blocks, machine JSON, and SVG.

Text output is for reading; the machine format is a stable JSON object
whose fields never depend on wall-clock state (timings stay text-only),
so byte-identical inputs give byte-identical payloads.  Rationals are
serialized as strings ("-3/2"), quadratic irrationals as objects
carrying both the exact (a, b, d) triple of a + b*sqrt(d) and a display
string; the float field is advisory.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .checks import CheckResult
from .geometry import Geometry, format_divisor, format_rat
from .lattice import DivClass
from .minkowski import BasisElement, MinkowskiDecomposition
from .okounkov import BreakpointTrace, ConePoint, NOPolygon
from .surd import Surd
from .zariski import ZariskiDecomposition


def surd_text(value: Surd) -> str:
    if value.is_rational:
        return str(value)
    return f"{value} (~{float(value):.6g})"


def surd_json(value: Surd) -> dict:
    return {
        "display": str(value),
        "a": format_rat(value.a),
        "b": format_rat(value.b),
        "d": value.d,
        "float": float(value),
    }


def _point_text(pt: tuple[Surd, Surd]) -> str:
    return f"({pt[0]}, {pt[1]})"


def _point_json(pt: tuple[Surd, Surd]) -> dict:
    return {"t": surd_json(pt[0]), "y": surd_json(pt[1])}


def divisor_json(geom: Geometry, d: DivClass) -> dict:
    return {
        "coords": [format_rat(c) for c in d.coords],
        "display": format_divisor(geom, d),
    }


# ---------------------------------------------------------------------------
# Zariski decomposition


def decomposition_text(geom: Geometry, d: DivClass, dec: ZariskiDecomposition) -> str:
    lat = geom.lattice
    lines = [
        f"geometry        {geom.name}",
        f"class           {format_divisor(geom, d)}",
        f"positive part   {format_divisor(geom, dec.positive)}",
    ]
    if dec.negative:
        for name, coeff in dec.negative:
            lines.append(f"negative part   {format_rat(coeff)} * {name}")
    else:
        lines.append("negative part   0")
    q = lat.square(dec.positive)
    lines.append(f"q(P)            {format_rat(q)}")
    lines.append(f"big             {'yes' if q > 0 else 'no'}")
    return "\n".join(lines)


def decomposition_json(geom: Geometry, d: DivClass, dec: ZariskiDecomposition) -> dict:
    lat = geom.lattice
    return {
        "geometry": geom.name,
        "class": divisor_json(geom, d),
        "positive": divisor_json(geom, dec.positive),
        "negative": [
            {"prime": name, "coefficient": format_rat(coeff)}
            for name, coeff in dec.negative
        ],
        "q_positive": format_rat(lat.square(dec.positive)),
        "big": lat.square(dec.positive) > 0,
    }


# ---------------------------------------------------------------------------
# polygons


def _trace_rows(geom: Geometry, trace: BreakpointTrace) -> list[dict]:
    rows = []
    for seg in trace.segments:
        rows.append(
            {
                "t_start": format_rat(seg.t_start),
                "t_end": surd_json(seg.t_end),
                "chamber": sorted(seg.chamber),
                "base": divisor_json(geom, seg.base),
                "slope": divisor_json(geom, seg.slope),
            }
        )
    return rows


def polygon_text(
    geom: Geometry, d: DivClass, prime_name: str, poly: NOPolygon
) -> str:
    lines = [
        f"geometry        {geom.name}",
        f"class           {format_divisor(geom, d)}",
        f"flag prime      {prime_name}",
        f"nu              {format_rat(poly.nu)}",
        f"mu              {surd_text(poly.mu)}",
        f"area            {surd_text(poly.area)}",
        "vertices        " + "  ".join(_point_text(p) for p in poly.vertices),
    ]
    trace = poly.trace
    if trace is not None:
        if trace.interior_breakpoints:
            bps = ", ".join(format_rat(b) for b in trace.interior_breakpoints)
            lines.append(f"breakpoints     {bps}")
        else:
            lines.append("breakpoints     none")
        for seg in trace.segments:
            chamber = "{" + ", ".join(sorted(seg.chamber)) + "}"
            lines.append(
                f"  [{format_rat(seg.t_start)}, {seg.t_end}] chamber {chamber}: "
                f"P = {format_divisor(geom, seg.base)}"
                f" + t * ({format_divisor(geom, seg.slope)})"
            )
    return "\n".join(lines)


def polygon_json(
    geom: Geometry, d: DivClass, prime_name: str, poly: NOPolygon
) -> dict:
    payload = {
        "geometry": geom.name,
        "class": divisor_json(geom, d),
        "flag": prime_name,
        "nu": format_rat(poly.nu),
        "mu": surd_json(poly.mu),
        "area": surd_json(poly.area),
        "vertices": [_point_json(p) for p in poly.vertices],
    }
    if poly.trace is not None:
        payload["breakpoints"] = [
            format_rat(b) for b in poly.trace.interior_breakpoints
        ]
        payload["segments"] = _trace_rows(geom, poly.trace)
    return payload


# ---------------------------------------------------------------------------
# volumes


def volume_text(geom: Geometry, d: DivClass, value: Fraction, q: Fraction) -> str:
    return "\n".join(
        [
            f"geometry        {geom.name}",
            f"class           {format_divisor(geom, d)}",
            f"q(P)            {format_rat(q)}",
            f"volume          {format_rat(value)}",
        ]
    )


def volume_json(geom: Geometry, d: DivClass, value: Fraction, q: Fraction) -> dict:
    return {
        "geometry": geom.name,
        "class": divisor_json(geom, d),
        "q_positive": format_rat(q),
        "volume": format_rat(value),
    }


def restricted_volume_text(
    geom: Geometry, d: DivClass, prime_name: str, value: Fraction
) -> str:
    return "\n".join(
        [
            f"geometry        {geom.name}",
            f"class           {format_divisor(geom, d)}",
            f"prime           {prime_name}",
            f"restricted vol  {format_rat(value)}",
        ]
    )


def restricted_volume_json(
    geom: Geometry, d: DivClass, prime_name: str, value: Fraction
) -> dict:
    return {
        "geometry": geom.name,
        "class": divisor_json(geom, d),
        "prime": prime_name,
        "restricted_volume": format_rat(value),
    }


# ---------------------------------------------------------------------------
# Minkowski bases and decompositions


def _element_label(element: BasisElement) -> str:
    if element.origin == "chamber":
        names = ", ".join(sorted(element.chamber or ()))
        return f"chamber {{{names}}}"
    return "isotropic ray"


def basis_text(geom: Geometry, flag_name: str, basis: Sequence[BasisElement]) -> str:
    lines = [
        f"geometry        {geom.name}",
        f"flag prime      {flag_name}",
        f"basis size      {len(basis)}",
    ]
    for element in basis:
        lines.append(
            f"  {format_divisor(geom, element.cls):<24} [{_element_label(element)}]"
        )
    return "\n".join(lines)


def basis_json(geom: Geometry, flag_name: str, basis: Sequence[BasisElement]) -> dict:
    return {
        "geometry": geom.name,
        "flag": flag_name,
        "elements": [
            {
                "class": divisor_json(geom, element.cls),
                "origin": element.origin,
                "chamber": sorted(element.chamber) if element.chamber is not None else None,
            }
            for element in basis
        ],
    }


def minkowski_text(
    geom: Geometry, d: DivClass, flag_name: str, mk: MinkowskiDecomposition
) -> str:
    lines = [
        f"geometry        {geom.name}",
        f"class           {format_divisor(geom, d)}",
        f"flag prime      {flag_name}",
        f"nu              {format_rat(mk.nu)}",
    ]
    if mk.terms:
        for coeff, element in mk.terms:
            lines.append(
                f"  {format_rat(coeff)} * ({format_divisor(geom, element.cls)})"
                f"  [{_element_label(element)}]"
            )
    else:
        lines.append("  positive part is zero")
    return "\n".join(lines)


def minkowski_json(
    geom: Geometry, d: DivClass, flag_name: str, mk: MinkowskiDecomposition
) -> dict:
    return {
        "geometry": geom.name,
        "class": divisor_json(geom, d),
        "flag": flag_name,
        "nu": format_rat(mk.nu),
        "terms": [
            {
                "coefficient": format_rat(coeff),
                "class": divisor_json(geom, element.cls),
                "origin": element.origin,
                "chamber": sorted(element.chamber) if element.chamber is not None else None,
            }
            for coeff, element in mk.terms
        ],
    }


# ---------------------------------------------------------------------------
# chambers and cone generators


def chambers_text(
    geom: Geometry,
    chambers: Sequence[frozenset[str]],
    closures: Optional[dict[frozenset[str], tuple[DivClass, ...]]],
) -> str:
    lines = [f"geometry        {geom.name}", f"chambers        {len(chambers)}"]
    for chamber in chambers:
        names = "{" + ", ".join(sorted(chamber)) + "}"
        lines.append(f"  {names}")
        if closures is not None:
            rays = "  ".join(format_divisor(geom, r) for r in closures[chamber])
            lines.append(f"    closure rays: {rays}")
    return "\n".join(lines)


def chambers_json(
    geom: Geometry,
    chambers: Sequence[frozenset[str]],
    closures: Optional[dict[frozenset[str], tuple[DivClass, ...]]],
) -> dict:
    rows = []
    for chamber in chambers:
        row: dict = {"primes": sorted(chamber)}
        if closures is not None:
            row["closure_rays"] = [divisor_json(geom, r) for r in closures[chamber]]
        rows.append(row)
    return {"geometry": geom.name, "chambers": rows}


def cone_text(geom: Geometry, prime_name: str, points: Sequence[ConePoint]) -> str:
    lines = [
        f"geometry        {geom.name}",
        f"flag prime      {prime_name}",
        f"generators      {len(points)}",
    ]
    for pt in points:
        lines.append(
            f"  ({format_divisor(geom, pt.cls)};"
            f" t={format_rat(pt.t)}, y={format_rat(pt.y)})"
        )
    return "\n".join(lines)


def cone_json(geom: Geometry, prime_name: str, points: Sequence[ConePoint]) -> dict:
    return {
        "geometry": geom.name,
        "flag": prime_name,
        "generators": [
            {
                "class": divisor_json(geom, pt.cls),
                "t": format_rat(pt.t),
                "y": format_rat(pt.y),
            }
            for pt in points
        ],
    }


# ---------------------------------------------------------------------------
# checks


def checks_text(
    geom: Geometry, results: Sequence[CheckResult], elapsed: float
) -> str:
    lines = [f"geometry        {geom.name}"]
    for r in results:
        if r.skipped:
            status = "SKIP"
        elif r.passed:
            status = "PASS"
        else:
            status = "FAIL"
        lines.append(f"{status:<6} {r.name:<28} {r.runs} run(s), {r.failed} failed")
        for msg in r.messages:
            lines.append(f"       - {msg}")
    total_failed = sum(r.failed for r in results)
    verdict = "all checks passed" if total_failed == 0 else f"{total_failed} failure(s)"
    lines.append(f"result          {verdict} in {elapsed:.2f}s")
    return "\n".join(lines)


def checks_json(geom: Geometry, results: Sequence[CheckResult]) -> dict:
    return {
        "geometry": geom.name,
        "checks": [
            {
                "name": r.name,
                "runs": r.runs,
                "failed": r.failed,
                "messages": list(r.messages),
            }
            for r in results
        ],
        "passed": all(r.passed for r in results),
    }


# ---------------------------------------------------------------------------
# machine envelope


def machine_ok(command: str, payload: dict) -> str:
    body = {"status": "ok", "command": command}
    body.update(payload)
    return json.dumps(body, indent=2, ensure_ascii=False)


def machine_error(code: int, message: str) -> str:
    return json.dumps(
        {"status": "error", "code": code, "message": message},
        indent=2,
        ensure_ascii=False,
    )


# ---------------------------------------------------------------------------
# SVG


def _bounds(points: Iterable[tuple[float, float]]) -> tuple[float, float, float, float]:
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    return min(xs), min(ys), max(xs), max(ys)


def polygon_svg(geom: Geometry, d: DivClass, prime_name: str, poly: NOPolygon) -> str:
    """Standalone SVG of the polygon; vertex tooltips carry exact coordinates."""
    pts = [(float(x), float(y)) for x, y in poly.vertices]
    if len(pts) == 1:
        pts = pts * 2
    x0, y0, x1, y1 = _bounds(pts)
    w = max(x1 - x0, 1e-9)
    h = max(y1 - y0, 1e-9)
    span = max(w, h)
    scale = 360.0 / span
    pad = 40.0

    def sx(x: float) -> float:
        return pad + (x - x0) * scale

    def sy(y: float) -> float:
        return pad + (y1 - y) * scale

    width = pad * 2 + w * scale
    height = pad * 2 + h * scale
    path = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in pts)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}"'
        f' height="{height:.0f}" viewBox="0 0 {width:.2f} {height:.2f}">',
        f"  <!-- polygon of {format_divisor(geom, d)} along {prime_name}"
        f" on {geom.name} -->",
        f'  <line x1="{sx(x0):.2f}" y1="{sy(0.0):.2f}" x2="{sx(x1):.2f}"'
        f' y2="{sy(0.0):.2f}" stroke="#999" stroke-width="1"/>',
        f'  <line x1="{sx(0.0):.2f}" y1="{sy(y0):.2f}" x2="{sx(0.0):.2f}"'
        f' y2="{sy(y1):.2f}" stroke="#999" stroke-width="1"/>',
        f'  <polygon points="{path}" fill="#7aa6c2" fill-opacity="0.45"'
        f' stroke="#144a6b" stroke-width="2"/>',
    ]
    for (x, y), exact in zip(pts, poly.vertices):
        out.append(
            f'  <circle cx="{sx(x):.2f}" cy="{sy(y):.2f}" r="4" fill="#144a6b">'
            f"<title>({exact[0]}, {exact[1]})</title></circle>"
        )
    out.append(
        f'  <text x="{pad:.0f}" y="{height - 10:.0f}" font-family="monospace"'
        f' font-size="12">nu = {format_rat(poly.nu)}, mu = {poly.mu},'
        f" area = {poly.area}</text>"
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"
