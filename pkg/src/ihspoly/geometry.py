"""Geometry documents: a Picard lattice plus a declared prime catalog.

A geometry is the desk-scale stand-in for a projective irreducible
holomorphic symplectic manifold: the BBF lattice, a finite catalog of
prime divisor classes (flagged exceptional exactly when their BBF
square is negative), and a description of the pseudo-effective cone.
Two modes exist:

* ``polyhedral`` -- Eff is the cone generated by finitely many declared
  effective classes; membership questions become exact rational LPs.
* ``round`` -- Eff is the half of {q >= 0} containing a declared ample
  class; membership questions become sign conditions on q.

Everything downstream is correct relative to this declared data: a
truncated catalog (actual manifolds may carry infinitely many prime
exceptional divisors) yields the truncation's decompositions.

The document format is JSON with every rational encoded exactly
(integer or "p/q" string); floats are rejected.  Serialization
round-trips bit-for-bit.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .errors import DomainError, GeometryError
from .lattice import BBFLattice, DivClass
from .linprog import nonneg_combination

_NAME_RE = re.compile(r"^[^\W\d][\w'′]*$")
_NUMBER_RE = re.compile(r"^-?\d+(/\d+)?$")

_TOP_FIELDS_POLY = {"name", "half_dim", "fujiki", "basis", "gram", "mode",
                    "primes", "effective_generators"}
_TOP_FIELDS_ROUND = {"name", "half_dim", "fujiki", "basis", "gram", "mode",
                     "primes", "ample"}


@dataclass(frozen=True)
class Prime:
    """A declared prime divisor: name, class, exceptionality flag."""

    name: str
    cls: DivClass
    exceptional: bool


@dataclass(frozen=True)
class Geometry:
    name: str
    lattice: BBFLattice
    basis: tuple[str, ...]
    primes: tuple[Prime, ...]
    mode: str
    effective_generators: tuple[DivClass, ...] = ()
    ample: Optional[DivClass] = None
    _by_name: dict = field(init=False, compare=False, repr=False, default_factory=dict)

    def __post_init__(self):
        by_name = {p.name: p for p in self.primes}
        object.__setattr__(self, "_by_name", by_name)

    @property
    def rank(self) -> int:
        return self.lattice.rank

    @property
    def exceptional_primes(self) -> tuple[Prime, ...]:
        return tuple(p for p in self.primes if p.exceptional)

    def prime(self, name: str) -> Prime:
        try:
            return self._by_name[name]
        except KeyError:
            raise DomainError(f"unknown prime divisor {name!r}") from None

    def zero(self) -> DivClass:
        return DivClass([0] * self.rank)


# ---------------------------------------------------------------------------
# rationals and names


def _parse_rat(value, where: str) -> Fraction:
    if isinstance(value, bool):
        raise GeometryError(f"{where}: booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if not _NUMBER_RE.match(value.strip()):
            raise GeometryError(f"{where}: {value!r} is not an exact rational")
        return Fraction(value.strip())
    if isinstance(value, float):
        raise GeometryError(f"{where}: floats are forbidden; write 'p/q'")
    raise GeometryError(f"{where}: expected a rational, got {type(value).__name__}")


def format_rat(x: Fraction) -> str:
    return str(x)


def _parse_vector(value, rank: int, where: str) -> DivClass:
    if not isinstance(value, list) or len(value) != rank:
        raise GeometryError(f"{where}: expected a vector of length {rank}")
    return DivClass(_parse_rat(v, f"{where}[{i}]") for i, v in enumerate(value))


def _check_name(name, where: str) -> str:
    if not isinstance(name, str) or not _NAME_RE.match(name):
        raise GeometryError(f"{where}: invalid name {name!r}")
    return name


# ---------------------------------------------------------------------------
# geometry documents


def parse_geometry(text: str) -> Geometry:
    """Parse and validate a geometry document from JSON text."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GeometryError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise GeometryError("geometry document must be a JSON object")

    mode = doc.get("mode")
    if mode not in ("polyhedral", "round"):
        raise GeometryError("mode must be 'polyhedral' or 'round'")
    allowed = _TOP_FIELDS_POLY if mode == "polyhedral" else _TOP_FIELDS_ROUND
    extra = set(doc) - allowed
    if extra:
        raise GeometryError(f"unexpected fields for {mode} mode: {sorted(extra)}")
    missing = allowed - set(doc)
    if missing:
        raise GeometryError(f"missing fields: {sorted(missing)}")

    name = doc["name"]
    if not isinstance(name, str) or not name:
        raise GeometryError("name must be a nonempty string")
    if not isinstance(doc["half_dim"], int) or isinstance(doc["half_dim"], bool) or doc["half_dim"] < 1:
        raise GeometryError("half_dim must be a positive integer")
    fujiki = _parse_rat(doc["fujiki"], "fujiki")
    if fujiki <= 0:
        raise GeometryError("fujiki must be positive")

    basis = doc["basis"]
    if not isinstance(basis, list) or not basis:
        raise GeometryError("basis must be a nonempty list of names")
    basis = tuple(_check_name(b, "basis") for b in basis)
    rank = len(basis)
    if len(set(basis)) != rank:
        raise GeometryError("duplicate basis names")

    gram_rows = doc["gram"]
    if not isinstance(gram_rows, list) or len(gram_rows) != rank:
        raise GeometryError(f"gram must be a {rank}x{rank} matrix")
    gram = []
    for i, row in enumerate(gram_rows):
        if not isinstance(row, list) or len(row) != rank:
            raise GeometryError(f"gram must be a {rank}x{rank} matrix")
        gram.append([_parse_rat(v, f"gram[{i}][{j}]") for j, v in enumerate(row)])
    try:
        lattice = BBFLattice(gram, fujiki, doc["half_dim"])
    except ValueError as exc:
        raise GeometryError(str(exc)) from exc

    primes_doc = doc["primes"]
    if not isinstance(primes_doc, list):
        raise GeometryError("primes must be a list")
    primes = []
    seen = set(basis)
    for k, entry in enumerate(primes_doc):
        where = f"primes[{k}]"
        if not isinstance(entry, dict) or set(entry) != {"name", "class", "exceptional"}:
            raise GeometryError(f"{where}: expected fields name/class/exceptional")
        pname = _check_name(entry["name"], where)
        if pname in seen:
            raise GeometryError(f"{where}: duplicate name {pname!r}")
        seen.add(pname)
        cls = _parse_vector(entry["class"], rank, f"{where}.class")
        if cls.is_zero:
            raise GeometryError(f"{where}: prime class must be nonzero")
        if not isinstance(entry["exceptional"], bool):
            raise GeometryError(f"{where}: exceptional must be a boolean")
        square = lattice.square(cls)
        if entry["exceptional"] != (square < 0):
            raise GeometryError(
                f"{where}: exceptional flag is {entry['exceptional']} but q = {square}"
            )
        primes.append(Prime(pname, cls, entry["exceptional"]))

    if mode == "polyhedral":
        gens_doc = doc["effective_generators"]
        if not isinstance(gens_doc, list) or not gens_doc:
            raise GeometryError("effective_generators must be a nonempty list")
        gens = tuple(
            _parse_vector(v, rank, f"effective_generators[{i}]")
            for i, v in enumerate(gens_doc)
        )
        if any(g.is_zero for g in gens):
            raise GeometryError("effective generators must be nonzero")
        return Geometry(name, lattice, basis, tuple(primes), mode, gens, None)

    # round mode
    if any(p.exceptional for p in primes):
        raise GeometryError("round mode admits no exceptional primes")
    ample = _parse_vector(doc["ample"], rank, "ample")
    if lattice.square(ample) <= 0:
        raise GeometryError("ample class must have positive BBF square")
    return Geometry(name, lattice, basis, tuple(primes), mode, (), ample)


def load_geometry(path) -> Geometry:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GeometryError(f"cannot read geometry file: {exc}") from exc
    return parse_geometry(text)


def geometry_to_json(geom: Geometry) -> str:
    """Serialize exactly; parse_geometry(geometry_to_json(g)) == g."""
    doc: dict = {
        "name": geom.name,
        "half_dim": geom.lattice.half_dim,
        "fujiki": format_rat(geom.lattice.fujiki),
        "basis": list(geom.basis),
        "gram": [[format_rat(v) for v in row] for row in geom.lattice.gram],
        "mode": geom.mode,
        "primes": [
            {
                "name": p.name,
                "class": [format_rat(c) for c in p.cls.coords],
                "exceptional": p.exceptional,
            }
            for p in geom.primes
        ],
    }
    if geom.mode == "polyhedral":
        doc["effective_generators"] = [
            [format_rat(c) for c in g.coords] for g in geom.effective_generators
        ]
    else:
        doc["ample"] = [format_rat(c) for c in geom.ample.coords]
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# divisor expressions

_TOKEN_RE = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[^\W\d][\w'′]*)|(?P<op>[+\-*]))")


def _tokenize(text: str):
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise GeometryError(f"cannot tokenize divisor expression at {text[pos:]!r}")
            break
        out.append((m.lastgroup, m.group(m.lastgroup)))
        pos = m.end()
    return out


def parse_divisor(geom: Geometry, text: str) -> DivClass:
    """Parse '3H - 2*d + 1/2 E' style expressions to a divisor class."""
    tokens = _tokenize(text)
    if not tokens:
        raise GeometryError("empty divisor expression")
    total = geom.zero()
    i = 0
    sign = Fraction(1)
    expect_term = True
    while i < len(tokens):
        kind, value = tokens[i]
        if expect_term:
            if kind == "op" and value in "+-":  # sign prefix
                if value == "-":
                    sign = -sign
                i += 1
                continue
            coeff = None
            if kind == "num":
                coeff = Fraction(value)
                i += 1
                if i < len(tokens) and tokens[i] == ("op", "*"):
                    i += 1
                    if i >= len(tokens) or tokens[i][0] != "name":
                        raise GeometryError("expected a name after '*'")
                kind, value = tokens[i] if i < len(tokens) else (None, None)
            if kind == "name":
                total = total + _resolve(geom, value).scale(sign * (coeff if coeff is not None else 1))
                i += 1
            elif coeff is not None:
                # bare rational term: only the zero constant is a divisor
                if coeff != 0:
                    raise GeometryError("constant term in divisor expression")
            else:
                raise GeometryError(f"expected a term, got {value!r}")
            expect_term = False
            sign = Fraction(1)
        else:
            if kind != "op" or value not in "+-":
                raise GeometryError(f"expected '+' or '-', got {value!r}")
            sign = Fraction(1) if value == "+" else Fraction(-1)
            i += 1
            expect_term = True
    if expect_term:
        raise GeometryError("divisor expression ends with an operator")
    return total


def _resolve(geom: Geometry, name: str) -> DivClass:
    if name in geom.basis:
        idx = geom.basis.index(name)
        unit = [Fraction(0)] * geom.rank
        unit[idx] = Fraction(1)
        return DivClass(unit)
    if name in geom._by_name:
        return geom._by_name[name].cls
    raise GeometryError(f"unknown divisor name {name!r}")


def format_divisor(geom: Geometry, d: DivClass) -> str:
    """Render a class over the basis; parses back to the same class."""
    parts = []
    for name, c in zip(geom.basis, d.coords):
        if not c:
            continue
        mag = abs(c)
        body = name if mag == 1 else f"{mag}*{name}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# cone predicates

def _leading_sign_ok(geom: Geometry, d: DivClass) -> bool:
    return geom.lattice.pair(d, geom.ample) >= 0


def is_pseudo_effective(geom: Geometry, d: DivClass) -> bool:
    """Membership of the class in the declared pseudo-effective cone."""
    if d.dim != geom.rank:
        raise DomainError("class dimension does not match geometry rank")
    if geom.mode == "polyhedral":
        cols = [g.coords for g in geom.effective_generators]
        return nonneg_combination(cols, d.coords) is not None
    return geom.lattice.square(d) >= 0 and _leading_sign_ok(geom, d)


def is_movable(geom: Geometry, d: DivClass) -> bool:
    """Pseudo-effective and q-nonnegative against every declared prime."""
    if not is_pseudo_effective(geom, d):
        return False
    return all(geom.lattice.pair(d, p.cls) >= 0 for p in geom.primes)


def express_nonneg(geom: Geometry, d: DivClass) -> Optional[list[Fraction]]:
    """Nonnegative generator coefficients writing d, when they exist."""
    if geom.mode != "polyhedral":
        raise DomainError("generator coefficients exist only in polyhedral mode")
    cols = [g.coords for g in geom.effective_generators]
    return nonneg_combination(cols, d.coords)
