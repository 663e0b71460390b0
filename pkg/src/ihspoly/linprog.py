"""Exact rational linear programming for small cone problems.

Dense two-phase simplex over Fraction with Bland's rule (no cycling,
no tolerances -- every comparison is exact).  Problem sizes here are a
handful of rows and columns, so nothing clever is attempted.

The cone helpers answer the questions the geometry layer actually
asks: membership of a vector in a finitely generated cone, the largest
step along a direction that stays in the cone, and the extremal rays
of a generated cone after cutting with halfspaces.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

Vec = tuple[Fraction, ...]


class InfeasibleError(Exception):
    """The linear program has no feasible point."""


class UnboundedError(Exception):
    """The linear program is unbounded in the optimized direction."""


def _pivot(rows, cost, basis, r, col):
    piv = rows[r][col]
    rows[r] = [v / piv for v in rows[r]]
    for i in range(len(rows)):
        if i != r and rows[i][col]:
            f = rows[i][col]
            rows[i] = [a - f * p for a, p in zip(rows[i], rows[r])]
    if cost[col]:
        f = cost[col]
        cost[:] = [a - f * p for a, p in zip(cost, rows[r])]
    basis[r] = col


def _optimize(rows, cost, basis, ncols):
    """Bland's rule: enter lowest negative-cost column, leave lowest basis."""
    while True:
        col = next((j for j in range(ncols) if cost[j] < 0), None)
        if col is None:
            return
        leave = None
        best = None
        for i, row in enumerate(rows):
            if row[col] > 0:
                ratio = row[-1] / row[col]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            raise UnboundedError("objective unbounded")
        _pivot(rows, cost, basis, leave, col)


def _phase1(a_rows: list[list[Fraction]], b: list[Fraction], nvars: int):
    """Feasible basic tableau for Ax=b, x>=0, or InfeasibleError."""
    m = len(a_rows)
    rows = []
    for i in range(m):
        row = list(a_rows[i])
        rhs = b[i]
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        rows.append(row + art + [rhs])
    basis = [nvars + i for i in range(m)]
    # Reduced costs of "minimize sum of artificials" with artificials basic.
    cost = [Fraction(0)] * (nvars + m + 1)
    for row in rows:
        for j in range(nvars):
            cost[j] -= row[j]
        cost[-1] -= row[-1]
    _optimize(rows, cost, basis, nvars)  # artificials never re-enter
    if -cost[-1] != 0:
        raise InfeasibleError("no nonnegative solution")
    # Drive leftover degenerate artificials out of the basis.
    for i in range(m - 1, -1, -1):
        if basis[i] >= nvars:
            col = next((j for j in range(nvars) if rows[i][j]), None)
            if col is None:
                del rows[i], basis[i]  # redundant constraint
            else:
                _pivot(rows, cost, basis, i, col)
    return [row[:nvars] + [row[-1]] for row in rows], basis


def solve_min(a_rows, b, objective) -> tuple[Fraction, list[Fraction]]:
    """Minimize objective . x subject to Ax = b, x >= 0, all exact."""
    nvars = len(objective)
    rows, basis = _phase1([list(r) for r in a_rows], list(b), nvars)
    cost = list(objective) + [Fraction(0)]
    for i, bi in enumerate(basis):  # reduce over the basic columns
        if cost[bi]:
            f = cost[bi]
            cost = [a - f * p for a, p in zip(cost, rows[i])]
    _optimize(rows, cost, basis, nvars)
    x = [Fraction(0)] * nvars
    for i, bi in enumerate(basis):
        x[bi] = rows[i][-1]
    return -cost[-1], x


def nonneg_combination(columns: Sequence[Vec], target: Vec) -> Optional[list[Fraction]]:
    """Coefficients l >= 0 with sum l_j columns_j = target, else None."""
    m = len(target)
    if not columns:
        return [] if not any(target) else None
    a_rows = [[col[i] for col in columns] for i in range(m)]
    try:
        rows, basis = _phase1(a_rows, list(target), len(columns))
    except InfeasibleError:
        return None
    x = [Fraction(0)] * len(columns)
    for i, bi in enumerate(basis):
        x[bi] = rows[i][-1]
    return x


def in_cone(generators: Sequence[Vec], v: Vec) -> bool:
    return nonneg_combination(generators, v) is not None


def max_step(generators: Sequence[Vec], direction: Vec, start: Vec) -> Fraction:
    """sup { t >= 0 : start - t*direction in cone(generators) }, exact.

    Raises InfeasibleError when start itself is outside the cone and
    UnboundedError when the whole ray stays inside (the cone contains
    the -direction recession ray, impossible for pointed cones).
    """
    m = len(start)
    ncols = len(generators) + 1
    a_rows = [[g[i] for g in generators] + [direction[i]] for i in range(m)]
    objective = [Fraction(0)] * len(generators) + [Fraction(-1)]  # maximize t
    value, _ = solve_min(a_rows, list(start), objective)
    return -value


def _primitive(v: Vec) -> Vec:
    denom = 1
    for c in v:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    ints = [int(c * denom) for c in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(Fraction(0) for _ in v)
    return tuple(Fraction(x, g) for x in ints)


def _dot(f: Vec, v: Vec) -> Fraction:
    return sum(a * b for a, b in zip(f, v))


def prune_to_extremal(rays: Sequence[Vec]) -> list[Vec]:
    """Primitive representatives of the extremal rays among generators."""
    uniq: list[Vec] = []
    for r in rays:
        p = _primitive(r)
        if any(p) and p not in uniq:
            uniq.append(p)
    changed = True
    while changed:
        changed = False
        for i in range(len(uniq)):
            others = uniq[:i] + uniq[i + 1 :]
            if others and in_cone(others, uniq[i]):
                del uniq[i]
                changed = True
                break
    return sorted(uniq)


def intersect_halfspace(rays: Sequence[Vec], functional: Vec) -> list[Vec]:
    """Extremal rays of cone(rays) cut by {x : functional . x >= 0}."""
    pos = [r for r in rays if _dot(functional, r) > 0]
    neg = [r for r in rays if _dot(functional, r) < 0]
    zero = [r for r in rays if not _dot(functional, r)]
    if not neg:
        return prune_to_extremal(list(rays))
    new = pos + zero
    for rp in pos:
        hp = _dot(functional, rp)
        for rn in neg:
            hn = _dot(functional, rn)
            combo = tuple(hp * bn - hn * bp for bp, bn in zip(rp, rn))
            if any(combo):
                new.append(combo)
    return prune_to_extremal(new)


def intersect_hyperplane(rays: Sequence[Vec], functional: Vec) -> list[Vec]:
    neg = tuple(-f for f in functional)
    return intersect_halfspace(intersect_halfspace(rays, functional), neg)
