"""Exact simplex and polyhedral-cone helpers against hand-checked oracles."""

import random
from fractions import Fraction

import pytest

from ihspoly.linprog import (
    InfeasibleError,
    UnboundedError,
    in_cone,
    intersect_halfspace,
    intersect_hyperplane,
    max_step,
    nonneg_combination,
    prune_to_extremal,
    solve_min,
)

F = Fraction


def rays_set(rays):
    return {tuple(r) for r in rays}


# -- solve_min ---------------------------------------------------------------


def test_solve_min_picks_cheaper_vertex():
    # min x + y  s.t.  x + 2y = 4: vertices (4,0) cost 4 and (0,2) cost 2.
    value, x = solve_min([[F(1), F(2)]], [F(4)], [F(1), F(1)])
    assert value == 2
    assert x == [F(0), F(2)]


def test_solve_min_two_constraints():
    # min 3x + y + 4z  s.t.  x + y = 2, y + z = 3.
    # Basic solutions: (0,2,1) cost 6, (2,0,3) cost 18 -> optimum 6.
    value, x = solve_min(
        [[F(1), F(1), F(0)], [F(0), F(1), F(1)]],
        [F(2), F(3)],
        [F(3), F(1), F(4)],
    )
    assert value == 6
    assert x == [F(0), F(2), F(1)]


def test_solve_min_fractional_data():
    value, x = solve_min([[F(1, 2), F(1, 3)]], [F(1)], [F(1), F(1)])
    # x = 2 costs 2; y = 3 costs 3.
    assert value == 2
    assert x == [F(2), F(0)]


def test_solve_min_negative_rhs_normalized():
    # -x - y = -4 is the same constraint as x + y = 4.
    value, _ = solve_min([[F(-1), F(-1)]], [F(-4)], [F(1), F(2)])
    assert value == 4


def test_solve_min_infeasible():
    # x + y = -1 has no nonnegative solution.
    with pytest.raises(InfeasibleError):
        solve_min([[F(1), F(1)]], [F(-1)], [F(0), F(0)])
    # Contradictory pair.
    with pytest.raises(InfeasibleError):
        solve_min([[F(1), F(1)], [F(1), F(1)]], [F(1), F(2)], [F(0), F(0)])


def test_solve_min_unbounded():
    # x - y = 0 leaves t*(1,1) feasible for all t; cost -2t is unbounded.
    with pytest.raises(UnboundedError):
        solve_min([[F(1), F(-1)]], [F(0)], [F(-1), F(-1)])


def test_solve_min_solution_satisfies_constraints_seeded():
    rng = random.Random(41)
    solved = 0
    while solved < 40:
        m, n = rng.randint(1, 3), rng.randint(2, 5)
        a = [[F(rng.randint(-3, 3)) for _ in range(n)] for _ in range(m)]
        b = [F(rng.randint(-4, 4)) for _ in range(m)]
        c = [F(rng.randint(0, 5)) for _ in range(n)]  # bounded below by 0
        try:
            value, x = solve_min(a, b, c)
        except (InfeasibleError, UnboundedError):
            continue
        assert all(xi >= 0 for xi in x)
        for row, rhs in zip(a, b):
            assert sum(r * xi for r, xi in zip(row, x)) == rhs
        assert sum(ci * xi for ci, xi in zip(c, x)) == value
        solved += 1


# -- cone membership -----------------------------------------------------------


def test_nonneg_combination_basic():
    cols = [(F(1), F(0)), (F(1), F(1))]
    assert nonneg_combination(cols, (F(2), F(1))) == [F(1), F(1)]
    assert nonneg_combination(cols, (F(0), F(1))) is None
    assert nonneg_combination(cols, (F(0), F(0))) == [F(0), F(0)]


def test_nonneg_combination_empty_columns():
    assert nonneg_combination([], (F(0), F(0))) == []
    assert nonneg_combination([], (F(1), F(0))) is None


def test_nonneg_combination_certificate_reconstructs_seeded():
    rng = random.Random(43)
    for _ in range(40):
        cols = [tuple(F(rng.randint(-3, 3)) for _ in range(3)) for _ in range(4)]
        target = tuple(F(rng.randint(-5, 5)) for _ in range(3))
        coeffs = nonneg_combination(cols, target)
        if coeffs is None:
            continue
        assert all(c >= 0 for c in coeffs)
        for i in range(3):
            assert sum(c * col[i] for c, col in zip(coeffs, cols)) == target[i]


def test_in_cone_orthant():
    gens = [(F(1), F(0)), (F(0), F(1))]
    assert in_cone(gens, (F(3), F(2)))
    assert in_cone(gens, (F(0), F(0)))
    assert not in_cone(gens, (F(-1), F(2)))


# -- max_step -------------------------------------------------------------------


def test_max_step_orthant():
    gens = [(F(1), F(0)), (F(0), F(1))]
    start = (F(2), F(3))
    assert max_step(gens, (F(1), F(0)), start) == 2
    assert max_step(gens, (F(1), F(1)), start) == 2
    assert max_step(gens, (F(0), F(1)), start) == 3
    assert max_step(gens, (F(2), F(1)), start) == 1


def test_max_step_start_outside():
    gens = [(F(1), F(0)), (F(0), F(1))]
    with pytest.raises(InfeasibleError):
        max_step(gens, (F(1), F(0)), (F(-1), F(0)))


def test_max_step_unbounded():
    gens = [(F(1), F(0)), (F(0), F(1))]
    with pytest.raises(UnboundedError):
        max_step(gens, (F(0), F(-1)), (F(1), F(1)))


def test_max_step_lands_on_boundary():
    # Cone {0 <= y <= 2x}; start (2,2); direction (0,1).
    # start - t*(0,1) = (2, 2-t) stays inside iff 0 <= 2-t, so t_max = 2
    # and the segment exits through the y = 0 facet.
    gens = [(F(1), F(0)), (F(1), F(2))]
    t = max_step(gens, (F(0), F(1)), (F(2), F(2)))
    assert t == 2
    end = (F(2), F(2) - t)
    assert in_cone(gens, end)
    assert not in_cone(gens, (end[0], end[1] - F(1, 100)))


# -- extremal rays and cuts --------------------------------------------------------


def test_prune_to_extremal_drops_interior_ray():
    rays = [(F(1), F(0)), (F(0), F(1)), (F(1), F(1))]
    assert rays_set(prune_to_extremal(rays)) == {(1, 0), (0, 1)}


def test_prune_to_extremal_merges_scalings():
    rays = [(F(2), F(0)), (F(3), F(0)), (F(1, 2), F(0))]
    assert prune_to_extremal(rays) == [(1, 0)]


def test_prune_to_extremal_drops_zero():
    assert prune_to_extremal([(F(0), F(0)), (F(1), F(0))]) == [(1, 0)]


def test_prune_to_extremal_3d_octant_face():
    rays = [
        (F(1), F(0), F(0)),
        (F(0), F(1), F(0)),
        (F(0), F(0), F(1)),
        (F(1), F(1), F(1)),
        (F(2), F(1), F(0)),
    ]
    assert rays_set(prune_to_extremal(rays)) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}


def test_intersect_halfspace_cuts_orthant():
    rays = [(F(1), F(0)), (F(0), F(1))]
    cut = intersect_halfspace(rays, (F(1), F(-1)))  # keep x >= y
    assert rays_set(cut) == {(1, 0), (1, 1)}


def test_intersect_halfspace_no_cut_needed():
    rays = [(F(1), F(0)), (F(0), F(1))]
    cut = intersect_halfspace(rays, (F(1), F(1)))
    assert rays_set(cut) == {(1, 0), (0, 1)}


def test_intersect_halfspace_everything_cut():
    rays = [(F(1), F(0)), (F(0), F(1))]
    cut = intersect_halfspace(rays, (F(-1), F(-1)))
    assert cut == []


def test_intersect_halfspace_octant_oracle():
    # Cut x + y - z >= 0 through the octant: new extremal rays appear on
    # the two facets that cross the plane.
    rays = [(F(1), F(0), F(0)), (F(0), F(1), F(0)), (F(0), F(0), F(1))]
    cut = intersect_halfspace(rays, (F(1), F(1), F(-1)))
    assert rays_set(cut) == {(1, 0, 0), (0, 1, 0), (1, 0, 1), (0, 1, 1)}
    # Every returned ray satisfies the halfspace and lies in the octant.
    for r in cut:
        assert r[0] + r[1] - r[2] >= 0
        assert all(c >= 0 for c in r)


def test_intersect_hyperplane_orthant():
    rays = [(F(1), F(0)), (F(0), F(1))]
    assert intersect_hyperplane(rays, (F(1), F(-1))) == [(1, 1)]


def test_intersect_hyperplane_octant():
    rays = [(F(1), F(0), F(0)), (F(0), F(1), F(0)), (F(0), F(0), F(1))]
    cut = intersect_hyperplane(rays, (F(1), F(1), F(-1)))
    assert rays_set(cut) == {(1, 0, 1), (0, 1, 1)}


def test_halfspace_cut_members_stay_members_seeded():
    rng = random.Random(47)
    rays = [(F(1), F(0), F(0)), (F(0), F(1), F(0)), (F(0), F(0), F(1))]
    functional = (F(2), F(-1), F(-1))
    cut = intersect_halfspace(rays, functional)
    for _ in range(40):
        coeffs = [F(rng.randint(0, 5)) for _ in cut]
        v = tuple(
            sum(c * r[i] for c, r in zip(coeffs, cut)) for i in range(3)
        )
        assert in_cone(rays, v)
        assert sum(f * vi for f, vi in zip(functional, v)) >= 0
