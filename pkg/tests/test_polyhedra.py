"""Polar and canonicalization against a brute-force vertex oracle.

The oracle enumerates vertices of { a >= 0 : <a,x> <= 1 } the slow way:
solve every d-subset of constraint rows exactly and keep the solutions that
satisfy everything. Completely independent of the double description code.
"""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conelogic.polyhedra import (
    bipolar,
    dominates,
    polar_of_points,
    polar_vertices,
    reduce_generators,
)
from conelogic.rationals import vec

F = Fraction


def solve_exact(rows, rhs):
    """Gaussian elimination over Fraction; None if singular."""
    n = len(rows)
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = F(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return tuple(aug[i][n] for i in range(n))


def oracle_polar_vertices(points, dim):
    """All vertices of the polar polytope, by constraint-subset enumeration."""
    rows = []
    rhs = []
    for c in range(dim):  # a_c >= 0 rows, written as equalities a_c = 0
        e = [F(0)] * dim
        e[c] = F(1)
        rows.append((tuple(e), F(0)))
    for p in points:
        rows.append((tuple(p), F(1)))
    verts = set()
    for subset in itertools.combinations(rows, dim):
        sol = solve_exact([r for r, _ in subset], [b for _, b in subset])
        if sol is None:
            continue
        if all(x >= 0 for x in sol) and all(
            sum(a * b for a, b in zip(p, sol)) <= 1 for p in points
        ):
            verts.add(sol)
    return verts


def test_polar_of_square_gens():
    got = polar_vertices([vec([1, 0]), vec([0, 1])], 2)
    assert got == (vec([1, 1]),)


def test_polar_of_diagonal_point():
    got = polar_vertices([vec([1, 1])], 2)
    assert got == (vec([0, 1]), vec([1, 0]))


def test_polar_round_trip_pair():
    a = (vec([0, 1]), vec([1, 0]))  # canonical (lex) order
    b = (vec([1, 1]),)
    assert polar_vertices(a, 2) == b
    assert polar_vertices(b, 2) == a


def test_unbounded_flag_lists_unspanned_coords():
    res = polar_of_points([vec([1, 0, 0])], 3)
    assert not res.bounded
    assert res.unbounded_coords == (1, 2)
    with pytest.raises(ValueError):
        polar_vertices([vec([1, 0, 0])], 3)


def test_dimension_cap():
    from conelogic.errors import CapabilityError

    pts = [tuple(F(1) for _ in range(9))]
    with pytest.raises(CapabilityError):
        polar_of_points(pts, 9)


def test_reduce_dedupes_and_drops_dominated():
    pts = [
        vec([1, 0]),
        vec([1, 0]),
        vec([F(1, 2), 0]),
        vec([0, 1]),
        vec([F(1, 2), F(1, 2)]),  # midpoint of the first and last: dominated
        vec([0, 0]),
    ]
    assert reduce_generators(pts) == (vec([0, 1]), vec([1, 0]))


def test_reduce_keeps_extreme_diagonal():
    pts = [vec([1, 1]), vec([1, 0]), vec([0, 1])]
    assert reduce_generators(pts) == (vec([1, 1]),)


def test_dominates():
    gens = [vec([1, 0]), vec([0, 1])]
    assert dominates(gens, vec([F(1, 2), F(1, 2)]))
    assert not dominates(gens, vec([F(3, 4), F(3, 4)]))
    assert dominates(gens, vec([0, 0]))


coord = st.integers(0, 5).flatmap(
    lambda p: st.integers(1, 3).map(lambda q: F(p, q))
)


def spanning_point_sets(dim):
    return st.lists(
        st.tuples(*([coord] * dim)), min_size=1, max_size=5
    ).filter(
        lambda pts: all(any(p[c] > 0 for p in pts) for c in range(dim))
    )


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 4).flatmap(lambda d: st.tuples(st.just(d), spanning_point_sets(d))))
def test_polar_matches_bruteforce_oracle(dim_and_pts):
    dim, pts = dim_and_pts
    pts = [vec(p) for p in pts]
    got = set(polar_vertices(pts, dim))
    oracle = oracle_polar_vertices(pts, dim)
    # The DD route canonicalizes (drops 0 and downward-dominated vertices);
    # apply the same normalization to the oracle set before comparing.
    assert got == set(reduce_generators(oracle))


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 4).flatmap(lambda d: st.tuples(st.just(d), spanning_point_sets(d))))
def test_bipolar_idempotent(dim_and_pts):
    dim, pts = dim_and_pts
    pts = [vec(p) for p in pts]
    closure = bipolar(pts, dim)
    assert bipolar(closure, dim) == closure
    # The closure contains the input points (downward hull grows, never shrinks).
    assert all(dominates(closure, p) for p in pts)
