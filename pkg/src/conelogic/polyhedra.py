"""Polars of finite point sets in the nonnegative orthant, exactly.

The polar taken here is the one that drives every generator-side norm in the
package: for a finite S in the orthant of R^d,

    polar(S) = { a >= 0 : <a, x> <= 1 for all x in S }.

polar_of_points enumerates the vertices of that polytope with the double
description method run on the homogenization

    C = { (a, t) : a >= 0, t >= 0, t - <x, a> >= 0 for all x in S },

starting from the orthant cone (whose extreme rays are the unit vectors) and
cutting with one point-constraint at a time. Rays with t > 0 scale to
vertices; rays with t = 0 are recession directions, which exist exactly when
some coordinate is unspanned by S (all points zero there). That case is
detected up front and reported as a status flag instead of a generator list.

reduce_generators is the canonicalizer used everywhere: it deletes the points
that the downward convex hull of the remaining ones already covers, then
sorts. Canonical generator lists are what object equality means.

Double description is only run up to ambient dimension 8; beyond that the
package raises CapabilityError (norm evaluation is designed to never need a
polar above that size).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import CapabilityError
from .lp import LpStatus, constraint, lp_feasible
from .rationals import Q0, Q1, VecQ, is_zero, vec

DD_MAX_DIM = 8


def reduce_generators(points: Iterable[VecQ]) -> tuple[VecQ, ...]:
    """Canonical form of a generator set in the orthant.

    Drops zero vectors and exact duplicates, then removes every point that is
    coordinatewise dominated by a convex combination of the *other* points
    and 0 (one small feasibility LP per point; simultaneous removal is sound
    because the extreme points of the downward hull dominate everything
    else). The survivors are sorted lexicographically.
    """
    pts = sorted(set(p for p in points if not is_zero(p)))
    if len(pts) <= 1:
        return tuple(pts)
    d = len(pts[0])
    removed: list[VecQ] = []
    for p in pts:
        others = [g for g in pts if g != p]
        k = len(others)
        cons = []
        for c in range(d):
            cons.append(constraint([g[c] for g in others], ">=", p[c]))
        cons.append(constraint([1] * k, "<=", 1))
        if lp_feasible(cons, k).status is LpStatus.OPTIMAL:
            removed.append(p)
    return tuple(p for p in pts if p not in removed)


def dominates(points: Sequence[VecQ], x: VecQ) -> bool:
    """Is x <= some convex combination of points and 0 (coordinatewise)?"""
    if is_zero(x):
        return True
    k = len(points)
    if k == 0:
        return False
    d = len(x)
    cons = [constraint([g[c] for g in points], ">=", x[c]) for c in range(d)]
    cons.append(constraint([1] * k, "<=", 1))
    return lp_feasible(cons, k).status is LpStatus.OPTIMAL


class PolarResult:
    """Either a vertex list (bounded polar) or the unspanned coordinates."""

    __slots__ = ("vertices", "unbounded_coords")

    def __init__(self, vertices: tuple[VecQ, ...] | None, unbounded_coords: tuple[int, ...]):
        self.vertices = vertices
        self.unbounded_coords = unbounded_coords

    @property
    def bounded(self) -> bool:
        return self.vertices is not None

    def __repr__(self):
        if self.bounded:
            return f"PolarResult(vertices={self.vertices!r})"
        return f"PolarResult(unbounded_coords={self.unbounded_coords!r})"


def polar_of_points(points: Iterable[VecQ], dim: int) -> PolarResult:
    pts = [vec(p) for p in points]
    for p in pts:
        if len(p) != dim:
            from .errors import DimensionError

            raise DimensionError(dim, len(p), "polar input point")
        if any(x < 0 for x in p):
            raise ValueError(f"polar input must lie in the orthant, got {p}")
    if dim == 0:
        return PolarResult((), ())
    if dim > DD_MAX_DIM:
        raise CapabilityError(
            f"double description capped at dimension {DD_MAX_DIM}",
            f"requested dimension {dim}",
        )
    pts = [p for p in pts if not is_zero(p)]
    unspanned = tuple(c for c in range(dim) if all(p[c] == 0 for p in pts))
    if unspanned:
        return PolarResult(None, unspanned)
    verts = _dd_vertices(pts, dim)
    return PolarResult(reduce_generators(verts), ())


def polar_vertices(points: Iterable[VecQ], dim: int) -> tuple[VecQ, ...]:
    """polar_of_points, raising on an unbounded polar."""
    res = polar_of_points(points, dim)
    if not res.bounded:
        raise ValueError(
            f"polar is unbounded in coordinates {res.unbounded_coords} "
            "(generators do not span)"
        )
    return res.vertices


def bipolar(points: Iterable[VecQ], dim: int) -> tuple[VecQ, ...]:
    """Canonical generators of the closed downward hull: polar twice."""
    return polar_vertices(polar_vertices(points, dim), dim)


def _normalize_ray(r: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    s = sum(r, Q0)
    return tuple(x / s for x in r)  # rays here are nonneg and nonzero


def _dd_vertices(pts: list[VecQ], dim: int) -> list[VecQ]:
    """Extreme rays of the homogenized polar cone, dehomogenized at t = 1."""
    n = dim + 1
    # Each ray carries the set of ids of constraints active at it.
    # Ids 0..dim are the orthant constraints (dim is the t >= 0 row);
    # dim+1+i is the i-th point constraint.
    rays: list[tuple[tuple[Fraction, ...], frozenset[int]]] = []
    for k in range(n):
        e = tuple(Q1 if j == k else Q0 for j in range(n))
        active = frozenset(j for j in range(n) if j != k)
        rays.append((e, active))

    for i, p in enumerate(pts):
        cid = n + i
        h = tuple(-x for x in p) + (Q1,)  # t - <p, a> >= 0

        def val(r: tuple[Fraction, ...]) -> Fraction:
            return sum((a * b for a, b in zip(h, r)), Q0)

        pos = [(r, z) for (r, z) in rays if val(r) > 0]
        neg = [(r, z) for (r, z) in rays if val(r) < 0]
        zero = [(r, z | {cid}) for (r, z) in rays if val(r) == 0]

        new_rays = pos + zero
        all_zsets = [z for (_, z) in rays]
        for rp, zp in pos:
            vp = val(rp)
            for rn, zn in neg:
                common = zp & zn
                # Combinatorial adjacency: the only rays whose active sets
                # contain the common one are the pair itself. (Active sets
                # determine extreme rays, so counting is enough.)
                if sum(1 for z in all_zsets if common <= z) != 2:
                    continue
                vn = val(rn)
                combo = tuple(vp * b - vn * a for a, b in zip(rp, rn))
                new_rays.append((_normalize_ray(combo), common | {cid}))
        # Dedupe rays (the adjacency test can produce a ray twice via
        # different pairs when degeneracies align).
        seen: dict[tuple[Fraction, ...], frozenset[int]] = {}
        for r, z in new_rays:
            if r in seen:
                seen[r] = seen[r] | z
            else:
                seen[r] = z
        rays = list(seen.items())

    verts: list[VecQ] = []
    for r, _ in rays:
        t = r[-1]
        assert t > 0, "recession ray survived the spanning pre-check"
        verts.append(tuple(x / t for x in r[:-1]))
    return verts
