"""Bracketing oracle for suprema of nonnegative polynomials over simplices.

The recurring problem: maximize a polynomial with nonnegative coefficients
over a product of simplices (one block of variables per simplex, each block
constrained by t >= 0, sum t <= 1). That sup is what the graded norms and
the diagonal symmetric norm are; it is a non-convex program, so a point
value would be a lie. Everything here returns a certified bracket instead:

  lower   exact evaluation at explicit feasible rational points (a
          composition grid per block, refined by a multiplicative-update
          ascent in floats whose best point is snapped back to rationals
          and re-evaluated exactly),

  upper   the averaged-coefficient bound: group monomials by their
          per-block degree profile, bound each group by its largest
          coefficient-to-multinomial ratio, and sum; by the multinomial
          theorem each group's weighted monomials sum to at most 1 on the
          feasible set.

Degree <= 1 is solved exactly (vertex maximum), and the bracket collapses.
Since coefficients are nonnegative the sup is attained with every block on
its sum = 1 face, which is where the grid lives.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import islice, product
from math import comb, factorial
from typing import Iterator, Optional, Sequence

from .errors import NegativeCoefficientError
from .polynomials import Polynomial
from .rationals import Q0, Q1, VecQ


@dataclass(frozen=True)
class OracleParams:
    grid_resolution: Optional[int] = None  # None picks the finest that fits the cap
    ascent_iters: int = 120
    snap_denominator: int = 10**6
    candidate_cap: int = 20000


DEFAULT_PARAMS = OracleParams()


@dataclass(frozen=True)
class Bracket:
    """Certified enclosure lower <= sup <= upper, both exact rationals."""

    lower: Fraction
    upper: Fraction
    argmax: Optional[VecQ] = None  # feasible point achieving `lower`
    note: str = ""

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    @property
    def is_exact(self) -> bool:
        return self.lower == self.upper

    def scaled(self, c: Fraction) -> "Bracket":
        return Bracket(self.lower * c, self.upper * c, self.argmax, self.note)


def _check_blocks(poly: Polynomial, blocks: Sequence[int]) -> None:
    if sum(blocks) != poly.nvars:
        raise ValueError(f"blocks {tuple(blocks)} do not cover {poly.nvars} variables")
    if any(b < 1 for b in blocks):
        raise ValueError("empty simplex block")


def _check_nonnegative(poly: Polynomial) -> None:
    bad = poly.negative_term()
    if bad is not None:
        e, c = bad
        raise NegativeCoefficientError(
            f"monomial t^{e} has coefficient {c} < 0; the simplex oracle only "
            "brackets nonnegative-coefficient polynomials"
        )


def _block_slices(blocks: Sequence[int]) -> list[slice]:
    out, off = [], 0
    for b in blocks:
        out.append(slice(off, off + b))
        off += b
    return out


def averaged_upper(poly: Polynomial, blocks: Sequence[int]) -> Fraction:
    """Sum over degree profiles of the best coefficient/multinomial ratio."""
    _check_blocks(poly, blocks)
    _check_nonnegative(poly)
    slices = _block_slices(blocks)
    best: dict[tuple[int, ...], Fraction] = {}
    for e, c in poly.terms.items():
        profile = []
        weight = 1
        for s in slices:
            part = e[s]
            d = sum(part)
            profile.append(d)
            m = factorial(d)
            for k in part:
                m //= factorial(k)
            weight *= m
        ratio = c / weight
        key = tuple(profile)
        if ratio > best.get(key, Q0):
            best[key] = ratio
    return sum(best.values(), Q0)


def _affine_sup(poly: Polynomial, blocks: Sequence[int]) -> tuple[Fraction, VecQ]:
    """Exact sup for total degree <= 1 (nonnegative coefficients)."""
    point = [Q0] * poly.nvars
    total = poly.constant_term()
    off = 0
    for b in blocks:
        best_c, best_i = Q0, None
        for i in range(off, off + b):
            e = [0] * poly.nvars
            e[i] = 1
            c = poly.terms.get(tuple(e), Q0)
            if c > best_c:
                best_c, best_i = c, i
        if best_i is not None:
            point[best_i] = Q1
            total += best_c
        off += b
    return total, tuple(point)


@lru_cache(maxsize=None)
def _compositions(total: int, parts: int) -> tuple[tuple[int, ...], ...]:
    if parts == 1:
        return ((total,),)
    out = []
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return tuple(out)


def _grid_candidates(
    blocks: Sequence[int], params: OracleParams
) -> tuple[int, Iterator[VecQ]]:
    cap = params.candidate_cap
    if params.grid_resolution is not None:
        resolutions = [params.grid_resolution]
    else:
        resolutions = [10, 8, 6, 5, 4, 3, 2, 1]
    chosen = resolutions[-1]
    for r in resolutions:
        count = 1
        for b in blocks:
            count *= comb(r + b - 1, b - 1)
            if count > cap:
                break
        if count <= cap:
            chosen = r
            break

    def points() -> Iterator[VecQ]:
        per_block = [
            [tuple(Fraction(k, chosen) for k in comp) for comp in _compositions(chosen, b)]
            for b in blocks
        ]
        for combo in product(*per_block):
            yield tuple(x for part in combo for x in part)
        # Uniform centers, useful when the grid is coarse.
        yield tuple(Fraction(1, b) for b in blocks for _ in range(b))

    return chosen, islice(points(), cap + 1)


def _ascent(
    poly: Polynomial, blocks: Sequence[int], start: Sequence[float], iters: int
) -> list[float]:
    """Multiplicative-update hill climb; a heuristic refiner, not a proof.

    Soundness never depends on it: whatever point it lands on is snapped to
    rationals and re-evaluated exactly before being believed.
    """
    t = list(start)
    best = list(start)
    best_val = poly.eval_float(t)
    slices = _block_slices(blocks)
    for _ in range(iters):
        grad = poly.grad_float(t)
        moved = False
        for s in slices:
            u = [max(t[i], 1e-12) * max(grad[i], 0.0) for i in range(s.start, s.stop)]
            z = sum(u)
            if z <= 0.0:
                continue
            for j, i in enumerate(range(s.start, s.stop)):
                t[i] = u[j] / z
            moved = True
        if not moved:
            break
        val = poly.eval_float(t)
        if val > best_val:
            best_val = val
            best = list(t)
    return best


def _snap(point: Sequence[float], blocks: Sequence[int], denominator: int) -> VecQ:
    snapped = [max(Q0, Fraction(x).limit_denominator(denominator)) for x in point]
    off = 0
    for b in blocks:
        s = sum(snapped[off : off + b], Q0)
        if s > 1:
            for i in range(off, off + b):
                snapped[i] /= s
        off += b
    return tuple(snapped)


def simplex_polynomial_bounds(
    poly: Polynomial, blocks: Sequence[int], params: OracleParams = DEFAULT_PARAMS
) -> Bracket:
    """Bracket sup { poly(t) : per block, t >= 0 and sum t <= 1 }."""
    _check_blocks(poly, blocks)
    _check_nonnegative(poly)
    if poly.nvars == 0 or poly.total_degree() == 0:
        v = poly.constant_term()
        return Bracket(v, v, (Q0,) * poly.nvars, "constant")
    if poly.total_degree() <= 1:
        v, point = _affine_sup(poly, blocks)
        return Bracket(v, v, point, "affine vertex maximum")

    upper = averaged_upper(poly, blocks)
    resolution, candidates = _grid_candidates(blocks, params)
    lower, argmax = Q0, (Q0,) * poly.nvars
    for point in candidates:
        v = poly.eval_exact(point)
        if v > lower:
            lower, argmax = v, point
    if params.ascent_iters > 0:
        refined = _ascent(
            poly, blocks, [float(x) for x in argmax], params.ascent_iters
        )
        snapped = _snap(refined, blocks, params.snap_denominator)
        v = poly.eval_exact(snapped)
        if v > lower:
            lower, argmax = v, snapped
    if lower > upper:
        raise AssertionError(
            f"oracle inconsistency: lower {lower} exceeds upper {upper}"
        )
    return Bracket(lower, upper, argmax, f"grid 1/{resolution} + ascent")
