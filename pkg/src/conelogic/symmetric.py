"""Symmetric tensor powers and their two norms.

A degree-n symmetric functional f can be normed two ways: over tuples,

    old_norm(f) = max f(u_1, ..., u_n) over n-tuples of primal ball
    generators (exact: the sup over the ball factors through generators
    by multilinearity),

or over the diagonal,

    new_norm(f) = sup { f(x, ..., x) : ||x|| <= 1 },

which is the sup of a nonnegative-coefficient polynomial over the
generator-mixing simplex and is only ever bracketed (see oracle). The two
are equivalent up to the polarization constant

    K_n = (1/n!) * sum_{k=1..n} C(n,k) k^n,

because splitting f(x_1,...,x_n) by inclusion-exclusion over subset sums
x_S bounds each diagonal term by |S|^n times the new norm. The bracket's
upper bound is old_norm itself (the averaged-coefficient bound of the
mixing polynomial collapses to exactly the generator-tuple maximum).

Coordinates and pairing weights follow the multisets module conventions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, product
from math import comb, factorial

from .cones import Backend, ConeObject, materialize_p, one_obj
from .errors import CapabilityError, DimensionError, NegativeCoefficientError
from .mall import Morphism
from .multisets import (
    Mset,
    arrangements,
    monomial_value,
    mset_count,
    mset_positions,
    msets,
    multiplicity,
)
from .oracle import Bracket, DEFAULT_PARAMS, OracleParams, simplex_polynomial_bounds
from .polyhedra import DD_MAX_DIM, polar_of_points, reduce_generators
from .polynomials import Polynomial, poly_product
from .rationals import MatQ, Q0, Q1, VecQ, vec


@dataclass(frozen=True)
class SymTensor:
    """Degree-n symmetric tensor in multiset coordinates."""

    dim: int
    degree: int
    coords: VecQ

    def __post_init__(self):
        want = mset_count(self.dim, self.degree)
        if len(self.coords) != want:
            raise DimensionError(want, len(self.coords), "symmetric coordinates")

    def coord(self, m: Mset) -> Fraction:
        return self.coords[mset_positions(self.dim, self.degree)[m]]


def sym_tensor(dim: int, degree: int, entries) -> SymTensor:
    """Build from a multiset->value mapping or a flat multiset-order list."""
    if isinstance(entries, dict):
        pos = mset_positions(dim, degree)
        coords = [Q0] * mset_count(dim, degree)
        for m, v in entries.items():
            coords[pos[tuple(sorted(m))]] = Fraction(v)
        return SymTensor(dim, degree, tuple(coords))
    return SymTensor(dim, degree, vec(entries))


def power_tensor(x: VecQ, degree: int) -> SymTensor:
    """(x)^n: plain monomial coordinates x^mu."""
    dim = len(x)
    return SymTensor(
        dim, degree, tuple(monomial_value(x, m) for m in msets(dim, degree))
    )


def to_full(t: SymTensor) -> tuple[Fraction, ...]:
    """Row-major full d^n tensor; exact round trip with from_full."""
    if t.dim == 0:
        return (t.coords[0],) if t.degree == 0 else ()
    out = []
    for idx in product(range(t.dim), repeat=t.degree):
        out.append(t.coord(tuple(sorted(idx))))
    return tuple(out)


def from_full(dim: int, degree: int, flat) -> SymTensor:
    flat = vec(flat)
    want = dim**degree if dim > 0 else (1 if degree == 0 else 0)
    if len(flat) != want:
        raise DimensionError(want, len(flat), "full tensor")
    coords = {}
    for pos, idx in enumerate(product(range(dim), repeat=degree)):
        m = tuple(sorted(idx))
        if m in coords:
            if coords[m] != flat[pos]:
                raise ValueError(f"tensor is not symmetric at index {idx}")
        else:
            coords[m] = flat[pos]
    if dim == 0 and degree == 0:
        coords[()] = flat[0]
    return sym_tensor(dim, degree, coords)


def sym_pairing(f: SymTensor, z: SymTensor) -> Fraction:
    """Weighted pairing; equals <phi,x>^n on powers (see multisets)."""
    if (f.dim, f.degree) != (z.dim, z.degree):
        raise DimensionError(f.dim, z.dim, "symmetric pairing")
    return sum(
        (
            Fraction(multiplicity(m)) * fc * zc
            for m, fc, zc in zip(msets(f.dim, f.degree), f.coords, z.coords)
        ),
        Q0,
    )


def apply_multilinear(f: SymTensor, vectors: tuple[VecQ, ...]) -> Fraction:
    """f(v_1, ..., v_n) by full contraction over index tuples."""
    if len(vectors) != f.degree:
        raise DimensionError(f.degree, len(vectors), "multilinear arguments")
    for v in vectors:
        if len(v) != f.dim:
            raise DimensionError(f.dim, len(v), "multilinear argument")
    total = Q0
    if f.degree == 0:
        return f.coords[0]
    for idx in product(range(f.dim), repeat=f.degree):
        c = f.coord(tuple(sorted(idx)))
        if c == 0:
            continue
        term = c
        for t, i in enumerate(idx):
            term *= vectors[t][i]
        total += term
    return total


# ---------------------------------------------------------------------------
# The power object and functorial powers


def _explicit_p_gens(a: ConeObject) -> tuple[VecQ, ...]:
    gens = a.p_ball_gens
    if gens is None:
        gens = materialize_p(a).p_ball_gens
    return gens


def sym_power_obj(a: ConeObject, n: int) -> ConeObject:
    """Symmetric n-th power: primal generators are the generator powers."""
    if a.backend is not Backend.POLYHEDRAL:
        raise CapabilityError("symmetric powers are polyhedral-only", a.label)
    if n < 0:
        raise ValueError("negative power")
    if n == 0:
        return one_obj()
    if n == 1:
        return ConeObject(
            dim=a.dim,
            p_ball_gens=a.p_ball_gens,
            q_ball_gens=a.q_ball_gens,
            label=f"Sym^1({a.label})",
            p_implicit=a.p_implicit,
            q_implicit=a.q_implicit,
            weights=a.weights,
        )
    if a.weights is not None:
        raise CapabilityError("symmetric powers expect plain-pairing operands", a.label)
    gens = _explicit_p_gens(a)
    dim = mset_count(a.dim, n)
    p = reduce_generators(power_tensor(u, n).coords for u in gens)
    w = tuple(Fraction(multiplicity(m)) for m in msets(a.dim, n))
    weights = None if all(x == 1 for x in w) else w
    # Generator powers can leave mixed-multiset coordinates unspanned (the
    # power map is a curved embedding); the polar is bounded only when they
    # do not, so the dual side is optional here. Norms of power objects go
    # through old_norm / new_norm_bounds either way.
    q = None
    if dim <= DD_MAX_DIM:
        res = polar_of_points(p, dim)
        if res.bounded:
            q = res.vertices
            if weights is not None:
                q = tuple(
                    tuple(y[c] / weights[c] for c in range(dim)) for y in q
                )
    return ConeObject(
        dim=dim,
        p_ball_gens=p,
        q_ball_gens=q,
        label=f"Sym^{n}({a.label})",
        weights=weights,
    )


def sym_power_matrix(m: MatQ, n: int, dim_src: int, dim_tgt: int) -> MatQ:
    """Grade-n block of the power functor: permanent-style sums over
    arrangements, acting plainly on multiset coordinates."""
    cols = msets(dim_src, n)
    rows_idx = msets(dim_tgt, n)
    out = []
    for nu in rows_idx:
        row = []
        for mu in cols:
            total = Q0
            for arr in arrangements(mu):
                term = Q1
                for t in range(n):
                    term *= m[nu[t]][arr[t]]
                    if term == 0:
                        break
                total += term
            row.append(total)
        out.append(tuple(row))
    return tuple(out)


def sym_power_mor(S: Morphism, n: int) -> Morphism:
    src = sym_power_obj(S.source, n)
    tgt = sym_power_obj(S.target, n)
    return Morphism(src, tgt, sym_power_matrix(S.matrix, n, S.source.dim, S.target.dim))


# ---------------------------------------------------------------------------
# The two norms


def old_norm(f: SymTensor, a: ConeObject) -> Fraction:
    """Max over generator n-tuples; exact, and an upper bound for the sup
    over arbitrary unit tuples by multilinearity."""
    gens = _explicit_p_gens(a)
    if f.dim != a.dim:
        raise DimensionError(a.dim, f.dim, "old_norm")
    best = Q0
    for tup in combinations_with_replacement(gens, f.degree):
        v = apply_multilinear(f, tup)
        if v < 0:
            raise NegativeCoefficientError(
                f"f is negative ({v}) on a generator tuple; norms here are for "
                "the positive cone"
            )
        if v > best:
            best = v
    return best


def diagonal_polynomial(f: SymTensor, gens: tuple[VecQ, ...]) -> Polynomial:
    """f(x(t), ..., x(t)) for x(t) = sum_i t_i g_i, over the mixing simplex."""
    k = len(gens)
    coord_polys = [
        Polynomial.linear(k, [g[c] for g in gens]) for c in range(f.dim)
    ]
    total = Polynomial.zero(k)
    for m, c in zip(msets(f.dim, f.degree), f.coords):
        if c == 0:
            continue
        mono = poly_product((coord_polys[i] for i in m), k)
        total = total + mono.scale(Fraction(multiplicity(m)) * c)
    return total


def new_norm_bounds(
    f: SymTensor, a: ConeObject, params: OracleParams = DEFAULT_PARAMS
) -> Bracket:
    """Bracket sup { f(x,...,x) : x in the primal ball }.

    Lower from the oracle's grid-plus-ascent over the generator mixing
    simplex; upper is old_norm, which the averaged-coefficient bound equals
    here (checked in tests, kept as the stated bound).
    """
    gens = _explicit_p_gens(a)
    if not gens:
        v = f.coords[0] if f.degree == 0 else Q0
        return Bracket(v, v, (), "degenerate: no generators")
    poly = diagonal_polynomial(f, gens)
    br = simplex_polynomial_bounds(poly, (len(gens),), params)
    upper = old_norm(f, a)
    return Bracket(br.lower, upper, br.argmax, br.note)


@lru_cache(maxsize=None)
def polarization_constant(n: int) -> Fraction:
    return Fraction(sum(comb(n, k) * k**n for k in range(1, n + 1)), factorial(n))
