"""Truncated exponentials: graded series and distribution objects.

A graded object is a ConeObject with backend GRADED whose payload is a
GradedShape: a shape tree plus a flag saying which side is primal. The tree
nodes are

  ExpNode(base, trunc)    coordinates are multisets over the base
                          coordinates of size <= trunc, degree-major. The
                          series reading holds functions of arguments in
                          the positive unit ball of dual(base); the
                          distribution reading is spanned by the delta
                          vectors of such arguments.
  PolyNode(obj)           a polyhedral object sitting at grade 0. Always
                          read as the object whose primal ball is on the
                          distribution side; series-side constructors wrap
                          the dual.
  TensorNode(l, r, trunc) pairs of child coordinates with grade sum
                          <= trunc, left-major; weights multiply.
  SumNode(l, r, coproduct) disjoint union of coordinates (& / + at the
                          graded level). Structure only; no norms.

Pairing weights are the multiset multiplicities, so that a series f pairs
with delta_x to exactly f(x) (the convention is documented once, in
multisets). Linear maps act plainly on coordinates; the weights enter only
in pairings and adjoints.

Norms are certified brackets, never point values. The primal ball of a
distribution-side object is parametrized exactly by delta families over the
argument ball (BallScheme); a series norm is then the sup of a
nonnegative-coefficient polynomial over simplices, bracketed by the oracle.
The series-side ball has no exact finite parametrization, so distribution
norms are bracketed from inside by explicit series (singletons and the
constant series) and from outside by a coordinate box plus an LP relaxation
over finitely many sampled ball constraints.

One restriction is baked in: representable series have nonnegative
coordinates, and distribution norms take the sup against those. On genuine
delta mixtures this loses nothing (the constant-1 series already attains
the supremum); it is what keeps every bracket direction certified.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import islice, product
from typing import Any, Optional

from .cones import (
    Backend,
    ConeObject,
    check_membership,
    dual_object,
    in_ball,
    in_cone,
    materialize_p,
    materialize_q,
    norm_primal,
    one_obj,
    pairing,
)
from .errors import (
    BallError,
    CapabilityError,
    CompositionError,
    DimensionError,
    MembershipError,
)
from .lp import LpStatus, constraint, lp_maximize, problem
from .mall import Morphism, adjoint, mor, product_obj
from .multisets import (
    Mset,
    graded_count,
    graded_msets,
    monomial_value,
    mset_count,
    mset_positions,
    mset_union,
    msets,
    multiplicity,
)
from .oracle import (
    DEFAULT_PARAMS,
    Bracket,
    OracleParams,
    averaged_upper,
    simplex_polynomial_bounds,
)
from .polynomials import Polynomial, poly_product
from .rationals import MatQ, Q0, Q1, VecQ, mat, mat_vec, vec
from .symmetric import sym_power_matrix

DEFAULT_TRUNC = 3

# How many explicit ball members a scheme carries for lower bounds, and how
# many grid samples feed the polar LP relaxation.
HONEST_CAP = 32
SAMPLE_CAP = 200

# Nested exponentials grow like dim^trunc; refuse sizes that could not hold
# a dense morphism matrix anyway.
MAX_GRADED_DIM = 100_000


# ---------------------------------------------------------------------------
# Shape tree


@dataclass(frozen=True)
class ExpNode:
    base: ConeObject
    trunc: int


@dataclass(frozen=True)
class PolyNode:
    obj: ConeObject


@dataclass(frozen=True)
class TensorNode:
    left: Any
    right: Any
    trunc: int


@dataclass(frozen=True)
class SumNode:
    left: Any
    right: Any
    coproduct: bool


@dataclass(frozen=True)
class GradedShape:
    """Payload of a graded ConeObject. flipped() realizes duality: the
    primal side switches and every sum trades & for +."""

    node: Any
    series_primal: bool

    def flipped(self) -> "GradedShape":
        return GradedShape(_flip_sums(self.node), not self.series_primal)


def _flip_sums(node):
    if isinstance(node, SumNode):
        return SumNode(
            _flip_sums(node.left), _flip_sums(node.right), not node.coproduct
        )
    if isinstance(node, TensorNode):
        return TensorNode(_flip_sums(node.left), _flip_sums(node.right), node.trunc)
    return node


def _shape(h: ConeObject) -> GradedShape:
    if h.backend is not Backend.GRADED or not isinstance(h.graded, GradedShape):
        raise CapabilityError("not a graded object", h.label)
    return h.graded


# ---------------------------------------------------------------------------
# Coordinate layout


@lru_cache(maxsize=None)
def node_coords(node) -> tuple:
    """Coordinate labels, in the object's canonical order."""
    if isinstance(node, ExpNode):
        return graded_msets(node.base.dim, node.trunc)
    if isinstance(node, PolyNode):
        return tuple(range(node.obj.dim))
    if isinstance(node, TensorNode):
        lc, rc = node_coords(node.left), node_coords(node.right)
        lg, rg = node_grades(node.left), node_grades(node.right)
        return tuple(
            (a, b)
            for i, a in enumerate(lc)
            for j, b in enumerate(rc)
            if lg[i] + rg[j] <= node.trunc
        )
    if isinstance(node, SumNode):
        return tuple(("L", a) for a in node_coords(node.left)) + tuple(
            ("R", b) for b in node_coords(node.right)
        )
    raise TypeError(f"not a shape node: {node!r}")


@lru_cache(maxsize=None)
def node_grades(node) -> tuple[int, ...]:
    if isinstance(node, ExpNode):
        return tuple(len(m) for m in node_coords(node))
    if isinstance(node, PolyNode):
        return (0,) * node.obj.dim
    if isinstance(node, TensorNode):
        lg, rg = node_grades(node.left), node_grades(node.right)
        return tuple(a + b for a in lg for b in rg if a + b <= node.trunc)
    if isinstance(node, SumNode):
        return node_grades(node.left) + node_grades(node.right)
    raise TypeError(f"not a shape node: {node!r}")


@lru_cache(maxsize=None)
def node_weights(node) -> tuple[Fraction, ...]:
    if isinstance(node, ExpNode):
        return tuple(Fraction(multiplicity(m)) for m in node_coords(node))
    if isinstance(node, PolyNode):
        return node.obj.pairing_weights
    if isinstance(node, TensorNode):
        lw, rw = node_weights(node.left), node_weights(node.right)
        lg, rg = node_grades(node.left), node_grades(node.right)
        return tuple(
            a * b
            for i, a in enumerate(lw)
            for j, b in enumerate(rw)
            if lg[i] + rg[j] <= node.trunc
        )
    if isinstance(node, SumNode):
        return node_weights(node.left) + node_weights(node.right)
    raise TypeError(f"not a shape node: {node!r}")


@lru_cache(maxsize=None)
def node_index(node) -> dict:
    return {lbl: i for i, lbl in enumerate(node_coords(node))}


def graded_coords(h: ConeObject) -> tuple:
    return node_coords(_shape(h).node)


def graded_grades(h: ConeObject) -> tuple[int, ...]:
    return node_grades(_shape(h).node)


def _coord_labels(h: ConeObject) -> tuple:
    if h.backend is Backend.GRADED:
        return node_coords(_shape(h).node)
    return tuple(range(h.dim))


# ---------------------------------------------------------------------------
# Object constructors


def _graded_object(node, series_primal: bool, label: str) -> ConeObject:
    weights: Optional[tuple[Fraction, ...]] = node_weights(node)
    if all(w == 1 for w in weights):
        weights = None
    return ConeObject(
        dim=len(node_coords(node)),
        p_ball_gens=None,
        q_ball_gens=None,
        backend=Backend.GRADED,
        label=label,
        graded=GradedShape(node, series_primal),
        weights=weights,
    )


def whynot_obj(a: ConeObject, trunc: int = DEFAULT_TRUNC) -> ConeObject:
    """?a at the given truncation: positive series on the ball of a*."""
    if trunc < 0:
        raise ValueError("truncation must be >= 0")
    if a.backend is Backend.SPECTRAL:
        raise CapabilityError("exponentials reject spectral operands", a.label)
    if graded_count(a.dim, trunc) > MAX_GRADED_DIM:
        raise CapabilityError(
            f"graded dimension exceeds {MAX_GRADED_DIM}",
            f"?{a.label} at truncation {trunc} has {graded_count(a.dim, trunc)} "
            "coordinates; lower the truncation",
        )
    return _graded_object(ExpNode(a, trunc), True, f"?{a.label}")


def bang_obj(a: ConeObject, trunc: int = DEFAULT_TRUNC) -> ConeObject:
    """!a at the given truncation: the span of deltas over the ball of a."""
    return dual_object(whynot_obj(dual_object(a), trunc), label=f"!{a.label}")


def _node_trunc(node) -> int:
    if isinstance(node, (ExpNode, TensorNode)):
        return node.trunc
    if isinstance(node, SumNode):
        return max(_node_trunc(node.left), _node_trunc(node.right))
    return 0


def _dist_child(h: ConeObject, op: str):
    if h.backend is Backend.POLYHEDRAL:
        return PolyNode(h)
    if h.backend is Backend.GRADED:
        s = _shape(h)
        if s.series_primal:
            raise CapabilityError(
                f"{op} needs distribution-side factors",
                f"{h.label!r} is series-primal; dualize first",
            )
        return s.node
    raise CapabilityError(f"{op} rejects spectral operands", h.label)


def graded_tensor_obj(
    x: ConeObject, y: ConeObject, trunc: Optional[int] = None
) -> ConeObject:
    """Tensor with at least one distribution-side graded factor."""
    left = _dist_child(x, "graded tensor")
    right = _dist_child(y, "graded tensor")
    if isinstance(left, PolyNode) and isinstance(right, PolyNode):
        raise CapabilityError("graded tensor needs a graded factor", "use tensor_obj")
    if trunc is None:
        trunc = max(_node_trunc(left), _node_trunc(right))
    node = TensorNode(left, right, trunc)
    return _graded_object(node, False, f"({x.label} * {y.label})")


def graded_par_obj(
    x: ConeObject, y: ConeObject, trunc: Optional[int] = None
) -> ConeObject:
    """Par with at least one series-side graded factor; dual to the tensor."""
    for h in (x, y):
        if h.backend is Backend.GRADED and not _shape(h).series_primal:
            raise CapabilityError(
                "graded par needs series-side factors",
                f"{h.label!r} is distribution-primal; dualize first",
            )
    t = graded_tensor_obj(dual_object(x), dual_object(y), trunc)
    return dual_object(t, label=f"({x.label} | {y.label})")


def _sum_side(x: ConeObject, y: ConeObject, op: str) -> bool:
    sides = [
        _shape(h).series_primal for h in (x, y) if h.backend is Backend.GRADED
    ]
    if not sides:
        raise CapabilityError(
            f"{op} needs a graded summand", "use product_obj / coproduct_obj"
        )
    if len(sides) == 2 and sides[0] != sides[1]:
        raise CapabilityError(
            f"{op} needs summands on the same side", f"{x.label!r} vs {y.label!r}"
        )
    return sides[0]


def _sum_child(h: ConeObject, series_primal: bool, op: str):
    if h.backend is Backend.POLYHEDRAL:
        return PolyNode(dual_object(h) if series_primal else h)
    return _dist_child(dual_object(h) if series_primal else h, op)


def graded_product_obj(x: ConeObject, y: ConeObject) -> ConeObject:
    sp = _sum_side(x, y, "graded product")
    node = SumNode(
        _sum_child(x, sp, "graded product"), _sum_child(y, sp, "graded product"), False
    )
    return _graded_object(node, sp, f"({x.label} & {y.label})")


def graded_coproduct_obj(x: ConeObject, y: ConeObject) -> ConeObject:
    sp = _sum_side(x, y, "graded coproduct")
    node = SumNode(
        _sum_child(x, sp, "graded coproduct"),
        _sum_child(y, sp, "graded coproduct"),
        True,
    )
    return _graded_object(node, sp, f"({x.label} + {y.label})")


# ---------------------------------------------------------------------------
# Elements


def _check_element(h: ConeObject, coords: VecQ, series: bool) -> None:
    s = _shape(h)
    if s.series_primal != series:
        kind = "series" if series else "distribution"
        raise CapabilityError(
            f"a {kind} element needs the {kind} side primal", h.label
        )
    check_membership(h, coords)


@dataclass(frozen=True)
class GradedSeries:
    """Element of a series-primal graded object, coordinates in label order."""

    obj: ConeObject
    coords: VecQ

    def __post_init__(self):
        object.__setattr__(self, "coords", vec(self.coords))
        _check_element(self.obj, self.coords, series=True)

    def coord(self, label) -> Fraction:
        return self.coords[node_index(_shape(self.obj).node)[label]]


@dataclass(frozen=True)
class GradedDistribution:
    obj: ConeObject
    coords: VecQ

    def __post_init__(self):
        object.__setattr__(self, "coords", vec(self.coords))
        _check_element(self.obj, self.coords, series=False)

    def coord(self, label) -> Fraction:
        return self.coords[node_index(_shape(self.obj).node)[label]]


def delta(a: ConeObject, x, trunc: int = DEFAULT_TRUNC) -> GradedDistribution:
    """delta_x in !a: coordinates (1, x, x^2, ..., x^trunc)."""
    target = bang_obj(a, trunc)
    xq = vec(x)
    check_membership(a, xq)
    try:
        n = norm_primal(a, xq)
    except CapabilityError:
        n = graded_norm_bounds(a, xq).lower  # gate on the provable part
    if n > 1:
        raise BallError(f"delta needs ||x|| <= 1 in {a.label!r}", norm=n)
    coords = tuple(monomial_value(xq, m) for m in graded_msets(a.dim, trunc))
    return GradedDistribution(target, coords)


def series_eval(f: GradedSeries, x) -> Fraction:
    """f(x) = sum over multisets of multiplicity(m) * f_m * x^m."""
    node = _shape(f.obj).node
    if not isinstance(node, ExpNode):
        raise CapabilityError("evaluation needs a plain series object", f.obj.label)
    xq = vec(x)
    arg = dual_object(node.base)
    check_membership(arg, xq)
    try:
        n = norm_primal(arg, xq)
    except CapabilityError:
        n = None  # graded argument domain; no exact gate available
    if n is not None and n > 1:
        raise BallError(f"series argument escapes the ball of {arg.label!r}", norm=n)
    total = Q0
    for m, c in zip(node_coords(node), f.coords):
        if c:
            total += multiplicity(m) * c * monomial_value(xq, m)
    return total


def graded_pairing(f: GradedSeries, e: GradedDistribution) -> Fraction:
    """<f, e> under the multiset-weighted pairing; objects must be dual."""
    if f.obj != dual_object(e.obj):
        raise CompositionError("pairing needs mutually dual graded objects")
    return pairing(f.obj, f.coords, e.coords)


def pair_element(pair_obj: ConeObject, left_coords, right_coords) -> VecQ:
    """Coordinates of an elementary pair inside a tensor or par object."""
    node = _shape(pair_obj).node
    if not isinstance(node, TensorNode):
        raise CapabilityError("needs a graded pair object", pair_obj.label)
    li = node_index(node.left)
    ri = node_index(node.right)
    lc, rc = vec(left_coords), vec(right_coords)
    return tuple(lc[li[a]] * rc[ri[b]] for a, b in node_coords(node))


# ---------------------------------------------------------------------------
# Ball schemes


@dataclass(frozen=True)
class BallScheme:
    """Parametrized family of primal ball members, for norm brackets.

    polys[c] is coordinate c of the family member at simplex parameters t
    (one block per simplex, each with t >= 0 and sum <= 1). honest lists
    explicit certified ball members. exact means the family's sup equals
    the ball's sup for every nonnegative objective; otherwise the family
    dominates the ball and only upper bounds may be read off it.
    """

    blocks: tuple[int, ...]
    polys: tuple[Polynomial, ...]
    honest: tuple[VecQ, ...]
    exact: bool


@lru_cache(maxsize=None)
def primal_ball_scheme(h: ConeObject) -> BallScheme:
    if h.backend is Backend.POLYHEDRAL:
        g = h if h.p_ball_gens is not None else materialize_p(h)
        gens = g.p_ball_gens
        k = len(gens)
        if k == 0:
            zero = tuple(Q0 for _ in range(h.dim))
            polys = tuple(Polynomial.zero(0) for _ in range(h.dim))
            return BallScheme((), polys, (zero,), True)
        polys = tuple(
            Polynomial.linear(k, [u[c] for u in gens]) for c in range(h.dim)
        )
        return BallScheme((k,), polys, gens, True)
    if h.backend is Backend.SPECTRAL:
        raise CapabilityError("no ball scheme for the spectral backend", h.label)
    shape = _shape(h)
    if not shape.series_primal:
        return _node_scheme(shape.node)
    return _box_scheme(h)


@lru_cache(maxsize=None)
def _node_scheme(node) -> BallScheme:
    """Distribution-side ball family of a shape node."""
    if isinstance(node, PolyNode):
        return primal_ball_scheme(node.obj)
    if isinstance(node, ExpNode):
        inner = primal_ball_scheme(dual_object(node.base))
        nv = sum(inner.blocks)
        coords = node_coords(node)
        polys = tuple(poly_product((inner.polys[c] for c in m), nv) for m in coords)
        pts = [tuple(Q0 for _ in range(node.base.dim))]  # the vacuum delta_0
        pts.extend(inner.honest)
        honest = tuple(
            tuple(monomial_value(y, m) for m in coords) for y in pts[:HONEST_CAP]
        )
        return BallScheme(inner.blocks, polys, honest, inner.exact)
    if isinstance(node, TensorNode):
        sl, sr = _node_scheme(node.left), _node_scheme(node.right)
        nl = sum(sl.blocks)
        nv = nl + sum(sr.blocks)
        li, ri = node_index(node.left), node_index(node.right)
        lp = [p.shift_vars(0, nv) for p in sl.polys]
        rp = [p.shift_vars(nl, nv) for p in sr.polys]
        coords = node_coords(node)
        polys = tuple(lp[li[a]] * rp[ri[b]] for a, b in coords)
        honest = tuple(
            tuple(za[li[a]] * zb[ri[b]] for a, b in coords)
            for za, zb in islice(product(sl.honest, sr.honest), HONEST_CAP)
        )
        return BallScheme(sl.blocks + sr.blocks, polys, honest, sl.exact and sr.exact)
    if isinstance(node, SumNode):
        raise CapabilityError(
            "norms over graded sums are not supported", "project onto a summand"
        )
    raise TypeError(f"not a shape node: {node!r}")


@lru_cache(maxsize=None)
def _box_scheme(h: ConeObject) -> BallScheme:
    """Outer box for a series-side ball from per-coordinate sup brackets.

    A representable f in the unit ball satisfies w_c f_c z_c <= <f, z> <= 1
    at every distribution ball member z, so f_c <= 1/(w_c M_c) with M_c the
    coordinate sup. M_c is lower-bounded by honest members (and by the
    oracle when the distribution family is exact), making the corners safe
    overestimates; singletons e_c/(w_c upper(M_c)) are certified members.
    """
    s = primal_ball_scheme(dual_object(h))
    w = h.pairing_weights
    corners = []
    honest = []
    for c in range(h.dim):
        br = simplex_polynomial_bounds(s.polys[c], s.blocks)
        m_lo = max((z[c] for z in s.honest), default=Q0)
        if s.exact and br.lower > m_lo:
            m_lo = br.lower
        if m_lo <= 0:
            raise CapabilityError(
                "series ball is unbounded in a dead coordinate",
                f"coordinate {c} of {h.label!r} never appears on the "
                "distribution side",
            )
        corners.append(Polynomial.constant(0, Q1 / (w[c] * m_lo)))
        point = [Q0] * h.dim
        point[c] = Q1 / (w[c] * br.upper)
        honest.append(tuple(point))
    return BallScheme((), tuple(corners), tuple(honest), False)


# ---------------------------------------------------------------------------
# Norm brackets

# In every bracket below, argmax (when present) holds the coordinates of a
# dual-ball member achieving the lower bound.


def _honest_lower(h: ConeObject, e: VecQ, scheme: BallScheme):
    w = h.pairing_weights
    best, arg = Q0, None
    for z in scheme.honest:
        v = sum((wc * ec * zc for wc, ec, zc in zip(w, e, z)), Q0)
        if v > best:
            best, arg = v, z
    return best, arg


def _delta_like_bounds(node, e: VecQ) -> Optional[Bracket]:
    """Exact distribution norms for recognizable shapes."""
    if not isinstance(node, ExpNode):
        return None
    base = node.base
    coords = node_coords(node)
    idx = node_index(node)
    arg = dual_object(base)
    scale = e[idx[()]]
    if scale > 0:
        if node.trunc >= 1:
            x = tuple(e[idx[(c,)]] / scale for c in range(base.dim))
        else:
            x = tuple(Q0 for _ in range(base.dim))
        if all(e[i] == scale * monomial_value(x, m) for i, m in enumerate(coords)):
            try:
                ok = in_ball(arg, x)
            except CapabilityError:
                ok = False
            if ok:
                return Bracket(scale, scale, x, "recognized multiple of a delta")
    elif node.trunc >= 1 and all(
        e[i] == 0 for i, m in enumerate(coords) if len(m) != 1
    ):
        x = tuple(e[idx[(c,)]] for c in range(base.dim))
        try:
            if in_cone(arg, x):
                v = norm_primal(arg, x)
                return Bracket(v, v, None, "pure grade-1 distribution")
        except CapabilityError:
            pass
    return None


def _sample_points(blocks: tuple[int, ...]):
    """Rational grid over the simplex product: resolution-2 mixes plus the
    strictly positive center of each block."""
    per_block = []
    for b in blocks:
        cands = [
            tuple(Fraction(k, 2) for k in comp) for comp in _compositions2(b)
        ]
        cands.append(tuple(Fraction(1, b) for _ in range(b)))
        per_block.append(cands)
    for combo in islice(product(*per_block), SAMPLE_CAP):
        yield tuple(t for block in combo for t in block)


def _compositions2(parts: int):
    if parts == 1:
        yield (2,)
        return
    for first in range(3):
        for rest in _compositions2(parts - 1):
            if first + sum(rest) <= 2:
                yield (first,) + rest


def _relaxed_polar_upper(
    h: ConeObject, e: VecQ, params: OracleParams
) -> Optional[Fraction]:
    """LP over finitely many sampled ball constraints. The feasible set
    contains the representable series ball, so the optimum is an upper
    bound; None when the sample leaves it unbounded."""
    s = _node_scheme(_shape(h).node)
    w = h.pairing_weights
    samples = list(s.honest)
    for t in _sample_points(s.blocks):
        samples.append(tuple(p.eval_exact(t) for p in s.polys))
    cons = [
        constraint([w[c] * z[c] for c in range(h.dim)], "<=", 1) for z in samples
    ]
    res = lp_maximize(problem([w[c] * e[c] for c in range(h.dim)], cons))
    if res.status is LpStatus.OPTIMAL:
        return res.value
    return None


def _dist_bounds(h: ConeObject, e: VecQ, params: OracleParams) -> Bracket:
    box = primal_ball_scheme(dual_object(h))
    w = h.pairing_weights
    upper = sum(
        (w[c] * e[c] * box.polys[c].constant_term() for c in range(h.dim)), Q0
    )
    lower, arg = _honest_lower(h, e, box)
    lp_up = _relaxed_polar_upper(h, e, params)
    note = "singleton-series lower / box upper"
    if lp_up is not None and lp_up < upper:
        upper = lp_up
        note = "singleton-series lower / sampled-polar LP upper"
    return Bracket(lower, upper, arg, note)


def _series_bounds(h: ConeObject, e: VecQ, params: OracleParams) -> Bracket:
    s = primal_ball_scheme(dual_object(h))
    w = h.pairing_weights
    nv = sum(s.blocks)
    pol = Polynomial.zero(nv)
    for c in range(h.dim):
        if e[c]:
            pol = pol + s.polys[c].scale(w[c] * e[c])
    low, arg = _honest_lower(h, e, s)
    if s.exact:
        br = simplex_polynomial_bounds(pol, s.blocks, params)
        if br.lower > low:
            low = br.lower
            arg = (
                tuple(p.eval_exact(br.argmax) for p in s.polys)
                if br.argmax is not None
                else None
            )
        return Bracket(low, br.upper, arg, f"distribution-family oracle ({br.note})")
    return Bracket(
        low, averaged_upper(pol, s.blocks), arg, "honest lower / averaged upper"
    )


def _primal_norm_bounds(h: ConeObject, e: VecQ, params: OracleParams) -> Bracket:
    shape = _shape(h)
    check_membership(h, e)
    if all(c == 0 for c in e):
        return Bracket(Q0, Q0, None, "zero element")
    if shape.series_primal:
        return _series_bounds(h, e, params)
    exact = _delta_like_bounds(shape.node, e)
    if exact is not None:
        return exact
    return _dist_bounds(h, e, params)


def series_norm_bounds(
    f: GradedSeries, params: OracleParams = DEFAULT_PARAMS
) -> Bracket:
    """Bracket sup over the argument ball of f(x)."""
    return _primal_norm_bounds(f.obj, f.coords, params)


def distribution_norm_bounds(
    e: GradedDistribution, params: OracleParams = DEFAULT_PARAMS
) -> Bracket:
    """Bracket the distribution norm (sup against representable series)."""
    return _primal_norm_bounds(e.obj, e.coords, params)


def graded_norm_bounds(
    h: ConeObject, coords, params: OracleParams = DEFAULT_PARAMS
) -> Bracket:
    return _primal_norm_bounds(h, vec(coords), params)


# ---------------------------------------------------------------------------
# Structure morphisms


def eta(a: ConeObject, trunc: int = DEFAULT_TRUNC) -> Morphism:
    """Dereliction a -> ?a: u becomes the linear series y -> <u, y>."""
    if trunc < 1:
        raise CapabilityError("dereliction needs truncation >= 1", f"trunc={trunc}")
    target = whynot_obj(a, trunc)
    idx = node_index(_shape(target).node)
    w = a.pairing_weights
    rows = [[Q0] * a.dim for _ in range(target.dim)]
    for c in range(a.dim):
        rows[idx[(c,)]][c] = w[c]
    return mor(a, target, rows)


def monoid_unit(a: ConeObject, trunc: int = DEFAULT_TRUNC) -> Morphism:
    """1 -> ?a: the constant series."""
    target = whynot_obj(a, trunc)
    idx = node_index(_shape(target).node)
    rows = [[Q0] for _ in range(target.dim)]
    rows[idx[()]][0] = Q1
    return mor(one_obj(), target, rows)


def mu(a: ConeObject, trunc: int = DEFAULT_TRUNC) -> Morphism:
    """Digging multiplication ??a -> ?a: substitute the delta series.

    Column M is a multiset of ?a coordinates; the image lands on their
    union when it still fits the truncation and is dropped otherwise. The
    multiplicity ratio is forced by the monad unit law.
    """
    inner = whynot_obj(a, trunc)
    outer = whynot_obj(inner, trunc)
    inner_coords = node_coords(_shape(inner).node)
    inner_idx = node_index(_shape(inner).node)
    rows = [[Q0] * outer.dim for _ in range(inner.dim)]
    for j, m in enumerate(node_coords(_shape(outer).node)):
        kt = mset_union(*(inner_coords[p] for p in m))
        if len(kt) <= trunc:
            rows[inner_idx[kt]][j] = Fraction(multiplicity(m), multiplicity(kt))
    return mor(outer, inner, rows)


def diag_mult(a: ConeObject, trunc: int = DEFAULT_TRUNC) -> Morphism:
    """?a | ?a -> ?a: multiply the two functions and restrict to the
    diagonal; in coordinates, the Cauchy product of the gradings."""
    w = whynot_obj(a, trunc)
    src = graded_par_obj(w, w, trunc)
    tgt_idx = node_index(_shape(w).node)
    rows = [[Q0] * src.dim for _ in range(w.dim)]
    for j, (m, n) in enumerate(node_coords(_shape(src).node)):
        kt = mset_union(m, n)
        rows[tgt_idx[kt]][j] = Fraction(
            multiplicity(m) * multiplicity(n), multiplicity(kt)
        )
    return mor(src, w, rows)


def _pair_mor(src: ConeObject, tgt: ConeObject, f: Morphism, g: Morphism) -> Morphism:
    fs = {l: i for i, l in enumerate(_coord_labels(f.source))}
    ft = {l: i for i, l in enumerate(_coord_labels(f.target))}
    gs = {l: i for i, l in enumerate(_coord_labels(g.source))}
    gt = {l: i for i, l in enumerate(_coord_labels(g.target))}
    sp = node_coords(_shape(src).node)
    tp = node_coords(_shape(tgt).node)
    rows = [[Q0] * len(sp) for _ in tp]
    for j, (sa, sb) in enumerate(sp):
        for i, (ta, tb) in enumerate(tp):
            v = f.matrix[ft[ta]][fs[sa]] * g.matrix[gt[tb]][gs[sb]]
            if v:
                rows[i][j] = v
    return mor(src, tgt, rows)


def graded_tensor_mor(
    f: Morphism, g: Morphism, trunc: Optional[int] = None
) -> Morphism:
    src = graded_tensor_obj(f.source, g.source, trunc)
    tgt = graded_tensor_obj(f.target, g.target, trunc)
    return _pair_mor(src, tgt, f, g)


def graded_par_mor(f: Morphism, g: Morphism, trunc: Optional[int] = None) -> Morphism:
    src = graded_par_obj(f.source, g.source, trunc)
    tgt = graded_par_obj(f.target, g.target, trunc)
    return _pair_mor(src, tgt, f, g)


def graded_relabel(src: ConeObject, tgt: ConeObject, fn) -> Morphism:
    """Isometric 0/1 relabeling (associators, unitors). fn must send source
    labels bijectively onto target labels with equal pairing weights."""
    sc = _coord_labels(src)
    tidx = {l: i for i, l in enumerate(_coord_labels(tgt))}
    if len(sc) != len(tidx):
        raise DimensionError(len(tidx), len(sc), "relabel")
    ws, wt = src.pairing_weights, tgt.pairing_weights
    rows = [[Q0] * len(sc) for _ in tidx]
    seen = set()
    for j, lbl in enumerate(sc):
        out = fn(lbl)
        if out not in tidx or out in seen:
            raise CompositionError(f"relabel is not a bijection at {lbl!r}")
        i = tidx[out]
        if ws[j] != wt[i]:
            raise CompositionError(f"relabel changes the pairing weight at {lbl!r}")
        seen.add(out)
        rows[i][j] = Q1
    return mor(src, tgt, rows)


def _require_contraction(s: Morphism, what: str) -> None:
    src = s.source
    try:
        if src.p_ball_gens is None:
            src = materialize_p(src)
        n = max(
            (norm_primal(s.target, mat_vec(s.matrix, u)) for u in src.p_ball_gens),
            default=Q0,
        )
    except CapabilityError:
        return  # no exact norm available (graded endpoints); trust the caller
    if n > 1:
        raise BallError(f"{what} only transports contractions", norm=n)


def whynot_mor(l: Morphism, trunc: int = DEFAULT_TRUNC) -> Morphism:
    """?l: ?A -> ?B for a contraction l: A -> B, by precomposition with the
    adjoint: the image series is f(l* y), expanded monomial by monomial."""
    _require_contraction(adjoint(l), "?")
    src = whynot_obj(l.source, trunc)
    tgt = whynot_obj(l.target, trunc)
    pullback = adjoint(l).matrix  # rows: source coords, columns: target-dual
    dy = l.target.dim
    tgt_idx = node_index(_shape(tgt).node)
    lin = [Polynomial.linear(dy, pullback[c]) for c in range(l.source.dim)]
    rows = [[Q0] * src.dim for _ in range(tgt.dim)]
    for j, m in enumerate(node_coords(_shape(src).node)):
        pol = poly_product((lin[c] for c in m), dy).scale(multiplicity(m))
        for exps, coeff in pol.terms.items():
            nu = _exps_to_mset(exps)
            rows[tgt_idx[nu]][j] = coeff / multiplicity(nu)
    return mor(src, tgt, rows)


def bang_mor(s: Morphism, trunc: int = DEFAULT_TRUNC) -> Morphism:
    """!s: !A -> !B, delta_x -> delta_{sx}; block-diagonal symmetric powers."""
    _require_contraction(s, "!")
    src = bang_obj(s.source, trunc)
    tgt = bang_obj(s.target, trunc)
    ds, dt = s.source.dim, s.target.dim
    rows = [[Q0] * src.dim for _ in range(tgt.dim)]
    roff = coff = 0
    for n in range(trunc + 1):
        block = sym_power_matrix(s.matrix, n, ds, dt)
        for i, brow in enumerate(block):
            for j, v in enumerate(brow):
                if v:
                    rows[roff + i][coff + j] = v
        roff += mset_count(dt, n)
        coff += mset_count(ds, n)
    return mor(src, tgt, rows)


def exp_iso(
    a: ConeObject, b: ConeObject, trunc: int = DEFAULT_TRUNC
) -> tuple[Morphism, Morphism]:
    """The exponential isomorphism !(a x b) = !a (x) !b.

    A multiset over the product coordinates splits into its a-part and
    b-part; the split respects grades, so both directions are total 0/1
    matrices and mutually inverse at every truncation.
    """
    for h in (a, b):
        if h.backend is not Backend.POLYHEDRAL:
            raise CapabilityError(
                "the exponential isomorphism needs polyhedral factors", h.label
            )
    src = bang_obj(product_obj(a, b), trunc)
    tgt = graded_tensor_obj(bang_obj(a, trunc), bang_obj(b, trunc), trunc)
    da = a.dim
    tidx = node_index(_shape(tgt).node)
    rows = [[Q0] * src.dim for _ in range(tgt.dim)]
    for j, m in enumerate(node_coords(_shape(src).node)):
        ka = tuple(c for c in m if c < da)
        kb = tuple(c - da for c in m if c >= da)
        rows[tidx[(ka, kb)]][j] = Q1
    phi = mor(src, tgt, rows)
    inv_rows = [[rows[i][j] for i in range(tgt.dim)] for j in range(src.dim)]
    phi_inv = mor(tgt, src, inv_rows)
    return phi, phi_inv


def _exps_to_mset(exps: tuple[int, ...]) -> Mset:
    return tuple(c for c, k in enumerate(exps) for _ in range(k))


def _mset_exps(m: Mset, dim: int) -> tuple[int, ...]:
    out = [0] * dim
    for c in m:
        out[c] += 1
    return tuple(out)


# ---------------------------------------------------------------------------
# Analytic maps


@dataclass(frozen=True)
class AnalyticMap:
    """Positive analytic map between polyhedral objects, truncated.

    grades[n] is a target.dim by mset_count(source.dim, n) matrix acting on
    the plain power coordinates of x^n; evaluation sums the grade images.
    """

    source: ConeObject
    target: ConeObject
    trunc: int
    grades: tuple[MatQ, ...]

    def __post_init__(self):
        for h in (self.source, self.target):
            if h.backend is not Backend.POLYHEDRAL:
                raise CapabilityError(
                    "analytic maps run between polyhedral objects", h.label
                )
        if len(self.grades) != self.trunc + 1:
            raise DimensionError(self.trunc + 1, len(self.grades), "analytic grades")
        for n, g in enumerate(self.grades):
            if len(g) != self.target.dim:
                raise DimensionError(self.target.dim, len(g), f"grade {n} rows")
            cols = mset_count(self.source.dim, n)
            for row in g:
                if len(row) != cols:
                    raise DimensionError(cols, len(row), f"grade {n} columns")
                for v in row:
                    if v < 0:
                        raise MembershipError(
                            f"grade {n} has a negative coefficient ({v})"
                        )


def analytic_map(source: ConeObject, target: ConeObject, grades) -> AnalyticMap:
    gs = tuple(mat(g) for g in grades)
    return AnalyticMap(source, target, len(gs) - 1, gs)


def analytic_eval(f: AnalyticMap, x) -> VecQ:
    """f(x) = sum of the grade images of the power coordinates of x."""
    xq = vec(x)
    check_membership(f.source, xq)
    n = norm_primal(f.source, xq)
    if n > 1:
        raise BallError(f"analytic argument escapes the ball of {f.source.label!r}", norm=n)
    out = [Q0] * f.target.dim
    for deg, g in enumerate(f.grades):
        powers = tuple(monomial_value(xq, m) for m in msets(f.source.dim, deg))
        for c, v in enumerate(mat_vec(g, powers)):
            out[c] += v
    return tuple(out)


def analytic_as_morphism(f: AnalyticMap) -> Morphism:
    """The same data as a linear map !source -> target (grades side by side);
    applying it to delta_x gives exactly analytic_eval(f, x)."""
    src = bang_obj(f.source, f.trunc)
    rows: list[list[Fraction]] = [[] for _ in range(f.target.dim)]
    for g in f.grades:
        for row, grow in zip(rows, g):
            row.extend(grow)
    return mor(src, f.target, rows)


def analytic_from_hom(h: Morphism) -> AnalyticMap:
    """Inverse of analytic_as_morphism: slice the grade blocks back out."""
    shape = _shape(h.source)
    node = shape.node
    if shape.series_primal or not isinstance(node, ExpNode):
        raise CapabilityError(
            "needs a morphism out of a bang object", h.source.label
        )
    source = dual_object(node.base)
    grades = []
    off = 0
    for n in range(node.trunc + 1):
        k = mset_count(source.dim, n)
        grades.append(tuple(tuple(row[off : off + k]) for row in h.matrix))
        off += k
    return AnalyticMap(source, h.target, node.trunc, tuple(grades))


def analytic_norm_bounds(
    f: AnalyticMap, params: OracleParams = DEFAULT_PARAMS
) -> Bracket:
    """Bracket sup over the source ball of ||f(x)||: one oracle run per
    dual generator of the target, combined by taking the max."""
    s = primal_ball_scheme(f.source)
    nv = sum(s.blocks)
    mono: dict[Mset, Polynomial] = {}
    for n in range(f.trunc + 1):
        for m in msets(f.source.dim, n):
            mono[m] = poly_product((s.polys[d] for d in m), nv)
    coord_polys = []
    for c in range(f.target.dim):
        p = Polynomial.zero(nv)
        for n, g in enumerate(f.grades):
            for pos, m in enumerate(msets(f.source.dim, n)):
                if g[c][pos]:
                    p = p + mono[m].scale(g[c][pos])
        coord_polys.append(p)
    tq = materialize_q(f.target)
    wt = f.target.pairing_weights
    lower = upper = Q0
    arg = None
    for psi in tq.q_ball_gens:
        pol = Polynomial.zero(nv)
        for c in range(f.target.dim):
            if psi[c]:
                pol = pol + coord_polys[c].scale(wt[c] * psi[c])
        br = simplex_polynomial_bounds(pol, s.blocks, params)
        if br.lower > lower:
            lower = br.lower
            arg = (
                tuple(p.eval_exact(br.argmax) for p in s.polys)
                if br.argmax is not None
                else None
            )
        if br.upper > upper:
            upper = br.upper
    return Bracket(lower, upper, arg, "max over target dual generators")


def analytic_compose(
    g: AnalyticMap, f: AnalyticMap, trunc: Optional[int] = None
) -> AnalyticMap:
    """(g truncated) after f, coefficients by truncated substitution.

    Requires f to map the ball into the ball; with only a bracket for
    ||f||, the gate fires when the violation is provable (lower bound > 1).
    """
    if f.target != g.source:
        raise CompositionError("analytic composition needs a matching middle object")
    if trunc is None:
        trunc = max(f.trunc, g.trunc)
    fb = analytic_norm_bounds(f)
    if fb.lower > 1:
        raise BallError("composition needs ||f|| <= 1", norm=fb.lower)
    dp, dq = f.source.dim, g.source.dim
    middle = []
    for qc in range(dq):
        p = Polynomial.zero(dp)
        for n, gr in enumerate(f.grades):
            for pos, m in enumerate(msets(dp, n)):
                if gr[qc][pos]:
                    p = p + Polynomial.monomial(dp, _mset_exps(m, dp), gr[qc][pos])
        middle.append(p)
    out = [
        [[Q0] * mset_count(dp, n) for _ in range(g.target.dim)]
        for n in range(trunc + 1)
    ]
    for r in range(g.target.dim):
        gpoly = Polynomial.zero(dq)
        for n, gr in enumerate(g.grades):
            for pos, m in enumerate(msets(dq, n)):
                if gr[r][pos]:
                    gpoly = gpoly + Polynomial.monomial(dq, _mset_exps(m, dq), gr[r][pos])
        comp = gpoly.substitute(middle, max_degree=trunc)
        for exps, coeff in comp.terms.items():
            n = sum(exps)
            out[n][r][mset_positions(dp, n)[_exps_to_mset(exps)]] = coeff
    return AnalyticMap(f.source, g.target, trunc, tuple(mat(g_) for g_ in out))
