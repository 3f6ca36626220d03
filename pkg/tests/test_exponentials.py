"""Truncated exponentials: objects, deltas, norms, monad, the iso.

Hand-derived anchors used below, all over the two-point base:

  * ?(Bool*) at N=2 holds series on the ball of Bool (hull of e1, e2).
    f = 1 + (1/2) x1 x2 as coordinates is (1, 0, 0, 0, 1/2, 0); its sup on
    the segment (t, 1-t) is 1 + t(1-t), attained at t = 1/2 with value 5/4.
    The averaged upper bound groups f's two terms as 1 + (1/2)/C(2;1,1),
    giving 3/2.
  * delta_{(1,0)} at N=2 lists the powers of (1, 0): (1, 1, 0, 1, 0, 0).
  * <x1 x2 form, delta_{(1/2,1/2)}> = 2 * (1/2) * (1/4) = 1/4.
"""

from fractions import Fraction as F
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conelogic.backends import bool_obj, cube_pcs, simplex_pcs
from conelogic.cones import dual_object, one_obj, pairing, norm_primal
from conelogic.errors import (
    BallError,
    CapabilityError,
    CompositionError,
    MembershipError,
)
from conelogic.exponentials import (
    AnalyticMap,
    GradedDistribution,
    GradedSeries,
    analytic_as_morphism,
    analytic_compose,
    analytic_eval,
    analytic_from_hom,
    analytic_map,
    analytic_norm_bounds,
    bang_mor,
    bang_obj,
    delta,
    diag_mult,
    distribution_norm_bounds,
    eta,
    exp_iso,
    graded_coords,
    graded_coproduct_obj,
    graded_norm_bounds,
    graded_pairing,
    graded_par_mor,
    graded_par_obj,
    graded_product_obj,
    graded_relabel,
    graded_tensor_obj,
    monoid_unit,
    mu,
    pair_element,
    series_eval,
    series_norm_bounds,
    whynot_mor,
    whynot_obj,
)
from conelogic.mall import adjoint, compose, identity, mor, product_obj
from conelogic.rationals import vec

Bool = bool_obj()
BoolStar = dual_object(Bool)

rat01 = st.fractions(min_value=0, max_value=1, max_denominator=8)


def contraction_2x2(draw):
    # column sums <= 1 keep the map inside the Bool ball
    a, b = draw(rat01), draw(rat01)
    c = draw(st.fractions(min_value=0, max_value=1, max_denominator=8))
    rows = [[a * F(1, 2), b * F(1, 2)], [c * F(1, 2), F(1, 2) - b * F(1, 2)]]
    return mor(Bool, Bool, rows)


# -- objects and elements ----------------------------------------------------


def test_whynot_layout():
    w = whynot_obj(Bool, 2)
    assert w.dim == 6
    assert graded_coords(w) == ((), (0,), (1,), (0, 0), (0, 1), (1, 1))
    assert w.pairing_weights == (F(1), F(1), F(1), F(1), F(2), F(1))
    assert w.label == "?Bool"


def test_whynot_trunc_zero_and_guardrails():
    assert whynot_obj(Bool, 0).dim == 1
    with pytest.raises(ValueError):
        whynot_obj(Bool, -1)
    with pytest.raises(CapabilityError):
        whynot_obj(whynot_obj(whynot_obj(Bool, 3), 3), 3)  # dimension explosion


def test_bang_is_dual_of_whynot():
    bg = bang_obj(Bool, 2)
    assert bg.label == "!Bool"
    assert dual_object(bg) == whynot_obj(BoolStar, 2)
    assert dual_object(whynot_obj(Bool, 2)) == bang_obj(BoolStar, 2)


def test_delta_coordinates():
    assert delta(Bool, (F(1), F(0)), 2).coords == (1, 1, 0, 1, 0, 0)
    assert delta(Bool, (F(0), F(0)), 2).coords == (1, 0, 0, 0, 0, 0)
    d = delta(Bool, (F(1, 2), F(1, 2)), 2)
    assert d.coords == (1, F(1, 2), F(1, 2), F(1, 4), F(1, 4), F(1, 4))


def test_delta_rejects_points_outside_the_ball():
    with pytest.raises(BallError):
        delta(Bool, (F(1), F(1, 2)), 2)  # norm 3/2 in Bool
    with pytest.raises(MembershipError):
        delta(Bool, (F(-1), F(0)), 2)


def test_element_side_checks():
    w = whynot_obj(BoolStar, 2)
    bg = bang_obj(Bool, 2)
    with pytest.raises(CapabilityError):
        GradedSeries(bg, (1, 0, 0, 0, 0, 0))
    with pytest.raises(CapabilityError):
        GradedDistribution(w, (1, 0, 0, 0, 0, 0))
    with pytest.raises(MembershipError):
        GradedSeries(w, (1, -1, 0, 0, 0, 0))


def test_series_eval_and_pairing_agree_on_deltas():
    w = whynot_obj(BoolStar, 2)
    f = GradedSeries(w, (F(1), 0, 0, 0, F(1, 2), 0))
    x = (F(1, 2), F(1, 2))
    assert series_eval(f, x) == F(5, 4)
    assert graded_pairing(f, delta(Bool, x, 2)) == F(5, 4)
    g = GradedSeries(w, (0, 0, 0, 0, F(1, 2), 0))
    assert graded_pairing(g, delta(Bool, x, 2)) == F(1, 4)


def test_series_eval_gates_the_argument():
    w = whynot_obj(BoolStar, 2)
    f = GradedSeries(w, (F(1), 0, 0, 0, 0, 0))
    with pytest.raises(BallError):
        series_eval(f, (F(1), F(1, 2)))


def test_pairing_requires_dual_objects():
    w = whynot_obj(Bool, 2)  # not the dual of !Bool
    f = GradedSeries(w, (F(1), 0, 0, 0, 0, 0))
    with pytest.raises(CompositionError):
        graded_pairing(f, delta(Bool, (F(1), F(0)), 2))


# -- norms -------------------------------------------------------------------


def test_series_norm_bracket_pinned():
    w = whynot_obj(BoolStar, 2)
    f = GradedSeries(w, (F(1), 0, 0, 0, F(1, 2), 0))
    br = series_norm_bounds(f)
    assert br.lower == F(5, 4)
    assert br.upper == F(3, 2)
    # the lower bound comes with a distribution witness
    assert br.argmax == delta(Bool, (F(1, 2), F(1, 2)), 2).coords


def test_series_norm_exact_when_degree_at_most_one():
    w = whynot_obj(BoolStar, 2)
    f = GradedSeries(w, (F(1, 3), F(1, 4), F(1, 2), 0, 0, 0))
    br = series_norm_bounds(f)
    assert br.lower == br.upper == F(1, 3) + F(1, 2)


def test_constant_series_norm_is_the_constant():
    w = whynot_obj(BoolStar, 3)
    f = GradedSeries(w, (F(3, 7),) + (F(0),) * (w.dim - 1))
    br = series_norm_bounds(f)
    assert br.lower == br.upper == F(3, 7)


def test_delta_norm_recognized_exactly():
    d = delta(Bool, (F(1, 2), F(1, 3)), 3)
    br = distribution_norm_bounds(d)
    assert br.lower == br.upper == 1
    e = GradedDistribution(d.obj, tuple(F(2, 5) * c for c in d.coords))
    bs = distribution_norm_bounds(e)
    assert bs.lower == bs.upper == F(2, 5)


def test_delta_norm_upper_within_tolerance_on_pcs_base():
    # ||delta_x|| = 1 on the nose; the bracket may not exceed 1 + 1e-6
    for x in [(F(1), F(1)), (F(1, 3), F(2, 3)), (F(0), F(1))]:
        br = distribution_norm_bounds(delta(cube_pcs(2), x, 3))
        assert br.lower == 1
        assert br.upper <= F(1) + F(1, 10**6)


def test_pure_grade_one_distribution_norm_exact():
    bg = bang_obj(Bool, 2)
    e = GradedDistribution(bg, (0, F(1, 2), F(1, 3), 0, 0, 0))
    br = distribution_norm_bounds(e)
    assert br.lower == br.upper == norm_primal(Bool, (F(1, 2), F(1, 3)))


def test_zero_element_norm():
    bg = bang_obj(Bool, 2)
    br = distribution_norm_bounds(GradedDistribution(bg, (0,) * 6))
    assert br.lower == br.upper == 0


def test_delta_mix_bracket_contains_total_mass():
    # convex mixes of deltas have norm equal to their mass
    rng = random.Random(3)
    bg = bang_obj(simplex_pcs(2), 3)
    for _ in range(5):
        pts = [
            vec([F(rng.randint(0, 3), 6), F(rng.randint(0, 3), 6)])
            for _ in range(3)
        ]
        lam = [F(1, 4), F(1, 4), F(1, 2)]
        coords = [F(0)] * bg.dim
        for l, p in zip(lam, pts):
            if sum(p) > 1:
                p = (p[0] / 2, p[1] / 2)
            dc = delta(simplex_pcs(2), p, 3).coords
            coords = [c + l * d for c, d in zip(coords, dc)]
        br = graded_norm_bounds(bg, coords)
        assert br.lower <= 1 <= br.upper
        assert br.lower >= max(lam)  # the constant series sees each atom


def test_norm_bracket_sound_against_sampled_pairings():
    # any series/distribution pair in their balls pairs below the brackets
    w = whynot_obj(BoolStar, 2)
    f = GradedSeries(w, (F(1, 2), F(1, 4), 0, 0, F(1, 4), F(1, 8)))
    br = series_norm_bounds(f)
    rng = random.Random(9)
    for _ in range(20):
        t = F(rng.randint(0, 8), 8)
        x = (t, 1 - t)
        assert series_eval(f, x) <= br.upper
    assert br.lower <= br.upper


def test_tensor_of_bangs_norm():
    s = simplex_pcs(2)
    tt = graded_tensor_obj(bang_obj(s, 2), bang_obj(s, 2), 2)
    pe = pair_element(
        tt,
        delta(s, (F(1, 2), F(1, 2)), 2).coords,
        delta(s, (F(1, 3), F(0)), 2).coords,
    )
    br = graded_norm_bounds(tt, pe)
    assert br.lower == br.upper == 1


def test_sum_objects_carry_no_norms():
    w = whynot_obj(Bool, 2)
    wp = graded_product_obj(w, w)
    assert wp.dim == 12
    assert dual_object(wp) == graded_coproduct_obj(
        dual_object(w), dual_object(w)
    )
    # the zero element short-circuits; anything else has no norm
    assert graded_norm_bounds(wp, (F(0),) * 12).upper == 0
    with pytest.raises(CapabilityError):
        graded_norm_bounds(wp, (F(1),) + (F(0),) * 11)


def test_whynot_rejects_spectral():
    from conelogic.backends import qcs_object

    with pytest.raises(CapabilityError):
        whynot_obj(qcs_object(2), 2)


# -- monad and comonoid ------------------------------------------------------


def test_monad_unit_laws_exact():
    for n in (1, 2, 3):
        w = whynot_obj(Bool, n)
        assert compose(mu(Bool, n), eta(w, n)).matrix == identity(w).matrix
        assert (
            compose(mu(Bool, n), whynot_mor(eta(Bool, n), n)).matrix
            == identity(w).matrix
        )


def test_monad_associative_on_untruncated_columns():
    # truncation makes digging lax; columns whose double union still fits
    # the truncation agree exactly on both paths
    n = 2
    w = whynot_obj(Bool, n)
    w2 = whynot_obj(w, n)
    w3 = whynot_obj(w2, n)
    left = compose(mu(Bool, n), mu(w, n))
    right = compose(mu(Bool, n), whynot_mor(mu(Bool, n), n))
    c2 = graded_coords(w2)
    c1 = graded_coords(w)
    checked = 0
    for j, m in enumerate(graded_coords(w3)):
        n_indices = sum(len(c2[p]) for p in m)
        grade = sum(len(c1[d]) for p in m for d in c2[p])
        if n_indices <= n and grade <= n:
            checked += 1
            for i in range(w.dim):
                assert left.matrix[i][j] == right.matrix[i][j]
    assert checked >= 40


def test_eta_entries_are_the_pairing_weights():
    e = eta(Bool, 3)
    w = whynot_obj(Bool, 3)
    idx = {m: i for i, m in enumerate(graded_coords(w))}
    assert e.matrix[idx[(0,)]][0] == 1 and e.matrix[idx[(1,)]][1] == 1
    e2 = eta(w, 3)  # graded source: weights show up
    idx2 = {m: i for i, m in enumerate(graded_coords(whynot_obj(w, 3)))}
    pos_01 = idx[(0, 1)]
    assert e2.matrix[idx2[(pos_01,)]][pos_01] == 2
    with pytest.raises(CapabilityError):
        eta(Bool, 0)


def test_diag_mult_unit_and_commutativity():
    n = 3
    w = whynot_obj(Bool, n)
    d = diag_mult(Bool, n)
    onew = graded_par_obj(one_obj(), w, n)
    lam = graded_relabel(w, onew, lambda m: (0, m))
    unit_path = compose(
        d, compose(graded_par_mor(monoid_unit(Bool, n), identity(w), n), lam)
    )
    assert unit_path.matrix == identity(w).matrix
    ww = graded_par_obj(w, w, n)
    swap = graded_relabel(ww, ww, lambda t: (t[1], t[0]))
    assert compose(d, swap).matrix == d.matrix


def test_diag_mult_associative():
    n = 3
    w = whynot_obj(Bool, n)
    d = diag_mult(Bool, n)
    wi = identity(w)
    ww = graded_par_obj(w, w, n)
    left_src = graded_par_obj(ww, w, n)
    right_src = graded_par_obj(w, ww, n)
    alpha = graded_relabel(
        left_src, right_src, lambda t: (t[0][0], (t[0][1], t[1]))
    )
    path_a = compose(d, graded_par_mor(d, wi, n))
    path_b = compose(d, compose(graded_par_mor(wi, d, n), alpha))
    assert path_a.matrix == path_b.matrix


def test_diag_mult_merges_split_variables():
    # x1 y2 on the doubled object restricts to the form x1 x2
    ws = whynot_obj(BoolStar, 2)
    d = diag_mult(BoolStar, 2)
    src = d.source
    e = [F(0)] * src.dim
    e[graded_coords(src).index(((0,), (1,)))] = F(1)
    out = GradedSeries(ws, d(tuple(e)))
    assert out.coord((0, 1)) == F(1, 2)
    assert series_eval(out, (F(1, 3), F(1, 2))) == F(1, 6)
    assert series_eval(out, (F(1, 2), F(1, 2))) == F(1, 4)


def test_relabel_rejects_weight_changes():
    w = whynot_obj(Bool, 2)
    with pytest.raises(CompositionError):
        # swapping (0,1) with (0,0) maps weight 2 onto weight 1
        flip = {(0, 1): (0, 0), (0, 0): (0, 1)}
        graded_relabel(w, w, lambda m: flip.get(m, m))


# -- functors ----------------------------------------------------------------


def test_bang_functor_laws():
    n = 3
    s = mor(Bool, Bool, [[F(1, 2), F(1, 4)], [F(1, 4), F(1, 2)]])
    t = mor(Bool, Bool, [[F(1, 3), F(0)], [F(1, 3), F(1, 3)]])
    assert bang_mor(identity(Bool), n).matrix == identity(bang_obj(Bool, n)).matrix
    assert (
        bang_mor(compose(s, t), n).matrix
        == compose(bang_mor(s, n), bang_mor(t, n)).matrix
    )
    assert whynot_mor(identity(Bool), n).matrix == identity(whynot_obj(Bool, n)).matrix
    assert (
        whynot_mor(compose(s, t), n).matrix
        == compose(whynot_mor(s, n), whynot_mor(t, n)).matrix
    )


def test_whynot_is_the_adjoint_of_bang():
    s = mor(Bool, Bool, [[F(1, 2), F(1, 4)], [F(1, 4), F(1, 2)]])
    assert whynot_mor(s, 3).matrix == adjoint(bang_mor(adjoint(s), 3)).matrix


def test_bang_grade_one_block_is_the_map_itself():
    s = mor(Bool, Bool, [[F(1, 2), F(1, 4)], [F(1, 4), F(1, 2)]])
    b = bang_mor(s, 2)
    assert [row[1:3] for row in b.matrix[1:3]] == [tuple(r) for r in s.matrix]


@settings(max_examples=20, deadline=None)
@given(st.data())
def test_bang_delta_naturality(data):
    s = contraction_2x2(data.draw)
    x = (data.draw(rat01) * F(1, 2), data.draw(rat01) * F(1, 2))
    assert bang_mor(s, 3)(delta(Bool, x, 3).coords) == delta(Bool, s(x), 3).coords


def test_functors_gate_on_expansive_maps():
    grow = mor(Bool, Bool, [[F(2), F(0)], [F(0), F(1)]])
    with pytest.raises(BallError):
        bang_mor(grow, 2)
    with pytest.raises(BallError):
        whynot_mor(grow, 2)


# -- the exponential isomorphism ---------------------------------------------


def test_exp_iso_units():
    phi, phi_inv = exp_iso(one_obj(), one_obj(), 2)
    assert phi.source.dim == phi.target.dim == 6
    assert compose(phi, phi_inv).matrix == identity(phi.target).matrix
    assert compose(phi_inv, phi).matrix == identity(phi.source).matrix


def test_exp_iso_delta_naturality_and_pairing():
    a, b = Bool, BoolStar
    phi, phi_inv = exp_iso(a, b, 3)
    ab = product_obj(a, b)
    rng = random.Random(13)
    for _ in range(10):
        x = (F(rng.randint(0, 4), 4), 0)
        y = (F(rng.randint(0, 2), 4), F(rng.randint(0, 2), 4))
        dxy = delta(ab, x + y, 3)
        pe = pair_element(
            phi.target, delta(a, x, 3).coords, delta(b, y, 3).coords
        )
        assert phi(dxy.coords) == pe
        assert phi_inv(pe) == dxy.coords
        fl = tuple(F(rng.randint(0, 3), 3) for _ in range(phi.target.dim))
        lhs = pairing(dual_object(phi.target), fl, pe)
        rhs = pairing(dual_object(phi.source), adjoint(phi)(fl), dxy.coords)
        assert lhs == rhs


def test_exp_iso_needs_polyhedral_factors():
    with pytest.raises(CapabilityError):
        exp_iso(Bool, whynot_obj(Bool, 2), 2)


# -- analytic maps -----------------------------------------------------------

Half = simplex_pcs(1)


def square_map():
    return analytic_map(Half, Half, [[[0]], [[0]], [[1]]])


def affine_square_map():
    return analytic_map(Half, Half, [[[0]], [[1]], [[1]]])


def test_analytic_eval_matches_polynomial():
    f = affine_square_map()
    t = F(3, 7)
    assert analytic_eval(f, (t,)) == (t + t * t,)
    with pytest.raises(BallError):
        analytic_eval(f, (F(3, 2),))


def test_analytic_compose_pinned():
    g4 = analytic_compose(affine_square_map(), square_map(), 4)
    t = F(2, 3)
    assert analytic_eval(g4, (t,)) == (t**2 + t**4,)
    g3 = analytic_compose(affine_square_map(), square_map(), 3)
    assert analytic_eval(g3, (t,)) == (t**2,)
    # grade matrices: t^2 + t^4 puts units at grades 2 and 4
    assert [g[0][0] for g in g4.grades] == [0, 0, 1, 0, 1]
    assert [g[0][0] for g in g3.grades] == [0, 0, 1, 0]


def test_analytic_compose_gates_expansive_inner():
    with pytest.raises(BallError):
        analytic_compose(square_map(), affine_square_map(), 4)
    with pytest.raises(CompositionError):
        analytic_compose(
            square_map(),
            analytic_map(simplex_pcs(2), simplex_pcs(2), [[[0], [0]]]),
        )


def test_analytic_truncation_monotone():
    g3 = analytic_compose(affine_square_map(), square_map(), 3)
    g4 = analytic_compose(affine_square_map(), square_map(), 4)
    for k in range(5):
        t = (F(k, 4),)
        assert analytic_eval(g3, t)[0] <= analytic_eval(g4, t)[0]


def test_analytic_norm_bracket():
    br = analytic_norm_bounds(affine_square_map())
    assert br.lower == br.upper == 2
    assert br.argmax == (F(1),)
    bs = analytic_norm_bounds(square_map())
    assert bs.lower == bs.upper == 1


def test_analytic_morphism_round_trip():
    f = analytic_compose(affine_square_map(), square_map(), 4)
    m = analytic_as_morphism(f)
    assert analytic_from_hom(m) == f
    t = (F(2, 3),)
    assert m(delta(Half, t, 4).coords) == analytic_eval(f, t)


def test_analytic_map_validation():
    with pytest.raises(MembershipError):
        analytic_map(Half, Half, [[[0]], [[-1]]])
    with pytest.raises(CapabilityError):
        analytic_map(whynot_obj(Bool, 2), Half, [[[0]]])


@settings(max_examples=15, deadline=None)
@given(st.data())
def test_analytic_eval_agrees_with_bang_morphism(data):
    # F as a morphism out of !source applied to delta_x is F(x)
    c0 = data.draw(rat01) * F(1, 4)
    c1 = data.draw(rat01) * F(1, 4)
    c2 = data.draw(rat01) * F(1, 2)
    f = analytic_map(Half, Half, [[[c0]], [[c1]], [[c2]]])
    m = analytic_as_morphism(f)
    x = (data.draw(rat01),)
    assert m(delta(Half, x, 2).coords) == analytic_eval(f, x)
