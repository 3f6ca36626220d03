"""Connectives and morphism algebra: norms, *-autonomy, structural laws."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conelogic.backends import bool_obj, cube_pcs, pcs_object, qcs_object, simplex_pcs
from conelogic.cones import dual_object, norm_dual, norm_primal, one_obj, zero_obj
from conelogic.errors import CapabilityError, CompositionError, MembershipError
from conelogic.mall import (
    adjoint,
    assoc_tensor,
    compose,
    copair_mor,
    coproduct_obj,
    cotensor_obj,
    curry,
    eval_mor,
    hom_obj,
    identity,
    inj1,
    inj2,
    mor,
    morphism_norm,
    pair_mor,
    product_obj,
    proj1,
    proj2,
    structural,
    sym_tensor,
    tensor_mor,
    tensor_obj,
    uncurry,
    unitor_left,
    unitor_right,
    product_mor,
)
from conelogic.rationals import dot, eye, kron_vec, mat_vec, vec

F = Fraction
Bool = bool_obj()


def test_tensor_of_simplices_is_simplex():
    t = tensor_obj(Bool, Bool)
    assert t.dim == 4
    assert t.p_ball_gens == tuple(
        sorted(vec([1 if i == k else 0 for i in range(4)]) for k in range(4))
    )


def test_tensor_norm_via_lp():
    t = tensor_obj(Bool, Bool)
    s = vec([1, 0, 0, 1])
    assert norm_primal(t, s) == 2  # l1 (x) l1 is l1 on the product


def test_tensor_cross_norm():
    a = pcs_object([[1, 0], [F(1, 2), 1]], 2)
    b = cube_pcs(2)
    t = tensor_obj(a, b)
    u = vec([F(1, 3), F(2, 3)])
    v = vec([F(1, 2), F(3, 4)])
    assert norm_primal(t, kron_vec(u, v)) == norm_primal(a, u) * norm_primal(b, v)


def test_cotensor_is_de_morgan_dual():
    a, b = Bool, cube_pcs(2)
    assert dual_object(tensor_obj(a, b)) == cotensor_obj(dual_object(a), dual_object(b))
    assert dual_object(product_obj(a, b)) == coproduct_obj(dual_object(a), dual_object(b))


def test_hom_element_norm_is_operator_norm():
    h = hom_obj(Bool, Bool)
    # matrix [[1,1],[1,1]] as a hom element: coordinate (j,k) -> M[k][j]
    phi = vec([1, 1, 1, 1])
    assert norm_primal(h, phi) == 2
    f = mor(Bool, Bool, [[1, 1], [1, 1]])
    assert morphism_norm(f) == 2


def test_product_norm_is_max_coproduct_is_sum():
    w = product_obj(Bool, Bool)
    p = coproduct_obj(Bool, Bool)
    x = vec([1, 0, 0, 1])
    assert norm_primal(w, x) == 1
    assert norm_primal(p, x) == 2  # same point, different object: not isomorphic


def test_product_with_zero_is_identity_on_gens():
    a = pcs_object([[1, 0], [F(1, 2), F(1, 2)], [0, 1]], 2)
    z = zero_obj()
    assert product_obj(a, z).p_ball_gens == a.p_ball_gens
    assert product_obj(a, z).q_ball_gens == a.q_ball_gens
    assert coproduct_obj(a, z).p_ball_gens == a.p_ball_gens


def test_morphism_positivity_enforced():
    with pytest.raises(MembershipError):
        mor(Bool, Bool, [[1, -1], [0, 1]])


def test_composition_endpoint_check():
    f = mor(Bool, Bool, eye(2))
    g = mor(cube_pcs(2), cube_pcs(2), eye(2))
    with pytest.raises(CompositionError):
        compose(g, f)


def test_adjoint_is_transpose_and_involution():
    f = mor(Bool, cube_pcs(2), [[F(1, 2), 1], [0, F(1, 3)]])
    fs = adjoint(f)
    assert fs.source == dual_object(cube_pcs(2))
    assert fs.matrix == ((F(1, 2), 0), (1, F(1, 3)))
    assert adjoint(fs) == f


def test_adjoint_preserves_norm():
    f = mor(Bool, cube_pcs(2), [[F(1, 2), 1], [0, F(1, 3)]])
    assert morphism_norm(adjoint(f)) == morphism_norm(f)


def test_adjointness_identity():
    from conelogic.cones import pairing

    f = mor(Bool, cube_pcs(2), [[F(1, 2), 1], [0, F(1, 3)]])
    fs = adjoint(f)
    v = vec([F(1, 3), F(2, 3)])
    psi = vec([F(1, 2), F(1, 5)])
    assert pairing(f.target, psi, f(v)) == pairing(f.source, fs(psi), v)


def test_curry_uncurry_round_trip_and_norm():
    a = Bool
    b = pcs_object([[1, 0], [F(1, 2), 1]], 2)
    c = cube_pcs(2)
    src = tensor_obj(a, b)
    f = mor(src, c, [[F(1, 2), 0, F(1, 3), 1], [0, F(1, 4), 1, F(1, 6)]])
    g = curry(f)
    assert g.source == a and g.target == hom_obj(b, c)
    assert uncurry(g) == f
    assert morphism_norm(g) == morphism_norm(f)


def test_curry_of_eval_like_map_is_identity_shaped():
    # 1 (x) Bool -> Bool by the unitor; its curry 1 -> hom(Bool, Bool)
    # is the flattened identity matrix.
    f = unitor_left(Bool)
    g = curry(f)
    assert g.matrix == ((F(1),), (F(0),), (F(0),), (F(1),))


def test_eval_recovers_uncurried_map():
    a, b = Bool, Bool
    h = hom_obj(a, b)
    ev = eval_mor(a, b)
    f = mor(tensor_obj(h, a), b, ev.matrix)  # eval itself is positive
    # eval o (curry(ev) (x) id) == ev is the triangle we can check cheaply:
    g = curry(ev)
    assert uncurry(g) == ev


def test_sym_is_involution():
    a = Bool
    b = cube_pcs(2)
    s1 = sym_tensor(a, b)
    s2 = sym_tensor(b, a)
    assert compose(s2, s1) == identity(tensor_obj(a, b))


def test_assoc_is_coordinate_identity():
    a, b, c = Bool, cube_pcs(2), Bool
    al = assoc_tensor(a, b, c)
    assert al.matrix == eye(8)
    assert al.source.dim == al.target.dim == 8
    assert al.source != al.target  # different tensor shapes, same coordinates


def test_unitors():
    a = pcs_object([[1, 0], [0, 1], [1, 1]], 2)
    assert unitor_left(a).source == tensor_obj(one_obj(), a)
    assert compose(unitor_left(a), structural("unitor_left_inv", a)) == identity(a)
    assert compose(unitor_right(a), structural("unitor_right_inv", a)) == identity(a)


def test_product_universal_property():
    c = Bool
    f = mor(c, Bool, [[1, 0], [0, 1]])
    g = mor(c, cube_pcs(2), [[F(1, 2), 0], [0, 1]])
    p = pair_mor(f, g)
    assert compose(proj1(Bool, cube_pcs(2)), p) == f
    assert compose(proj2(Bool, cube_pcs(2)), p) == g


def test_coproduct_universal_property():
    f = mor(Bool, Bool, eye(2))
    g = mor(cube_pcs(2), Bool, [[1, 0], [0, 1]])
    cp = copair_mor(f, g)
    assert compose(cp, inj1(Bool, cube_pcs(2))) == f
    assert compose(cp, inj2(Bool, cube_pcs(2))) == g


def test_injections_are_isometric_projections_contractive():
    a, b = Bool, cube_pcs(2)
    assert morphism_norm(inj1(a, b)) == 1
    assert morphism_norm(proj1(a, b)) == 1
    assert morphism_norm(pair_mor(identity(a), identity(a))) == 1


def test_tensor_mor_norm_multiplicative_on_samples():
    f = mor(Bool, Bool, [[F(1, 2), F(1, 4)], [F(1, 2), F(1, 4)]])
    g = mor(cube_pcs(2), cube_pcs(2), [[F(1, 3), 0], [0, 1]])
    t = tensor_mor(f, g)
    assert morphism_norm(t) == morphism_norm(f) * morphism_norm(g)


def test_spectral_operands_rejected():
    qc = qcs_object(2)
    with pytest.raises(CapabilityError):
        tensor_obj(qc, Bool)
    with pytest.raises(CapabilityError):
        product_obj(qc, Bool)
    with pytest.raises(CapabilityError):
        mor(qc, qc, eye(4))


def test_structural_dispatcher_unknown_name():
    with pytest.raises(ValueError):
        structural("frobnicate", Bool)


rat01 = st.integers(0, 4).flatmap(
    lambda p: st.integers(max(p, 1), 8).map(lambda q_: F(p, q_))
)


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_curry_norm_preservation_random(data):
    a, b, c = Bool, Bool, Bool
    src = tensor_obj(a, b)
    rows = [
        [data.draw(rat01) for _ in range(src.dim)] for _ in range(c.dim)
    ]
    f = mor(src, c, rows)
    g = curry(f)
    assert uncurry(g) == f
    assert morphism_norm(g) == morphism_norm(f)


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_compose_norm_submultiplicative(data):
    f = mor(Bool, Bool, [[data.draw(rat01) for _ in range(2)] for _ in range(2)])
    g = mor(Bool, Bool, [[data.draw(rat01) for _ in range(2)] for _ in range(2)])
    assert morphism_norm(compose(g, f)) <= morphism_norm(g) * morphism_norm(f)
