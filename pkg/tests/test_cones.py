"""Cone objects: norms by two routes, duality, membership, validation."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conelogic.backends import bool_obj, cube_pcs, pcs_object, simplex_pcs
from conelogic.cones import (
    Backend,
    dual_object,
    from_p_gens,
    gauge_norm,
    in_ball,
    in_cone,
    check_membership,
    materialize_p,
    materialize_q,
    norm_dual,
    norm_primal,
    one_obj,
    pairing,
    validate_object,
    zero_obj,
    ConeObject,
)
from conelogic.errors import CapabilityError, MembershipError
from conelogic.rationals import unit, vec

F = Fraction


def test_simplex_norm_is_sum():
    b = simplex_pcs(2)
    assert norm_primal(b, vec([F(1, 2), F(1, 3)])) == F(5, 6)
    assert norm_dual(b, vec([1, 2])) == 2  # dual norm is the max


def test_cube_norm_is_max():
    c = cube_pcs(3)
    assert norm_primal(c, vec([F(1, 2), F(2, 3), F(1, 5)])) == F(2, 3)
    assert norm_dual(c, vec([F(1, 2), F(2, 3), F(1, 5)])) == F(1, 2) + F(2, 3) + F(1, 5)


def test_cube_is_dual_of_simplex():
    assert dual_object(simplex_pcs(3)) == cube_pcs(3)
    assert dual_object(cube_pcs(3)) == simplex_pcs(3)


def test_diagonal_gen_gives_simplex_dual():
    a = from_p_gens([vec([1, 1])], 2)
    assert a.q_ball_gens == (vec([0, 1]), vec([1, 0]))
    assert a == cube_pcs(2)


def test_dual_is_involution():
    a = pcs_object([[1, 0], [F(1, 2), F(1, 2)], [0, 1]], 2)
    assert dual_object(dual_object(a)) == a
    assert dual_object(dual_object(a)).label == a.label


def test_pairing_holders_inequality_on_samples():
    a = simplex_pcs(2)
    x = vec([F(1, 3), F(1, 6)])
    f = vec([F(1, 2), 1])
    assert pairing(a, f, x) <= norm_dual(a, f) * norm_primal(a, x)


def test_membership_witness_negative_coordinate():
    a = simplex_pcs(3)
    with pytest.raises(MembershipError) as e:
        check_membership(a, vec([1, -1, 0]))
    assert e.value.witness == unit(3, 1)


def test_membership_positive():
    a = simplex_pcs(2)
    assert in_cone(a, vec([2, 3]))
    assert in_ball(a, vec([F(1, 2), F(1, 2)]))
    assert not in_ball(a, vec([F(1, 2), F(2, 3)]))


def test_gauge_equals_dual_max():
    objs = [
        simplex_pcs(2),
        cube_pcs(3),
        pcs_object([[1, 0], [F(1, 2), F(3, 4)], [0, 1]], 2),
        pcs_object([[1, 1, 0], [0, 1, 1], [1, 0, 1]], 3),
    ]
    samples = {
        2: [vec([F(1, 3), F(2, 5)]), vec([0, 1]), vec([F(7, 2), F(1, 9)])],
        3: [vec([F(1, 3), F(2, 5), F(1, 7)]), vec([0, 0, 1])],
    }
    for a in objs:
        for x in samples[a.dim]:
            assert gauge_norm(a, x) == norm_primal(a, x)


def test_gauge_rejects_outside_cone():
    a = simplex_pcs(2)
    with pytest.raises(MembershipError):
        gauge_norm(a, vec([-1, 0]))


def test_zero_and_one_objects():
    z = zero_obj()
    assert z.dim == 0 and norm_primal(z, ()) == 0
    o = one_obj()
    assert norm_primal(o, vec([F(3, 4)])) == F(3, 4)
    assert dual_object(z) == z  # 0 and top coincide in this finite model
    assert dual_object(o) == o  # 1 and bot coincide


def test_validate_good_objects():
    for a in (simplex_pcs(2), cube_pcs(3), pcs_object([[1, 1], [2, 0]], 2)):
        rep = validate_object(a)
        assert rep.passed, [c for c in rep.checks if not c.passed]


def test_validate_flags_noncanonical_gens():
    # (1/2, 0) is dominated by (1, 0): not a canonical generator list.
    bad = ConeObject(
        dim=2,
        p_ball_gens=(vec([F(1, 2), F(0)]), vec([1, 0]), vec([0, 1])),
        q_ball_gens=(vec([1, 1]),),
    )
    rep = validate_object(bad)
    assert not rep.passed
    assert any(c.name == "p-canonical" and not c.passed for c in rep.checks)


def test_validate_flags_wrong_polar():
    bad = ConeObject(
        dim=2,
        p_ball_gens=(vec([0, 1]), vec([1, 0])),
        q_ball_gens=(vec([F(1, 2), F(1, 2)]),),
    )
    rep = validate_object(bad)
    assert not rep.passed


def test_materialize_round_trip():
    a = pcs_object([[1, 0], [0, 1], [F(2, 3), F(2, 3)]], 2)
    lazy = ConeObject(dim=2, p_ball_gens=a.p_ball_gens, q_ball_gens=None)
    m = materialize_q(lazy)
    assert m.q_ball_gens == a.q_ball_gens
    lazy_p = ConeObject(dim=2, p_ball_gens=None, q_ball_gens=a.q_ball_gens)
    assert materialize_p(lazy_p).p_ball_gens == a.p_ball_gens


coord = st.integers(0, 4).flatmap(
    lambda p: st.integers(1, 3).map(lambda q_: F(p, q_))
)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 3), st.data())
def test_norm_duality_random(dim, data):
    gens = [
        tuple(data.draw(coord) for _ in range(dim))
        for _ in range(data.draw(st.integers(1, 4)))
    ]
    if not all(any(g[c] > 0 for g in gens) for c in range(dim)):
        for c in range(dim):
            if all(g[c] == 0 for g in gens):
                gens.append(unit(dim, c))
    a = from_p_gens(gens, dim)
    x = tuple(data.draw(coord) for _ in range(dim))
    assert gauge_norm(a, x) == norm_primal(a, x)
