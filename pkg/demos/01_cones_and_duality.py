"""
Cones, norms, and polar duality
===============================

Build a few objects, compute norms by two independent routes, and watch the
bipolar close a generator set.
"""

from fractions import Fraction as F

from conelogic import (
    dual_object,
    from_p_gens,
    gauge_norm,
    norm_dual,
    norm_primal,
    simplex_pcs,
    validate_object,
)
from conelogic.polyhedra import polar_of_points, reduce_generators
from conelogic.rationals import vec

# The two-point simplex: ball generated by the basis vectors, norm = sum.
bool_ = simplex_pcs(2)
x = (F(1, 2), F(1, 3))
print("||(1/2, 1/3)|| in simplex(2):", norm_primal(bool_, x))  # 5/6

# Same number through the gauge LP (minimal dilation of the ball hull).
print("gauge route agrees:", gauge_norm(bool_, x) == norm_primal(bool_, x))

# The dual object swaps the generator lists; dual norm = max coordinate here.
print("dual norm of (1/2, 1/3):", norm_dual(bool_, x))  # 1/2

# A lopsided object and its polar.
a = from_p_gens([[2, 0], [0, 1], [1, 1]], 2, label="lopsided")
print("\nprimal generators:", a.p_ball_gens)
print("dual generators:  ", a.q_ball_gens)
report = validate_object(a)
print("validation:", "ok" if report.passed else report.checks)

# Bipolar closure: polar twice returns the reduced generator set.
gens = reduce_generators([vec([2, 0]), vec([1, 1]), vec([1, 0])])
polar = polar_of_points(gens, 2)
back = polar_of_points(polar.vertices, 2)
print("\nbipolar returns the hull:", reduce_generators(back.vertices) == gens)

# Duality is involutive on the nose.
print("dual(dual(a)) == a:", dual_object(dual_object(a)) == a)
