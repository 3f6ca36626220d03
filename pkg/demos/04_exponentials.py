"""
Truncated exponentials
======================

!A holds truncated power-series "distributions" (the deltas live here),
and its dual ?(A^) holds the truncated polynomial functions on the ball
of A. Pairing a function against a delta is evaluation, digging is
substitution, and the diagonal multiplication is the Cauchy product on
coefficients.
"""

from fractions import Fraction as F

from conelogic import (
    bang_obj,
    compose,
    delta,
    diag_mult,
    distribution_norm_bounds,
    dual_object,
    eta,
    exp_iso,
    graded_grades,
    graded_pairing,
    graded_par_obj,
    identity,
    mu,
    pair_element,
    product_obj,
    series_eval,
    simplex_pcs,
    whynot_mor,
    whynot_obj,
    GradedSeries,
)

A = simplex_pcs(2)
D = dual_object(A)  # functions on the ball of A live in ?D
N = 3

bang = bang_obj(A, N)
why = whynot_obj(D, N)
print("!A at truncation 3: dim", bang.dim, "grade sizes", graded_grades(bang))
print("?D is its dual object:", why == dual_object(bang))

# A delta distribution is the moment sequence of a point.
x = (F(1, 2), F(1, 4))
dx = delta(A, x, N)
print("delta coords:", [str(c) for c in dx.coords])

# Pairing a series against delta_x evaluates the series at x.
# f(y) = 1/3 + y1 y2 on coordinates (const, y1, y2, y1^2, y1 y2, y2^2, ...).
coeffs = [F(0)] * why.dim
coeffs[0] = F(1, 3)
coeffs[4] = F(1)
f = GradedSeries(why, tuple(coeffs))
print("series_eval f(x):", series_eval(f, x))
print("pairing <f, delta_x>:", graded_pairing(f, dx), "(same number)")

# Deltas of ball points sit in the unit ball of !A; the norm oracle
# brackets the distribution norm around 1.
br = distribution_norm_bounds(dx)
print("||delta_x|| bracket:", br.lower, "..", br.upper)

# Monad structure on ?D: dereliction eta, digging mu. One unit law,
# checked as an exact matrix identity.
unit_route = compose(mu(D, N), whynot_mor(eta(D, N), N))
print("\nmu . ?eta == id:", unit_route == identity(why))

# Diagonal multiplication ?D | ?D -> ?D multiplies functions. Feeding it
# the pair (f, f) squares f, up to truncation.
m = diag_mult(D, N)
ff = pair_element(graded_par_obj(why, why, N), f.coords, f.coords)
sq = GradedSeries(why, m(ff))
print("(f*f)(x) truncated:", series_eval(sq, x), "vs f(x)^2 =", series_eval(f, x) ** 2)
print("  (the degree-4 coefficient fell off the truncation, hence the gap)")

# The exponential isomorphism !(A x B) = !A (x) !B sends the delta of a
# pair to the pair of deltas.
phi, phi_inv = exp_iso(A, A, N)
y = (F(1, 3), F(1, 3))
dxy = delta(product_obj(A, A), x + y, N)
split = pair_element(phi.target, delta(A, x, N).coords, delta(A, y, N).coords)
print("\nphi(delta_(x,y)) == delta_x (x) delta_y:", phi(dxy.coords) == split)
print("phi_inv inverts it:", phi_inv(split) == dxy.coords)
