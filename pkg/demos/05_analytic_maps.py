"""
Analytic maps and truncated composition
=======================================

A positive analytic map stores one coefficient matrix per degree. It can
be evaluated directly, repackaged as a linear map out of !source (where
applying it to delta_x recovers the evaluation), and composed by
truncated substitution.
"""

from fractions import Fraction as F

from conelogic import (
    analytic_as_morphism,
    analytic_compose,
    analytic_eval,
    analytic_from_hom,
    analytic_map,
    analytic_norm_bounds,
    delta,
    simplex_pcs,
)

half = simplex_pcs(1)  # the interval [0, 1]

# F(t) = t^2 and G(s) = s + s^2, one coefficient per degree.
fm = analytic_map(half, half, [[[0]], [[0]], [[1]]])
gm = analytic_map(half, half, [[[0]], [[1]], [[1]]])

t = F(2, 3)
print("F(2/3):", analytic_eval(fm, (t,))[0])
print("G(2/3):", analytic_eval(gm, (t,))[0])

# Composition G(F(t)) = t^2 + t^4 if the truncation admits degree 4,
# and just t^2 if it stops at 3.
comp4 = analytic_compose(gm, fm, 4)
comp3 = analytic_compose(gm, fm, 3)
print("\nG o F coefficients at trunc 4:", [str(g[0][0]) for g in comp4.grades])
print("G o F coefficients at trunc 3:", [str(g[0][0]) for g in comp3.grades])
print("eval at 2/3, trunc 4:", analytic_eval(comp4, (t,))[0], "= 4/9 + 16/81")
print("eval at 2/3, trunc 3:", analytic_eval(comp3, (t,))[0])

# The linear view: F as a map !half -> half. Deltas turn evaluation into
# matrix application.
h = analytic_as_morphism(fm)
print("\nmorphism matrix (one row, grades side by side):", h.matrix)
dx = delta(half, (t,), fm.trunc)
print("h(delta_t) == F(t):", h(dx.coords) == analytic_eval(fm, (t,)))

# And back: slicing the grade blocks out recovers the analytic map.
print("round trip:", analytic_from_hom(h) == fm)

# The norm of G is its value at the right end of the interval: 1 + 1 = 2.
br = analytic_norm_bounds(gm)
print("\n||G|| bracket:", br.lower, "..", br.upper, "attained at", br.argmax)
