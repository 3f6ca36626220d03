"""
Multiplicatives and additives
=============================

Tensor, par, and hom with the curry/uncurry bijection, then the additive
norms and the point that separates & from +.
"""

from fractions import Fraction as F

from conelogic import (
    coproduct_obj,
    cotensor_obj,
    curry,
    dual_object,
    hom_obj,
    mor,
    morphism_norm,
    norm_primal,
    product_obj,
    simplex_pcs,
    tensor_obj,
    uncurry,
)
from conelogic.rationals import vec

B = simplex_pcs(2)

# Tensor of two simplices: generators are all pairs of basis vectors.
t = tensor_obj(B, B)
print("simplex * simplex has dim", t.dim)
print("||e1 (x) (e1+e2)/2 ...||:", norm_primal(t, vec(["1/2", "1/2", 0, 0])))

# hom(B, B) carries positive maps; a column-substochastic matrix is a
# contraction. Flatten it into the hom object's coordinates via curry.
f = mor(tensor_obj(B, B), B, [[F(1, 2), 0, 0, F(1, 4)], [0, F(1, 2), F(1, 3), 0]])
g = curry(f)
print("\ncurry lands in", g.target.label, "with norm", morphism_norm(g))
print("uncurry returns the same matrix:", uncurry(g).matrix == f.matrix)
print("norms agree exactly:", morphism_norm(g) == morphism_norm(f))

# Additives on the same carrier, told apart by one point.
w = product_obj(B, B)
p = coproduct_obj(B, B)
z = vec([1, 0, 0, 1])  # e1 on the left, e2 on the right
print("\nsame point, two norms:")
print("  with-norm (max):", norm_primal(w, z))
print("  plus-norm (sum):", norm_primal(p, z))

# The star-autonomous bookkeeping: hom is a par with a dualized first slot.
print("hom(B,B) == par(B^, B):", hom_obj(B, B) == cotensor_obj(dual_object(B), B))
