"""Ternary Grassmann variables and an exterior calculus with d^3 = 0.

Here d^2 is not zero. Its image is a new kind of 1-form d^2 xi, and the
cyclic rule dxi dxi dxi = j (rotated) replaces antisymmetry.
"""

from chessboard import exterior as ex
from chessboard import grassmann as G

print("ternary Grassmann dimensions:", {n: G.dimension(n) for n in (1, 2, 3, 4)})
alg = G.GrassmannAlgebra(2)
t1, t2 = alg.theta(1), alg.theta(2)
print("theta1 theta1 theta1 =", t1 * t1 * t1)
print("theta1 theta2 theta1 =", t1 * t2 * t1)

rep = G.derivation_ternary_closure()
print("\nternary closure of d1, d2:", rep.identity_d1 and rep.identity_d2)
print("d3 as a binary combination (a d1 d2 + b d2 d1):", [str(c) for c in rep.d3_from_binary])

coords = ex.CoordinateAlgebra(3)
x1, x2, x3 = (coords.coordinate(i) for i in (1, 2, 3))
f = x1 * x1 * x2 + x3
print("\nf =", f)
print("df    =", ex.df(f))
print("d^2 f =", ex.d_power(ex.FormElement.function(f), 2))
print("d^3 f is zero:", ex.d_power(ex.FormElement.function(f), 3).is_zero())

w = ex.d2_oneform([x2, coords.zero(), coords.zero()])
print("\nd^2 (xi^2 dxi^1) =", w)
