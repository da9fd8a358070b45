"""Curvature of a Z3 gauge potential, computed twice.

Omega = d^2 A + d(A^2) + A dA + A^3 is built once from coefficient formulas
and once by running the exterior calculus on A. The two agree. The compact
expression of Omega through covariant derivatives of F only works when the
A_i commute, and the demo shows where it stops.
"""

import random

from chessboard import geometry as geo

rng = random.Random(3)
abelian = geo.GaugePotential.random(rng, n=2, m=1, degree=3)
nonab = geo.GaugePotential.random(rng, n=3, m=2, degree=1)

for name, a in (("abelian", abelian), ("2x2 nonabelian", nonab)):
    print(f"{name}: formulas == calculus: {geo.curvature_dual_path(a)[2]},",
          f"displayed cross term works: {geo.curvature_dual_path(a, geo.OMEGA_DISPLAYED)[2]},",
          f"Omega = (1/3)[j DF + j^2 DF]: {geo.covariant_identity_check(a)}")

jet = geo.ConnectionJet.random(rng, n=2)
print("\nnabla^3 closed form on a random jet:", geo.nabla3(jet).agree)
print("same jet with Gamma = 0 at the point:", geo.nabla3(geo.jet_with_vanishing_gamma(jet)).agree)

rep = geo.p_noncovariance(jet, [[1, 1], [0, 1]], [[[1, 0], [2, 1]], [[0, 1], [1, 0]]])
print("\nunder a frame change: R homogeneous", rep.r_homogeneous, "| P homogeneous", rep.p_homogeneous)
