"""A third-order Dirac-type operator.

Three 3x3 matrices Q^a with (Q^a)^3 = 1 make L = Q.d + m B cube to a scalar,
so plane waves obey omega^3 = k_x^3 + k_y^3 + k_z^3 - 3 k_x k_y k_z + m^3.
"""

import numpy as np

from chessboard import dirac

sym = dirac.symmetrization_check()
print("scalar triples per convention:", sym.scalar_counts, "-> using", sym.winner)
print("eta^{abc}:", {k: str(v) for k, v in sym.eta.nonzero().items()})

cube = dirac.operator_cube()
print("\nL^3 =", cube.scalar, "(times the identity)")

k, m = (0.4, -0.3, 0.2), 0.7
w = dirac.real_cube_root(dirac.dispersion_rhs(k, m))
p = dirac.DispersionPoint(w, k, m)
print(f"\nk = {k}, m = {m}: omega = {w:.6f}, zeta = {p.zeta:.3f}, r = {p.r:.6f}")
print("zeta r^2 == cubic form:", dirac.cylindrical_identity_check(p))

sol = dirac.plane_wave(w, k, m, np.arange(9.0).reshape(3, 3) / 9)
print("finite-difference residual:", f"{dirac.residual_pde(sol, [(0.1, 0.0, 0.2, -0.1)]):.2e}")

rep = dirac.boundedness_report()
print("\nbounded products: determinant", rep.determinant, "| entry x cofactor", rep.cofactor_terms,
      "| single minors", sum(v[0] for v in rep.minors.values()), "of 9")
