"""Z3-graded 3x3 matrices and a discrete gauge theory.

Grade-g matrices sit on the g-th cyclic diagonal. Commutators pick up j^{ab}
and the derivation Der_A = [A, .] of a grade-1 or grade-2 A cubes to zero.
"""

from chessboard import graded
from chessboard.graded import GradedMatrix

units = graded.unit_basis()
nil = all(graded.derivation_power(a, b, 3).is_zero() for a in units if a.grade for b in units)
print("(Der_A)^3 = 0 for every grade-1/2 unit A:", nil)

(x, y, z), defect = graded.find_jacobi_witness()
print("Jacobi defect on units of grade 1:", [[str(v) for v in u.entries] for u in (x, y, z)],
      "->", [str(v) for v in defect.entries], "on the diagonal")

rep = graded.d_complex_report()
print(f"\nd B = [eta, B]: rank d = {rep.rank_d}, rank d^2 = {rep.rank_d2}, d^3 = 0: {rep.d3_zero}")

# A grade-1 connection A = (alpha, beta, gamma) is flat iff (a+1)(b+1)(c+1) = 1.
print("\nflat triples:")
for t in graded.enumerate_symmetric_flat():
    a = GradedMatrix.from_entries(1, *t)
    print("  ", [str(v) for v in t], "Omega = 0:", graded.curvature_omega(a).is_zero())

u = GradedMatrix.from_entries(0, 1, 2, 3)
print("\npure gauge U^-1 dU for U = diag(1, 2, 3):", [str(v) for v in graded.pure_gauge(u).entries])
print("its curvature vanishes:", graded.curvature_omega(graded.pure_gauge(u)).is_zero())
