"""Cube roots of unity and cubic matrices.

Everything below is exact: j lives in the cyclotomic field Q(zeta_24), so
identities either hold on the nose or fail with a concrete witness.
"""

from chessboard import cubic
from chessboard.scalar import J, J2, ONE, SQRT3

print("1 + j + j^2 =", ONE + J + J2)
print("j^3 =", J ** 3, "  conjugate(j) =", J.conjugate())
print("sqrt3 * sqrt3 =", SQRT3 * SQRT3)

# Three-index arrays multiply three at a time. The star law contracts
# a_{piq} b_{qkr} c_{rlp}; oslash is star with the outer factors rotated.
a = cubic.basis_unit(1, 1, 2, 2)
print("\nJ(e112) =", cubic.cyclic_J(a))
print("J(e121) =", cubic.cyclic_J(cubic.basis_unit(1, 2, 1, 2)))

# Neither law is associative; the witness is the first unit 5-tuple that differs.
tup, left, right = cubic.non_associativity_witness(2, "oslash")
print("\noslash non-associativity witness:", tup)
print("  (a(bcd)e) =", left)
print("  ((abc)de) =", right)

# The j-bracket lands in the J x = j x eigenspace, spanned for n = 2 by rho1, rho2.
r1, r2 = cubic.rho_basis()
print("\nrho1 =", r1)
print("rho2 =", r2)
c = cubic.bracket_constant(cubic.j_bracket(r1, r2, r1), r2)
u1, u2 = cubic.rho_basis(normalization="unit")
cu = cubic.bracket_constant(cubic.j_bracket(u1, u2, u1), u2)
print("{rho1, rho2, rho1} =", c, "* rho2, i.e. 2 j^2 rho2 (unit normalization:", cu, ")")

table = cubic.mult_table(3, "star")
print(f"\nfull n=3 star table: {len(table)} products of basis units")
