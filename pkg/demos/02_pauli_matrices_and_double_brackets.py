"""The j-commutator on ordinary matrices.

[A, B, C] = ABC + j BCA + j^2 CAB represents the rho algebra with Pauli
matrices. Nesting two brackets gives 40 classes of words in five matrices,
and an exact rank computation shows there is no linear identity among them.
"""

from chessboard import enveloping as env
from chessboard.enveloping import SIGMA1, SIGMA2, j_commutator
from chessboard.linalg import SquareMatrix



def show(m):
    return [[str(x) for x in row] for row in m.rows]


print("[s1, s2, s1] =", show(j_commutator(SIGMA1, SIGMA2, SIGMA1)))
print("-2 s2        =", show(SIGMA2.scale(-2)))

a = SquareMatrix([[1, 2], [0, 3]])
c = SquareMatrix([[0, 1], [1, 1]])
print("\n[A, 1, C] == AC - CA:", j_commutator(a, SquareMatrix.identity(2), c) == a @ c - c @ a)

words, sizes = env.enumerate_double_brackets()
print(f"\n{len(words)} double-bracket classes, orbit sizes {set(sizes)}")
print("first few:", [str(w) for w in words[:4]])

cert = env.double_bracket_identity_search(2, seed=1)
print(f"2x2 matrices: rank {cert.rank}, null space dimension {cert.nullity}")

# Sanity check of the method: ordinary commutators do have an identity (Jacobi).
jac = env.double_bracket_identity_search(2, arity=2, seed=1)
print(f"binary commutators: null space dimension {jac.nullity},",
      "vector", [str(x) for x in jac.null_vectors[0]])
