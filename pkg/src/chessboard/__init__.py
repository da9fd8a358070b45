"""Exact algebra of ternary products, Z3-graded calculus and the cubic Dirac equation.

Submodules:

    scalar        exact arithmetic in Q(zeta_24) (j, i, sqrt2, sqrt3)
    cubic         cubic matrices, the star and oslash ternary laws, tables
    enveloping    j-commutators of square matrices, double-bracket search
    automorphism  the Lambda equations of the rho algebra
    graded        Z3-graded 3x3 matrices, d^3 = 0, matrix gauge theory
    grassmann     ternary Grassmann algebras and one-generator derivations
    exterior      the Z3-graded exterior calculus with d^3 = 0
    geometry      curvature 3-forms, connection jets, nabla^3
    dirac         ternary Clifford algebra and the cubic dispersion relation
    verify        invariant suites behind ``chessboard verify``
"""

from .scalar import I, J, J2, ONE, SQRT2, SQRT3, ZERO, ZETA, ExactScalar, j_power, to_complex

__version__ = "0.1.0"

__all__ = ["ExactScalar", "ZETA", "J", "J2", "I", "SQRT2", "SQRT3", "ONE", "ZERO",
           "j_power", "to_complex", "__version__"]
