"""The Z3-graded algebra of 3 x 3 matrices and its matrix gauge theory.

Grade g matrices have nonzero entries only at positions (i, i+g mod 3):

    grade 0: diag(alpha, beta, gamma)
    grade 1: alpha at (1,2), beta at (2,3), gamma at (3,1)
    grade 2: gamma at (1,3), alpha at (2,1), beta at (3,2)

The graded commutator [A, B] = AB - j^{ab} BA defines derivations that are
cubic nilpotent for grades 1 and 2, and the differential dB = [eta, B]
with the grade-1 matrix eta of unit entries satisfies d^3 = 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .linalg import RowEchelon, SquareMatrix, as_scalar
from .scalar import J, J2, ONE, ZERO, ExactScalar, j_power

# (row, col) of alpha, beta, gamma for each grade, 0-based
POSITIONS = {
    0: ((0, 0), (1, 1), (2, 2)),
    1: ((0, 1), (1, 2), (2, 0)),
    2: ((1, 0), (2, 1), (0, 2)),
}


def grade_of_position(i, k):
    return (k - i) % 3


class GradedMatrix:
    """A 3 x 3 matrix with a definite Z3 grade."""

    __slots__ = ("grade", "m")

    def __init__(self, grade, m):
        grade %= 3
        if not isinstance(m, SquareMatrix):
            m = SquareMatrix(m)
        if m.n != 3:
            raise ValueError("graded matrices are 3 x 3")
        for i, k in itertools.product(range(3), repeat=2):
            if m[i, k] and grade_of_position(i, k) != grade:
                raise ValueError(f"entry ({i + 1},{k + 1}) is not allowed in grade {grade}")
        self.grade = grade
        self.m = m

    @classmethod
    def from_entries(cls, grade, alpha, beta, gamma):
        rows = [[ZERO] * 3 for _ in range(3)]
        for (i, k), v in zip(POSITIONS[grade % 3], (alpha, beta, gamma)):
            rows[i][k] = as_scalar(v)
        return cls(grade, SquareMatrix(rows))

    @classmethod
    def zero(cls, grade):
        return cls(grade, SquareMatrix.zeros(3))

    @classmethod
    def identity(cls):
        return cls(0, SquareMatrix.identity(3))

    @property
    def entries(self):
        """(alpha, beta, gamma) in the layout of this grade."""
        return tuple(self.m[i, k] for i, k in POSITIONS[self.grade])

    def __matmul__(self, other):
        return GradedMatrix(self.grade + other.grade, self.m @ other.m)

    def _same_grade(self, other):
        if self.grade != other.grade:
            raise ValueError("sum of matrices of different grade has no definite grade")

    def __add__(self, other):
        self._same_grade(other)
        return GradedMatrix(self.grade, self.m + other.m)

    def __sub__(self, other):
        self._same_grade(other)
        return GradedMatrix(self.grade, self.m - other.m)

    def __neg__(self):
        return GradedMatrix(self.grade, -self.m)

    def scale(self, c):
        return GradedMatrix(self.grade, self.m.scale(c))

    def __eq__(self, other):
        return isinstance(other, GradedMatrix) and self.grade == other.grade and self.m == other.m

    def __hash__(self):
        return hash((self.grade, self.m))

    def __repr__(self):
        a, b, c = self.entries
        return f"GradedMatrix(grade={self.grade}, alpha={a}, beta={b}, gamma={c})"

    def is_zero(self):
        return self.m.is_zero()

    def inverse(self):
        return GradedMatrix(-self.grade, self.m.inverse())

    def to_json(self):
        a, b, c = self.entries
        return {"grade": self.grade, "alpha": a.to_json(), "beta": b.to_json(), "gamma": c.to_json()}

    @classmethod
    def from_json(cls, data):
        return cls.from_entries(data["grade"], *(ExactScalar.from_json(data[k])
                                                 for k in ("alpha", "beta", "gamma")))


ETA = GradedMatrix.from_entries(1, 1, 1, 1)


def graded_product(a, b):
    return a @ b


def graded_commutator(a, b):
    """[A, B] = AB - j^{ab} BA."""
    return GradedMatrix(a.grade + b.grade, a.m @ b.m - (b.m @ a.m).scale(j_power(a.grade * b.grade)))


def derivation(a, b):
    """Der_A(B) = [A, B]."""
    return graded_commutator(a, b)


def derivation_power(a, b, times):
    for _ in range(times):
        b = derivation(a, b)
    return b


def jacobi_defect(x, y, z):
    """[[X,Y],Z] + [[Y,Z],X] + [[Z,X],Y] with graded commutators."""
    c = graded_commutator
    return c(c(x, y), z) + c(c(y, z), x) + c(c(z, x), y)


def graded_parts(m):
    """Split an arbitrary 3 x 3 matrix into its three homogeneous components."""
    m = m if isinstance(m, SquareMatrix) else SquareMatrix(m)
    parts = []
    for g in range(3):
        rows = [[m[i, k] if grade_of_position(i, k) == g else ZERO for k in range(3)] for i in range(3)]
        parts.append(GradedMatrix(g, SquareMatrix(rows)))
    return parts


def graded_commutator_mixed(m, n):
    """Bilinear extension of the graded commutator to inhomogeneous matrices."""
    acc = SquareMatrix.zeros(3)
    for a in graded_parts(m):
        for b in graded_parts(n):
            acc = acc + graded_commutator(a, b).m
    return acc


def unit_basis():
    """The 9 matrix units, each with its grade."""
    return [GradedMatrix(grade_of_position(i, k), SquareMatrix.unit(3, i, k))
            for i in range(3) for k in range(3)]


def matrix_d(b, eta=ETA):
    """dB = eta B - j^b B eta."""
    return graded_commutator(eta, b)


def d_power(b, times, eta=ETA):
    for _ in range(times):
        b = matrix_d(b, eta)
    return b


def _d_operator_rows(power):
    """Matrix of d**power on the 9-dimensional space, columns indexed by unit basis."""
    cols = [d_power(u, power).m.flatten() for u in unit_basis()]
    return [[cols[c][r] for c in range(9)] for r in range(9)]


def _matmul_rows(a, b):
    return [[sum((a[i][t] * b[t][k] for t in range(len(b))), ZERO) for k in range(len(b[0]))]
            for i in range(len(a))]


@dataclass
class ComplexReport:
    rank_d: int
    rank_d2: int
    d3_zero: bool
    im_d_in_ker_d2: bool
    im_d2_in_ker_d: bool

    @property
    def kernel_dims(self):
        return 9 - self.rank_d, 9 - self.rank_d2


def d_complex_report():
    """Ranks of d and d^2 on the basis and the two inclusions Im d in Ker d^2, Im d^2 in Ker d."""
    d1, d2 = _d_operator_rows(1), _d_operator_rows(2)

    def rk(rows):
        ech = RowEchelon(9)
        for r in rows:
            ech.add(r)
        return ech.rank

    def is_zero(rows):
        return all(not x for r in rows for x in r)

    d3 = all(d_power(u, 3).is_zero() for u in unit_basis())
    return ComplexReport(rk(d1), rk(d2), d3,
                         is_zero(_matmul_rows(d2, d1)), is_zero(_matmul_rows(d1, d2)))


# --- gauge theory -------------------------------------------------------------

def curvature_omega(a, eta=ETA):
    """Omega = d^2 A + d(A^2) + A dA + A^3 for a grade-1 connection A."""
    if a.grade != 1:
        raise ValueError("the connection must have grade 1")
    a2 = a @ a
    return (d_power(a, 2, eta) + matrix_d(a2, eta) + a @ matrix_d(a, eta) + a2 @ a)


def flat_condition(alpha, beta, gamma):
    """Both forms of the flatness condition; raises if they disagree."""
    alpha, beta, gamma = as_scalar(alpha), as_scalar(beta), as_scalar(gamma)
    expanded = (alpha + beta + gamma) + alpha * beta + beta * gamma + gamma * alpha \
        + alpha * beta * gamma == 0
    factored = (alpha + 1) * (beta + 1) * (gamma + 1) == 1
    if expanded != factored:
        raise AssertionError("the two forms of the flatness condition disagree")
    return factored


def enumerate_symmetric_flat():
    """The 3 fully symmetric solutions and the 6 permutations of (0, j-1, j^2-1)."""
    sols = [(r - 1,) * 3 for r in (ONE, J, J2)]
    base = (ZERO, J - 1, J2 - 1)
    sols += [tuple(p) for p in itertools.permutations(base)]
    return sols


def gauge_transform(a, u, eta=ETA):
    """A' = U^{-1} A U + U^{-1} dU."""
    ui = u.inverse()
    return ui @ a @ u + ui @ matrix_d(u, eta)


def pure_gauge(u, eta=ETA):
    """U^{-1} dU."""
    return u.inverse() @ matrix_d(u, eta)


def covariant_apply(a, phi, eta=ETA):
    """D Phi = d Phi + A Phi."""
    return matrix_d(phi, eta) + a @ phi


def conjugated_operator(a, u, eta=ETA):
    """Write U^{-1} (d + A) U as j^u (d + A'') and return (u, A'').

    From d(U Phi) = (dU) Phi + j^u U dPhi one gets
    U^{-1} D (U Phi) = j^u dPhi + (U^{-1} A U + U^{-1} dU) Phi,
    so A'' = j^{-u} A' with A' the gauge transform of A.
    """
    return u.grade, gauge_transform(a, u, eta).scale(j_power(-u.grade))


def conjugated_operator_check(a, u, phi, eta=ETA):
    """Compare U^{-1} D(U Phi) with j^u (d + A'') Phi on a test element."""
    ui = u.inverse()
    lhs = ui @ covariant_apply(a, u @ phi, eta)
    g, a2 = conjugated_operator(a, u, eta)
    rhs = covariant_apply(a2, phi, eta).scale(j_power(g))
    return lhs == rhs


def literal_conjugation_identity(a, u, phi, eta=ETA):
    """The naive claim U^{-1} (d + A) U Phi == (d + j^u A) Phi."""
    ui = u.inverse()
    lhs = ui @ covariant_apply(a, u @ phi, eta)
    rhs = covariant_apply(a.scale(j_power(u.grade)), phi, eta)
    return lhs == rhs


def find_jacobi_witness(grades=(1, 1, 1)):
    """First triple of unit matrices of the given grades with nonzero Jacobi defect."""
    units = unit_basis()
    pools = [[u for u in units if u.grade == g] for g in grades]
    for x, y, z in itertools.product(*pools):
        defect = jacobi_defect(x, y, z)
        if not defect.is_zero():
            return (x, y, z), defect
    return None
