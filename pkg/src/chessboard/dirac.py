"""Ternary Clifford algebra and the third-order Dirac-type equation.

The three grade-1 matrices Q^a satisfy a cyclic ternary relation
Q^a Q^b Q^c + Q^b Q^c Q^a + Q^c Q^a Q^b = 3 eta^{abc} 1, and the operator
L = Q^1 d_x + Q^2 d_y + Q^3 d_z + m B cubes to a scalar. Its symbol gives
the cubic dispersion relation

    omega^3 = k_x^3 + k_y^3 + k_z^3 - 3 k_x k_y k_z + m^3,

which factorizes as omega^3 - zeta r^2 = m^3 in cylindrical variables
around the [1, 1, 1] axis. Separated plane-wave solutions are built from
e^{omega t}, e^{-omega t/2} cos(tau), e^{-omega t/2} sin(tau) and the same
functions of k.r.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .exterior import CoordinateAlgebra
from .geometry import MatrixPoly
from .linalg import SquareMatrix
from .scalar import J, J2, ONE, ZERO, ExactScalar

Q1 = SquareMatrix([[ZERO, ONE, ZERO], [ZERO, ZERO, J], [J2, ZERO, ZERO]])
Q2 = SquareMatrix([[ZERO, ONE, ZERO], [ZERO, ZERO, J2], [J, ZERO, ZERO]])
Q3 = SquareMatrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
Q = (Q1, Q2, Q3)
B = SquareMatrix.diagonal([ONE, J, J2])

LITERAL = "literal"  # third term Q^c Q^b Q^a
CYCLIC = "cyclic"  # third term Q^c Q^a Q^b


def _scalar_part(m):
    """c if m == c * identity, else None."""
    c = m[0, 0]
    return c if m == SquareMatrix.identity(m.n).scale(c) else None


def ternary_sum(a, b, c, convention=CYCLIC):
    qa, qb, qc = Q[a - 1], Q[b - 1], Q[c - 1]
    third = qc @ qa @ qb if convention == CYCLIC else qc @ qb @ qa
    return qa @ qb @ qc + qb @ qc @ qa + third


@dataclass
class EtaTensor:
    """eta^{abc} keyed by 1-based triples."""

    values: dict

    def __getitem__(self, abc):
        return self.values[tuple(abc)]

    def is_cyclic(self):
        return all(self[(a, b, c)] == self[(b, c, a)] == self[(c, a, b)]
                   for a, b, c in itertools.product((1, 2, 3), repeat=3))

    def nonzero(self):
        return {k: v for k, v in self.values.items() if v}

    def cubic_form(self, k):
        """eta^{abc} k_a k_b k_c for a 3-vector k."""
        return sum((self[(a, b, c)] * k[a - 1] * k[b - 1] * k[c - 1]
                    for a, b, c in itertools.product((1, 2, 3), repeat=3)), ZERO)


# table as printed: the second list repeats 321, presumably meaning 312 in the first
PRINTED_ETA = {
    (1, 1, 1): ONE, (2, 2, 2): ONE, (3, 3, 3): ONE,
    "j2_list": ((1, 2, 3), (2, 3, 1), (3, 2, 1)),
    "j_list": ((3, 2, 1), (2, 1, 3), (1, 3, 2)),
}


@dataclass
class SymmetrizationReport:
    scalar_counts: dict  # convention -> number of triples giving a scalar matrix
    winner: str | None
    eta: EtaTensor | None
    cubes_are_identity: bool
    printed_table_conflicts: list = field(default_factory=list)

    @property
    def ok(self):
        return self.winner is not None and self.eta.is_cyclic() and self.cubes_are_identity


def symmetrization_check():
    """Test both orderings of the third term on all 27 triples and extract eta."""
    counts, etas = {}, {}
    for conv in (LITERAL, CYCLIC):
        vals = {}
        for abc in itertools.product((1, 2, 3), repeat=3):
            c = _scalar_part(ternary_sum(*abc, convention=conv))
            if c is not None:
                vals[abc] = c / 3
        counts[conv] = len(vals)
        etas[conv] = vals
    winner = next((c for c in (CYCLIC, LITERAL) if counts[c] == 27), None)
    eta = EtaTensor(etas[winner]) if winner else None
    conflicts = []
    if eta is not None:
        for key, want in (("j2_list", J2), ("j_list", J)):
            for abc in PRINTED_ETA[key]:
                if eta[abc] != want:
                    conflicts.append((abc, str(want), str(eta[abc])))
    cubes = all(q @ q @ q == SquareMatrix.identity(3) for q in Q)
    return SymmetrizationReport(counts, winner, eta, cubes, conflicts)


# --- operator cube ------------------------------------------------------------------

SYMBOLS = ("dx", "dy", "dz", "m")


@dataclass
class OperatorCube:
    scalar: object  # PolyFunction in the commuting symbols dx, dy, dz, m (indices 1..4)
    diagonal_scalar: bool
    offdiagonal_zero: bool
    mixed_coefficient: ExactScalar

    def coefficient(self, powers):
        """Coefficient of dx^a dy^b dz^c m^e for powers (a, b, c, e)."""
        mono = tuple(i + 1 for i, p in enumerate(powers) for _ in range(p))
        return self.scalar.terms.get(mono, ZERO)

    def symbol(self, k, m):
        """The scalar polynomial evaluated at (dx, dy, dz, m) -> (k_x, k_y, k_z, m)."""
        return self.scalar.evaluate([_as_exact(v) for v in (*k, m)])


def _as_exact(v):
    if isinstance(v, ExactScalar):
        return v
    return ExactScalar(Fraction(v))


def operator_cube():
    """(Q^1 dx + Q^2 dy + Q^3 dz + m B)^3 with dx, dy, dz, m commuting symbols."""
    alg = CoordinateAlgebra(4)
    op = MatrixPoly.zeros(alg, 3)
    for idx, mat in enumerate((Q1, Q2, Q3, B)):
        op = op + MatrixPoly.constant(alg, mat) * alg.coordinate(idx + 1)
    cube = op * op * op
    diag = cube[0, 0]
    diagonal_scalar = cube[1, 1] == diag and cube[2, 2] == diag
    off = all(cube[i, k].is_zero() for i in range(3) for k in range(3) if i != k)
    mixed = diag.terms.get((1, 2, 3), ZERO)
    return OperatorCube(diag, diagonal_scalar, off, mixed)


# --- dispersion ----------------------------------------------------------------------

def cubic_form(k):
    kx, ky, kz = k
    return kx ** 3 + ky ** 3 + kz ** 3 - 3 * kx * ky * kz


def dispersion_rhs(k, m):
    return cubic_form(k) + m ** 3


@dataclass
class DispersionPoint:
    omega: object
    k: tuple
    m: object

    def __post_init__(self):
        self.k = tuple(self.k)

    @property
    def zeta(self):
        return sum(self.k)

    @property
    def chi(self):
        """Re(j k_x + j^2 k_y + k_z)."""
        kx, ky, kz = self.k
        return kz - (kx + ky) / 2 if not _is_exact(kx) else kz - Fraction(kx + ky) / 2

    @property
    def cyl_eta(self):
        """Im(j k_x + j^2 k_y + k_z) (a float: it carries sqrt(3))."""
        kx, ky, _ = self.k
        return math.sqrt(3) / 2 * float(kx - ky)

    @property
    def r2(self):
        """chi^2 + cyl_eta^2, exact for rational k."""
        kx, ky, _ = self.k
        if _is_exact(kx):
            return self.chi ** 2 + Fraction(3, 4) * (kx - ky) ** 2
        return self.chi ** 2 + 0.75 * (kx - ky) ** 2

    @property
    def r(self):
        return math.sqrt(float(self.r2))

    @property
    def phi(self):
        return math.atan2(self.cyl_eta, float(self.chi))

    def residual(self):
        return dispersion_residual(self)

    def to_row(self):
        return [float(x) for x in (*self.k, self.m, self.omega)]


def _is_exact(x):
    return isinstance(x, (int, Fraction))


def dispersion_residual(p):
    return p.omega ** 3 - dispersion_rhs(p.k, p.m)


def _exact_cube_root(q):
    q = Fraction(q)
    sign = -1 if q < 0 else 1
    num, den = abs(q.numerator), q.denominator
    rn, rd = round(num ** (1 / 3)), round(den ** (1 / 3))
    for a in (rn - 1, rn, rn + 1):
        for b in (rd - 1, rd, rd + 1):
            if a >= 0 and b > 0 and a ** 3 == num and b ** 3 == den:
                return sign * Fraction(a, b)
    return None


def real_cube_root(x):
    """Exact root for perfect rational cubes, else the principal real float root."""
    if _is_exact(x):
        r = _exact_cube_root(x)
        if r is not None:
            return r
    x = float(x)
    return math.copysign(abs(x) ** (1 / 3), x)


def solve_omega(k, m):
    """(real root, j * real root, j^2 * real root) of omega^3 = RHS."""
    w = real_cube_root(dispersion_rhs(k, m))
    jc = complex(-0.5, math.sqrt(3) / 2)
    return w, complex(w) * jc, complex(w) * jc.conjugate()


def cylindrical_identity_check(p):
    """k_x^3 + k_y^3 + k_z^3 - 3 k_x k_y k_z == zeta r^2 and the factorized form."""
    lhs = cubic_form(p.k)
    rhs = p.zeta * p.r2
    w, z, r2 = p.omega, p.zeta, p.r2
    factored = (w + z) * (w ** 2 - r2) + (w - z) * (w ** 2 + r2)
    target = 2 * (w ** 3 - z * r2)
    if all(_is_exact(x) for x in (*p.k, p.omega)):
        return lhs == rhs and factored == target
    scale = 1 + abs(lhs) + abs(factored)
    return abs(lhs - rhs) <= 1e-9 * scale and abs(factored - target) <= 1e-9 * scale


def k_from_cylindrical(zeta, chi, eta):
    """Inverse of (k) -> (zeta, chi, cyl_eta) (floats)."""
    kz = (zeta + 2 * chi) / 3
    s = zeta - kz
    dlt = 2 * eta / math.sqrt(3)
    return ((s + dlt) / 2, (s - dlt) / 2, kz)


def rotate_about_axis(k, angle):
    """Rotate k about [1, 1, 1]: phi -> phi + angle with zeta and r fixed."""
    p = DispersionPoint(0, tuple(float(x) for x in k), 0)
    r, phi = p.r, p.phi
    return k_from_cylindrical(p.zeta, r * math.cos(phi + angle), r * math.sin(phi + angle))


def dilate(k, lam):
    """(r, zeta) -> (lam r, zeta / lam^2)."""
    p = DispersionPoint(0, tuple(float(x) for x in k), 0)
    return k_from_cylindrical(p.zeta / lam ** 2, lam * float(p.chi), lam * p.cyl_eta)


# --- plane waves --------------------------------------------------------------------

DIRECT = "direct"
CONJUGATE = "conjugate"
_S3 = math.sqrt(3) / 2


def _basis(x):
    """(e^{x}, e^{-x/2} cos(sqrt3 x/2), e^{-x/2} sin(sqrt3 x/2))."""
    e = math.exp(-x / 2)
    return (math.exp(x), e * math.cos(_S3 * x), e * math.sin(_S3 * x))


class DispersionError(ValueError):
    pass


@dataclass
class PlaneWaveSolution:
    A: np.ndarray
    omega: float
    k: tuple
    m: float
    sign: str = DIRECT

    def __post_init__(self):
        self.A = np.asarray(self.A, dtype=float).reshape(3, 3)
        self.k = tuple(self.k)
        if self.sign not in (DIRECT, CONJUGATE):
            raise ValueError(f"unknown sign {self.sign!r}")
        res = dispersion_residual(DispersionPoint(self.omega, self.k, self.m))
        if _is_exact(res):
            bad = res != 0
        else:
            scale = 1 + abs(float(self.omega)) ** 3 + abs(float(self.m)) ** 3 \
                + sum(abs(float(x)) ** 3 for x in self.k)
            bad = abs(float(res)) > 1e-9 * scale
        if bad:
            raise DispersionError(f"(omega, k, m) is off the cubic surface (residual {res})")

    @property
    def _s(self):
        return 1.0 if self.sign == DIRECT else -1.0

    def __call__(self, t, x, y, z):
        s = self._s
        kr = sum(float(a) * b for a, b in zip(self.k, (x, y, z)))
        tb = _basis(s * float(self.omega) * t)
        sb = _basis(s * kr)
        return float(sum(self.A[a, b] * tb[a] * sb[b] for a in range(3) for b in range(3)))

    @property
    def effective(self):
        """(omega, k, m) actually carried by the exponentials."""
        s = self._s
        return (s * float(self.omega), tuple(s * float(x) for x in self.k), s * float(self.m))


def plane_wave(omega, k, m, A=None, sign=DIRECT):
    if A is None:
        A = np.ones((3, 3))
    return PlaneWaveSolution(A, omega, k, m, sign)


def _third(f, h):
    return (f(2 * h) - 2 * f(h) + 2 * f(-h) - f(-2 * h)) / (2 * h ** 3)


def _mixed(f, h):
    acc = 0.0
    for sx, sy, sz in itertools.product((1, -1), repeat=3):
        acc += sx * sy * sz * f(sx * h, sy * h, sz * h)
    return acc / (8 * h ** 3)


def _richardson(op, h):
    return (4 * op(h / 2) - op(h)) / 3


def residual_pde(sol, points, h=1e-2):
    """max |u_ttt - (u_xxx + u_yyy + u_zzz - 3 u_xyz) - m_eff^3 u| over sample points.

    Third derivatives by central differences, Richardson-refined from h and h/2.
    """
    m3 = sol.effective[2] ** 3
    worst = 0.0
    for (t, x, y, z) in points:
        def along(axis):
            def f(s):
                p = [t, x, y, z]
                p[axis] += s
                return sol(*p)
            return f

        dt, dx, dy, dz = (_richardson(lambda hh, a=a: _third(along(a), hh), h) for a in range(4))
        dxyz = _richardson(lambda hh: _mixed(lambda a, b, c: sol(t, x + a, y + b, z + c), hh), h)
        res = dt - (dx + dy + dz - 3 * dxyz) - m3 * sol(t, x, y, z)
        worst = max(worst, abs(res))
    return worst


def analytic_residual(sol):
    """Residual of the operator on the exponential modes: amplitude times the symbol defect."""
    w, k, m = sol.effective
    defect = w ** 3 - (cubic_form(k) + m ** 3)
    return float(np.abs(sol.A).sum()) * abs(defect)


# --- boundedness of products -----------------------------------------------------------

# exponent of entry (a, b) as (coefficient of omega t, coefficient of k.r)
_TIME_EXP = (Fraction(1), Fraction(-1, 2), Fraction(-1, 2))
_SPACE_EXP = (Fraction(1), Fraction(-1, 2), Fraction(-1, 2))


def entry_exponent(a, b, sign=DIRECT):
    """Real-exponential exponent of solution-matrix entry (a, b), 0-based."""
    s = 1 if sign == DIRECT else -1
    return (s * _TIME_EXP[a], s * _SPACE_EXP[b])


def product_exponent(entries):
    """Sum of exponents over a product of entries [(a, b, sign), ...]."""
    t = sum((entry_exponent(a, b, s)[0] for a, b, s in entries), Fraction(0))
    r = sum((entry_exponent(a, b, s)[1] for a, b, s in entries), Fraction(0))
    return t, r


def boundedness_check(products):
    """True iff every product of entries has zero real-exponential exponent."""
    return all(product_exponent(p) == (0, 0) for p in products)


def determinant_terms(sign=DIRECT):
    return [[(a, perm[a], sign) for a in range(3)] for perm in itertools.permutations(range(3))]


def minor_terms(row, col, sign=DIRECT):
    """The two products in the 2 x 2 minor obtained by deleting (row, col)."""
    rows = [a for a in range(3) if a != row]
    cols = [b for b in range(3) if b != col]
    return [[(rows[0], cols[0], sign), (rows[1], cols[1], sign)],
            [(rows[0], cols[1], sign), (rows[1], cols[0], sign)]]


@dataclass
class BoundednessReport:
    determinant: bool
    minors: dict  # (row, col) -> (bounded, exponent of the minor)
    cofactor_terms: bool  # entry (a, b) times its minor
    conjugate_pairs: bool  # direct minor times conjugate minor

    @property
    def all_minors(self):
        return all(v[0] for v in self.minors.values())


def boundedness_report(sign=DIRECT):
    other = CONJUGATE if sign == DIRECT else DIRECT
    det = boundedness_check(determinant_terms(sign))
    minors = {}
    cof, pairs = True, True
    for a, b in itertools.product(range(3), repeat=2):
        terms = minor_terms(a, b, sign)
        minors[(a, b)] = (boundedness_check(terms), product_exponent(terms[0]))
        cof &= boundedness_check([t + [(a, b, sign)] for t in terms])
        pairs &= boundedness_check([t + u for t in terms for u in minor_terms(a, b, other)])
    return BoundednessReport(det, minors, cof, pairs)


# --- mass shell -------------------------------------------------------------------------

@dataclass
class MassShellReport:
    per_point: list
    failing: list
    combined: bool | None
    omega_sq: float | None


def mass_shell_reduce(points, M, tol=1e-9):
    """Check omega_a^2 - r_a^2 = M^2 per point and the combined hyperboloid."""
    per, failing = [], []
    for idx, p in enumerate(points):
        on_surface = abs(float(dispersion_residual(p))) <= tol * (1 + abs(float(p.omega)) ** 3)
        shell = abs(float(p.omega) ** 2 - float(p.r2) - float(M) ** 2) <= tol * (1 + float(M) ** 2)
        per.append({"index": idx, "on_surface": on_surface, "shell": shell})
        if not (on_surface and shell):
            failing.append(idx)
    if failing:
        return MassShellReport(per, failing, None, None)
    omega_sq = sum(float(p.omega) ** 2 for p in points)
    combined = abs(omega_sq - sum(float(p.r2) for p in points) - 3 * float(M) ** 2) \
        <= tol * (1 + omega_sq)
    return MassShellReport(per, failing, combined, omega_sq)


def point_on_shell(k, M):
    """A point with omega = sqrt(M^2 + r^2) and m chosen to put it on its cubic surface."""
    p = DispersionPoint(0.0, tuple(float(x) for x in k), 0.0)
    omega = math.sqrt(float(M) ** 2 + float(p.r2))
    m = real_cube_root(omega ** 3 - p.zeta * float(p.r2))
    return DispersionPoint(omega, p.k, m)


def sample_dispersion(m, lo, hi, step):
    """Rows (k_x, k_y, k_z, m, omega_real) over a cubic k-grid, in lexicographic order."""
    count = int(round((hi - lo) / step)) + 1
    axis = [lo + i * step for i in range(count)]
    rows = []
    for kx, ky, kz in itertools.product(axis, repeat=3):
        w = real_cube_root(dispersion_rhs((kx, ky, kz), m))
        rows.append((kx, ky, kz, m, float(w)))
    return rows
