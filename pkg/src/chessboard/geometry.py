"""Z3 gauge theory in coordinates and linear connections on point jets.

A gauge potential is a 1-form A = A_i dxi^i with matrix-valued polynomial
coefficients. Its curvature 3-form Omega = d^2 A + d(A^2) + A dA + A^3
splits as Omega_{ikm} dxi^i dxi^k dxi^m + F_{ik} d2xi^i dxi^k. The
coefficients are computed twice: from closed formulas, and by running the
exterior calculus on A itself.

A linear connection Gamma^l_{ik} is handled through the matrices
(Gamma_i)^l_k = Gamma^l_{ik}, so that grad e_k = e_l (Gamma_i)^l_k dxi^i and
the iterated covariant differential of the frame is (d + Gamma)^3.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .exterior import CoordinateAlgebra, FormElement, PolyFunction, d, product
from .linalg import SquareMatrix
from .scalar import J, J2, ONE, ZERO, ExactScalar, random_qj


class MatrixPoly:
    """An m x m matrix of PolyFunctions over one coordinate algebra."""

    __slots__ = ("alg", "m", "rows")

    def __init__(self, alg, rows):
        self.alg = alg
        self.rows = tuple(tuple(e if isinstance(e, PolyFunction) else alg.constant(e) for e in r)
                          for r in rows)
        self.m = len(self.rows)
        if any(len(r) != self.m for r in self.rows):
            raise ValueError("matrix must be square")

    @classmethod
    def zeros(cls, alg, m):
        return cls(alg, [[alg.zero()] * m for _ in range(m)])

    @classmethod
    def identity(cls, alg, m):
        return cls(alg, [[alg.constant(1 if i == k else 0) for k in range(m)] for i in range(m)])

    @classmethod
    def constant(cls, alg, mat):
        mat = mat if isinstance(mat, SquareMatrix) else SquareMatrix(mat)
        return cls(alg, [[alg.constant(mat[i, k]) for k in range(mat.n)] for i in range(mat.n)])

    def __getitem__(self, ik):
        i, k = ik
        return self.rows[i][k]

    def _check(self, other):
        if not isinstance(other, MatrixPoly) or other.m != self.m:
            raise ValueError("matrix dimension mismatch")

    def __add__(self, other):
        self._check(other)
        return MatrixPoly(self.alg, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        self._check(other)
        return MatrixPoly(self.alg, [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        return MatrixPoly(self.alg, [[e.scale(c) for e in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, (int, ExactScalar)):
            return self.scale(other)
        if isinstance(other, PolyFunction):
            return MatrixPoly(self.alg, [[e * other for e in r] for r in self.rows])
        self._check(other)
        m = self.m
        rows = []
        for i in range(m):
            row = []
            for k in range(m):
                acc = self.alg.zero()
                for t in range(m):
                    a, b = self.rows[i][t], other.rows[t][k]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            rows.append(row)
        return MatrixPoly(self.alg, rows)

    __matmul__ = __mul__

    def __rmul__(self, other):
        if isinstance(other, (int, ExactScalar)):
            return self.scale(other)
        if isinstance(other, PolyFunction):
            return MatrixPoly(self.alg, [[other * e for e in r] for r in self.rows])
        return NotImplemented

    def partial(self, i):
        return MatrixPoly(self.alg, [[e.partial(i) for e in r] for r in self.rows])

    def truncate(self, degree):
        return MatrixPoly(self.alg, [[e.truncate(degree) for e in r] for r in self.rows])

    def is_zero(self):
        return all(e.is_zero() for r in self.rows for e in r)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        return isinstance(other, MatrixPoly) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def conjugate(self):
        return MatrixPoly(self.alg.conjugate(), [[e.conjugate() for e in r] for r in self.rows])

    def at_origin(self):
        return SquareMatrix([[e.constant_term() for e in r] for r in self.rows])

    def evaluate(self, point):
        return SquareMatrix([[e.evaluate(point) for e in r] for r in self.rows])

    def __repr__(self):
        return "MatrixPoly(" + "; ".join(", ".join(str(e) for e in r) for r in self.rows) + ")"

    def to_json(self):
        return {"rows": [[e.to_json() for e in r] for r in self.rows]}


def commutator(a, b):
    return a * b - b * a


# --- gauge potentials ---------------------------------------------------------------

@dataclass
class GaugePotential:
    """A_i for i = 1..n, each an m x m MatrixPoly."""

    alg: CoordinateAlgebra
    components: list

    def __post_init__(self):
        if len(self.components) != self.alg.n:
            raise ValueError("need one matrix per coordinate")
        ms = {c.m for c in self.components}
        if len(ms) != 1:
            raise ValueError("all A_i must have the same matrix dimension")

    @property
    def n(self):
        return self.alg.n

    @property
    def m(self):
        return self.components[0].m

    def __getitem__(self, i):
        """A_i with a 1-based coordinate index."""
        return self.components[i - 1]

    def as_form(self):
        return FormElement(self.n, {((1, i),): self[i] for i in range(1, self.n + 1)})

    @classmethod
    def zero(cls, n, m):
        alg = CoordinateAlgebra(n)
        return cls(alg, [MatrixPoly.zeros(alg, m) for _ in range(n)])

    @classmethod
    def random(cls, rng: random.Random, n=3, m=2, degree=1, n_terms=3, coeff=random_qj):
        alg = CoordinateAlgebra(n)
        comps = [MatrixPoly(alg, [[alg.random_poly(rng, degree, n_terms, coeff) for _ in range(m)]
                                  for _ in range(m)]) for _ in range(n)]
        return cls(alg, comps)

    def to_json(self):
        return {"n": self.n, "m": self.m, "A": [c.to_json() for c in self.components]}


def _indices(n, k):
    return itertools.product(range(1, n + 1), repeat=k)


def field_strength(a):
    """F_{ik} = d_i A_k - d_k A_i + A_i A_k - A_k A_i, keyed by 1-based (i, k)."""
    return {(i, k): a[k].partial(i) - a[i].partial(k) + commutator(a[i], a[k])
            for i, k in _indices(a.n, 2)}


OMEGA_DERIVED = "derived"
OMEGA_DISPLAYED = "displayed"


def omega_components(a, variant=OMEGA_DERIVED):
    """Omega_{ikm} keyed by 1-based (i, k, m).

    ``displayed``: d_i d_k A_m + A_i d_k A_m - d_k A_m A_i + A_i A_k A_m.
    ``derived``: the same with the middle pair multiplied by -j^2, which is
    what the graded Leibniz rule produces for d(A^2) + A dA.
    The two agree whenever the A_i commute with the d_k A_m.
    """
    if variant not in (OMEGA_DERIVED, OMEGA_DISPLAYED):
        raise ValueError(f"unknown variant {variant!r}")
    weight = ONE if variant == OMEGA_DISPLAYED else -J2
    out = {}
    for i, k, m in _indices(a.n, 3):
        dkam = a[m].partial(k)
        cross = a[i] * dkam - dkam * a[i]
        out[(i, k, m)] = a[m].partial(k).partial(i) + cross.scale(weight) + a[i] * a[k] * a[m]
    return out


def assemble_curvature_threeform(a, variant=OMEGA_DERIVED):
    """Omega_{ikm} dxi^i dxi^k dxi^m + F_{ik} d2xi^i dxi^k from the coefficient formulas."""
    form = FormElement(a.n)
    for (i, k, m), c in omega_components(a, variant).items():
        form = form + FormElement(a.n, {((1, i), (1, k), (1, m)): c})
    for (i, k), c in field_strength(a).items():
        form = form + FormElement(a.n, {((2, i), (1, k)): c})
    return form


def curvature_by_calculus(a):
    """d^2 A + d(A^2) + A dA + A^3 with d(A^2) = dA A + j A dA."""
    af = a.as_form()
    da = d(af)
    return (d(da) + product(da, af) + product(af, da).scale(J) + product(af, da)
            + product(af, af, af))


def curvature_dual_path(a, variant=OMEGA_DERIVED):
    """(formula form, calculus form, agree)."""
    lhs = assemble_curvature_threeform(a, variant)
    rhs = curvature_by_calculus(a)
    return lhs, rhs, lhs == rhs


def covariant_derivative(a, i, x):
    """D_i X = d_i X + A_i X - X A_i."""
    return x.partial(i) + commutator(a[i], x)


def covariant_identity_forms(a):
    """(Omega 3-form block, (1/3)[j D_i F_{mk} + j^2 D_k F_{mi}] 3-form block)."""
    f = field_strength(a)
    third = ExactScalar(1) / 3
    lhs = FormElement(a.n)
    rhs = FormElement(a.n)
    for (i, k, m), c in omega_components(a).items():
        word = ((1, i), (1, k), (1, m))
        lhs = lhs + FormElement(a.n, {word: c})
        comb = (covariant_derivative(a, i, f[(m, k)]).scale(J)
                + covariant_derivative(a, k, f[(m, i)]).scale(J2)).scale(third)
        rhs = rhs + FormElement(a.n, {word: comb})
    return lhs, rhs


def covariant_identity_check(a):
    """Polynomial identity between the two reduced 3-forms.

    Holds for abelian potentials; for non-commuting A_i the cubic block of
    Omega is not gauge covariant, so no expression in D F can match it.
    """
    lhs, rhs = covariant_identity_forms(a)
    return lhs == rhs


def covariant_identity_at_origin(a):
    """The same comparison with all coefficients evaluated at xi = 0.

    At a point where A vanishes the nonlinear terms drop out of both sides
    and the identity reduces to the abelian computation.
    """
    lhs, rhs = covariant_identity_forms(a)
    return _at_origin_form(lhs) == _at_origin_form(rhs)


def gauge_transform_potential(a, u, u_inv):
    """A'_i = U^{-1} A_i U + U^{-1} d_i U for a MatrixPoly U with known inverse."""
    if u * u_inv != MatrixPoly.identity(a.alg, a.m):
        raise ValueError("u_inv is not the inverse of u")
    return GaugePotential(a.alg, [u_inv * a[i] * u + u_inv * u.partial(i)
                                  for i in range(1, a.n + 1)])


# --- linear connections on jets ----------------------------------------------------

def _zeros(*shape):
    if len(shape) == 1:
        return [ZERO] * shape[0]
    return [_zeros(*shape[1:]) for _ in range(shape[0])]


def _get(arr, idx):
    for t in idx:
        arr = arr[t]
    return arr


@dataclass
class ConnectionJet:
    """Gamma^l_{ik} and its first and second derivatives at one point (0-based arrays).

    gamma[l][i][k], dgamma[m][l][i][k] = d_m Gamma^l_{ik},
    d2gamma[p][m][l][i][k] = d_p d_m Gamma^l_{ik} (symmetric in p, m).
    """

    n: int
    gamma: list
    dgamma: list
    d2gamma: list | None = None

    def __post_init__(self):
        if self.d2gamma is not None:
            for p, m, l, i, k in itertools.product(range(self.n), repeat=5):
                if self.d2gamma[p][m][l][i][k] != self.d2gamma[m][p][l][i][k]:
                    raise ValueError("second derivatives must be symmetric")

    @classmethod
    def flat(cls, n):
        return cls(n, _zeros(n, n, n), _zeros(n, n, n, n), _zeros(n, n, n, n, n))

    @classmethod
    def random(cls, rng: random.Random, n=2, symmetric=False, coeff=None, second_order=True):
        coeff = coeff or (lambda r: ExactScalar(r.randint(-3, 3)))
        gamma, dgamma, d2 = _zeros(n, n, n), _zeros(n, n, n, n), _zeros(n, n, n, n, n)
        for l, i, k in itertools.product(range(n), repeat=3):
            if symmetric and k < i:
                continue
            gamma[l][i][k] = coeff(rng)
            for m in range(n):
                dgamma[m][l][i][k] = coeff(rng)
                for p in range(m, n):
                    d2[p][m][l][i][k] = d2[m][p][l][i][k] = coeff(rng) if second_order else ZERO
            if symmetric:
                gamma[l][k][i] = gamma[l][i][k]
                for m in range(n):
                    dgamma[m][l][k][i] = dgamma[m][l][i][k]
                    for p in range(n):
                        d2[p][m][l][k][i] = d2[p][m][l][i][k]
        return cls(n, gamma, dgamma, d2 if second_order else None)

    def matrices(self, alg=None):
        """Gamma_i(xi) as MatrixPoly, the Taylor polynomial of the jet at the origin."""
        alg = alg or CoordinateAlgebra(self.n)
        n = self.n
        half = ExactScalar(1) / 2
        mats = []
        for i in range(n):
            rows = []
            for l in range(n):
                row = []
                for k in range(n):
                    p = alg.constant(self.gamma[l][i][k])
                    for m in range(n):
                        c = self.dgamma[m][l][i][k]
                        if c:
                            p = p + alg.coordinate(m + 1).scale(c)
                    if self.d2gamma is not None:
                        for q, m in itertools.product(range(n), repeat=2):
                            c = self.d2gamma[q][m][l][i][k]
                            if c:
                                p = p + (alg.coordinate(q + 1) * alg.coordinate(m + 1)).scale(c * half)
                    row.append(p)
                rows.append(row)
            mats.append(MatrixPoly(alg, rows))
        return GaugePotential(alg, mats)

    @classmethod
    def from_potential(cls, pot):
        """Read the jet of Gamma_i(xi) at the origin off a potential."""
        n = pot.n
        gamma, dgamma, d2 = _zeros(n, n, n), _zeros(n, n, n, n), _zeros(n, n, n, n, n)
        for i, l, k in itertools.product(range(n), repeat=3):
            e = pot[i + 1][l, k]
            gamma[l][i][k] = e.constant_term()
            for m in range(n):
                dm = e.partial(m + 1)
                dgamma[m][l][i][k] = dm.constant_term()
                for p in range(n):
                    d2[p][m][l][i][k] = dm.partial(p + 1).constant_term()
        return cls(n, gamma, dgamma, d2)

    def to_json(self):
        def conv(x):
            return [conv(y) for y in x] if isinstance(x, list) else x.to_json()
        out = {"n": self.n, "index_ranges": {"gamma": "l,i,k", "dgamma": "m,l,i,k",
                                             "d2gamma": "p,m,l,i,k"},
               "gamma": conv(self.gamma), "dgamma": conv(self.dgamma)}
        if self.d2gamma is not None:
            out["d2gamma"] = conv(self.d2gamma)
        return out


def jet_with_vanishing_gamma(jet):
    """The same derivative data with Gamma = 0 at the point (a frame gauge choice)."""
    n = jet.n
    return ConnectionJet(n, _zeros(n, n, n), jet.dgamma, jet.d2gamma)


def riemann(jet):
    """R[l][m][i][k] = R^l_{mik} at the jet point."""
    n, g, dg = jet.n, jet.gamma, jet.dgamma
    out = _zeros(n, n, n, n)
    for l, m, i, k in itertools.product(range(n), repeat=4):
        v = dg[m][l][i][k] - dg[i][l][m][k]
        for t in range(n):
            v = v + g[l][m][t] * g[t][i][k] - g[l][i][t] * g[t][m][k]
        out[l][m][i][k] = v
    return out


def p_tensor(jet):
    """P[l][m][i][k] = P^l_{mik}, the symmetric companion of R."""
    n, g, dg = jet.n, jet.gamma, jet.dgamma
    out = _zeros(n, n, n, n)
    for l, m, i, k in itertools.product(range(n), repeat=4):
        v = dg[m][l][i][k] + dg[i][l][m][k]
        for t in range(n):
            v = v + g[l][m][t] * g[t][i][k] + g[l][i][t] * g[t][m][k]
        out[l][m][i][k] = v
    return out


def _riemann_field(pot):
    """R_{mi} as MatrixPoly fields (1-based keys), i.e. F of the potential."""
    return field_strength(pot)


def covariant_derivative_riemann(jet, full=False):
    """nabla_p R at the point: DR[p][l][m][i][k].

    Internal (default): d_p R + [Gamma_p, R] acting on the frame indices l, k.
    full=True also lets the connection act on the form indices m, i.
    """
    if jet.d2gamma is None:
        raise ValueError("the covariant derivative of R needs the second-order jet")
    n = jet.n
    pot = jet.matrices()
    rf = _riemann_field(pot)
    r0 = riemann(jet)
    g = jet.gamma
    out = _zeros(n, n, n, n, n)
    for p in range(n):
        for m, i in itertools.product(range(n), repeat=2):
            dr = covariant_derivative(pot, p + 1, rf[(m + 1, i + 1)]).at_origin()
            for l, k in itertools.product(range(n), repeat=2):
                v = dr[l, k]
                if full:
                    for t in range(n):
                        v = v - g[t][p][m] * r0[l][t][i][k] - g[t][p][i] * r0[l][m][t][k]
                out[p][l][m][i][k] = v
    return out


def bianchi_defect(jet, full=False):
    """Max-free exact check: the cyclic sum nabla_p R_{mi} + nabla_m R_{ip} + nabla_i R_{pm}."""
    dr = covariant_derivative_riemann(jet, full)
    n = jet.n
    out = {}
    for p, m, i, l, k in itertools.product(range(n), repeat=5):
        v = dr[p][l][m][i][k] + dr[m][l][i][p][k] + dr[i][l][p][m][k]
        if v:
            out[(p + 1, m + 1, i + 1, l + 1, k + 1)] = v
    return out


@dataclass
class Nabla3Report:
    """Blocks of nabla^3 e_k at the jet point.

    curvature_block[(m, i)]: matrix coefficient of d2xi^m dxi^i.
    cubic_block[(n, i, m)]: matrix coefficient of the canonical word dxi^n dxi^i dxi^m.
    agree: the closed formula equals the symbolic expansion.
    """

    curvature_block: dict
    cubic_block: dict
    expansion: FormElement = field(repr=False)
    formula: FormElement = field(repr=False)
    agree: bool = False


# nabla^3 e_k = R_{mi} d2xi^m dxi^i + (c_a nabla_n R_{im} + c_b nabla_m R_{in}) dxi^n dxi^i dxi^m.
# The expansion fixes c_a = (1 - j)/3, c_b = 0 (up to the cyclic word relation);
# the textbook-style pair (1/2 + i sqrt3/2, -1/2 + i sqrt3/2) = (-j^2, j) is kept for comparison.
NABLA3_COEFFS = ((ONE - J) / 3, ZERO)
NABLA3_DISPLAYED_COEFFS = (-J2, J)


def nabla3_expansion(jet):
    """(d + Gamma)^3 applied to the frame, expanded with the exterior calculus."""
    pot = jet.matrices()
    return curvature_by_calculus(pot)


def nabla3_formula(jet, coeffs=None):
    """The closed form R d2xi dxi + (c_a nabla_n R_{im} + c_b nabla_m R_{in}) dxi dxi dxi."""
    ca, cb = coeffs if coeffs is not None else NABLA3_COEFFS
    n = jet.n
    alg = CoordinateAlgebra(n)
    r = riemann(jet)
    dr = covariant_derivative_riemann(jet)
    form = FormElement(n)

    def const(mat):
        return MatrixPoly.constant(alg, mat)

    for m, i in itertools.product(range(n), repeat=2):
        mat = SquareMatrix([[r[l][m][i][k] for k in range(n)] for l in range(n)])
        form = form + FormElement(n, {((2, m + 1), (1, i + 1)): const(mat)})
    for nn, i, m in itertools.product(range(n), repeat=3):
        mat = SquareMatrix([[ca * dr[nn][l][i][m][k] + cb * dr[m][l][i][nn][k] for k in range(n)]
                            for l in range(n)])
        form = form + FormElement(n, {((1, nn + 1), (1, i + 1), (1, m + 1)): const(mat)})
    return form


def _at_origin_form(x):
    return x.map_coefficients(lambda c: MatrixPoly.constant(c.alg, c.at_origin()))


def nabla3(jet, coeffs=None):
    if jet.d2gamma is None:
        raise ValueError("nabla^3 needs the second-order jet")
    expansion = _at_origin_form(nabla3_expansion(jet))
    formula = nabla3_formula(jet, coeffs)
    curv = {w[0][1:] + w[1][1:]: c.at_origin() for w, c in expansion.block((2, 1)).terms.items()}
    cubic = {tuple(s[1] for s in w): c.at_origin() for w, c in expansion.block((1, 1, 1)).terms.items()}
    return Nabla3Report(curv, cubic, expansion, formula, expansion == formula)


# --- non-covariance of P ------------------------------------------------------------

@dataclass
class FrameChangeReport:
    """R and P before and after the frame change e' = e g(xi) at the origin."""

    r_homogeneous: bool
    p_homogeneous: bool
    p_remainder: list = field(repr=False)
    new_jet: ConnectionJet = field(repr=False)


def _series_inverse(g, degree=2):
    """Inverse of g(xi) = g0 + (linear) as a truncated power series."""
    alg = g.alg
    g0 = g.at_origin()
    h = MatrixPoly.constant(alg, g0.inverse())
    lin = g - MatrixPoly.constant(alg, g0)
    out = h
    term = h
    for _ in range(degree):
        term = (MatrixPoly.zeros(alg, g.m) - term * lin * h).truncate(degree)
        out = out + term
    return out.truncate(degree)


def frame_change(jet, g0, g1):
    """Transform the jet by g(xi) = g0 + xi^m g1[m]: Gamma'_i = g^-1 Gamma_i g + g^-1 d_i g."""
    n = jet.n
    pot = jet.matrices()
    alg = pot.alg
    g = MatrixPoly.constant(alg, g0)
    for m in range(n):
        g = g + MatrixPoly.constant(alg, g1[m]) * alg.coordinate(m + 1)
    gi = _series_inverse(g)
    comps = [(gi * pot[i] * g + gi * g.partial(i)).truncate(2) for i in range(1, n + 1)]
    return ConnectionJet.from_potential(GaugePotential(alg, comps))


def p_noncovariance(jet, g0, g1):
    """Compare R' and P' with the homogeneous law X' = g0^-1 X g0 (frame indices l, k)."""
    g0 = g0 if isinstance(g0, SquareMatrix) else SquareMatrix(g0)
    g1 = [x if isinstance(x, SquareMatrix) else SquareMatrix(x) for x in g1]
    new = frame_change(jet, g0, g1)
    h = g0.inverse()
    n = jet.n

    def law(t):
        out = _zeros(n, n, n, n)
        for m, i in itertools.product(range(n), repeat=2):
            mat = h @ SquareMatrix([[t[l][m][i][k] for k in range(n)] for l in range(n)]) @ g0
            for l, k in itertools.product(range(n), repeat=2):
                out[l][m][i][k] = mat[l, k]
        return out

    r_old, r_new = law(riemann(jet)), riemann(new)
    p_old, p_new = law(p_tensor(jet)), p_tensor(new)
    rem = [[[[p_new[l][m][i][k] - p_old[l][m][i][k] for k in range(n)] for i in range(n)]
            for m in range(n)] for l in range(n)]
    return FrameChangeReport(r_old == r_new, p_old == p_new, rem, new)
