"""Automorphisms of the two-dimensional rho ternary algebra.

A transformation rho~^a_{ikm} = L^a_b U^p_i U^r_k U^s_m rho^b_{prs}
is an automorphism when the j-bracket structure constants of the new
basis equal those of the old one. For U = 1 this reduces to four cubic
polynomial equations in the entries of L, whose solutions form two
components distinguished by det L = +1 or -1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .cubic import CubicMatrix, expand_in, j_bracket, rho_basis
from .linalg import SquareMatrix, as_scalar, rank
from .scalar import J, ONE, ZERO, ZETA

DET_PLUS = "det_plus"
DET_MINUS = "det_minus"


def _entries(lam):
    """(L11, L12, L21, L22) from a SquareMatrix or a 2x2 array."""
    if isinstance(lam, SquareMatrix):
        return lam[0, 0], lam[0, 1], lam[1, 0], lam[1, 1]
    a = np.asarray(lam)
    return a[0, 0], a[0, 1], a[1, 0], a[1, 1]


def lambda_equations(lam):
    """Residuals (lhs - rhs) of the four defining equations, in a fixed order."""
    l11, l12, l21, l22 = _entries(lam)
    return (
        l11 * (l22 * l11 - l12 * l21) - l22,
        l12 * (l21 * l12 - l11 * l22) - l21,
        l22 * (l11 * l22 - l21 * l12) - l11,
        l21 * (l12 * l21 - l22 * l11) - l12,
    )


def check_lambda_equations(lam, tol=None):
    """True iff all four equations hold (exactly, or within ``tol`` for numeric input)."""
    res = lambda_equations(lam)
    if tol is None and isinstance(lam, SquareMatrix):
        return all(r == 0 for r in res)
    return max(abs(complex(r)) for r in res) <= (1e-9 if tol is None else tol)


@dataclass(frozen=True)
class AutomorphismComponent:
    tag: str
    det: object
    diagonal_relation: bool  # L11 = L22 (plus) or L11 = -L22 (minus)
    offdiagonal_relation: bool  # L12 = -L21 (plus) or L12 = L21 (minus)


def component_of(lam):
    """Which of the two components an exact solution belongs to."""
    if not check_lambda_equations(lam):
        raise ValueError("not a solution of the automorphism equations")
    l11, l12, l21, l22 = _entries(lam)
    det = l11 * l22 - l12 * l21
    if det == 1:
        return AutomorphismComponent(DET_PLUS, det, l11 == l22, l12 == -l21)
    if det == -1:
        return AutomorphismComponent(DET_MINUS, det, l11 == -l22, l12 == l21)
    raise ValueError(f"solution with det {det} outside both components")


def rotation_form(a, b):
    """[[a, b], [-b, a]]; an automorphism iff a^2 + b^2 = 1."""
    a, b = as_scalar(a), as_scalar(b)
    return SquareMatrix([[a, b], [-b, a]])


def lambda_from_angles(psi, phi):
    """Numeric boost(psi) times rotation(phi)."""
    boost = np.array([[np.cosh(psi), 1j * np.sinh(psi)], [-1j * np.sinh(psi), np.cosh(psi)]])
    rot = np.array([[np.cos(phi), np.sin(phi)], [-np.sin(phi), np.cos(phi)]])
    return boost @ rot


def transform_rho(lam, u, rho):
    """rho~^a_{ikm} = L^a_b U^p_i U^r_k U^s_m rho^b_{prs} (exact)."""
    lam = lam if isinstance(lam, SquareMatrix) else SquareMatrix(lam)
    u = u if isinstance(u, SquareMatrix) else SquareMatrix(u)
    if lam.det() == 0 or u.det() == 0:
        raise ValueError("L and U must be invertible")
    n = rho[0].n
    mixed = []
    for b in rho:
        out = {}
        for (i, k, m) in b.indices():
            acc = ZERO
            for (p, r, s), v in b.nonzero():
                w = u[p - 1, i - 1] * u[r - 1, k - 1] * u[s - 1, m - 1]
                if w:
                    acc = acc + w * v
            out[(i, k, m)] = acc
        mixed.append(CubicMatrix(n, out))
    result = []
    for a in range(len(rho)):
        acc = CubicMatrix(n)
        for b in range(len(rho)):
            if lam[a, b]:
                acc = acc + mixed[b].scale(lam[a, b])
        result.append(acc)
    return result


def structure_constants(basis):
    """{(a, b, c): coefficients of {basis_a, basis_b, basis_c} in the basis}."""
    out = {}
    for trip in itertools.product(range(len(basis)), repeat=3):
        coeffs = expand_in(basis, j_bracket(*(basis[t] for t in trip)))
        if coeffs is None:
            raise ValueError(f"bracket of {trip} leaves the span")
        out[trip] = tuple(coeffs)
    return out


def preserves_brackets(lam, u=None, basis=None):
    """True iff the transformed basis has the same j-bracket constants."""
    basis = rho_basis(normalization="unit") if basis is None else basis
    u = SquareMatrix.identity(2) if u is None else u
    new = transform_rho(lam, u, basis)
    if rank([list(x.entries) for x in new]) < len(new):
        return False
    try:
        return structure_constants(new) == structure_constants(basis)
    except ValueError:
        return False


def satisfies_reality(x):
    """rho_{ikl} == conjugate(rho_{lki}) for every index triple."""
    return all(x[(i, k, l)] == x[(l, k, i)].conjugate() for (i, k, l) in x.indices())


def real_rho_basis():
    """A rescaling of the rho basis whose members satisfy the reality condition."""
    r1, r2 = rho_basis()
    return [r1.scale(ZETA ** 4), r2.scale(J)]


def identity_lambda():
    return SquareMatrix.identity(2)


def reflection_lambda():
    return SquareMatrix([[ONE, ZERO], [ZERO, -ONE]])
