import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from chessboard import automorphism as aut
from chessboard import cubic
from chessboard.linalg import SquareMatrix
from chessboard.scalar import I, ONE, ZERO

# rational points on a^2 + b^2 = 1
unit_circle = st.fractions(min_value=-5, max_value=5, max_denominator=7).map(
    lambda t: ((1 - t * t) / (1 + t * t), 2 * t / (1 + t * t)))


def test_identity_transform_leaves_rho_unchanged():
    rho = cubic.rho_basis()
    assert aut.transform_rho(SquareMatrix.identity(2), SquareMatrix.identity(2), rho) == rho


def test_reflection_preserves_the_brackets():
    assert aut.preserves_brackets(aut.reflection_lambda())


def test_generic_matrix_breaks_the_brackets():
    lam = SquareMatrix([[1, 2], [3, 5]])
    assert not aut.check_lambda_equations(lam)
    assert not aut.preserves_brackets(lam)


def test_singular_inputs_are_rejected():
    with pytest.raises(ValueError):
        aut.transform_rho(SquareMatrix([[1, 1], [1, 1]]), SquareMatrix.identity(2), cubic.rho_basis())


def test_equation_examples():
    assert aut.check_lambda_equations(aut.identity_lambda())
    assert aut.check_lambda_equations(aut.rotation_form(1, 0))
    assert aut.check_lambda_equations(aut.rotation_form(0, 1))
    # 2 * identity: 2 (4 - 0) = 8 != 2
    assert not aut.check_lambda_equations(SquareMatrix.identity(2).scale(2))
    assert aut.lambda_equations(SquareMatrix.identity(2).scale(2))[0] == 6


def test_components():
    assert aut.component_of(aut.identity_lambda()).tag == aut.DET_PLUS
    minus = aut.component_of(aut.reflection_lambda())
    assert minus.tag == aut.DET_MINUS and minus.diagonal_relation and minus.offdiagonal_relation
    assert aut.component_of(SquareMatrix([[0, 1], [-1, 0]])).tag == aut.DET_PLUS
    with pytest.raises(ValueError):
        aut.component_of(SquareMatrix([[1, 2], [3, 5]]))


@given(unit_circle)
def test_rotations_are_automorphisms(ab):
    lam = aut.rotation_form(*ab)
    assert aut.check_lambda_equations(lam)
    comp = aut.component_of(lam)
    assert comp.tag == aut.DET_PLUS and comp.diagonal_relation and comp.offdiagonal_relation
    assert lam.det() ** 2 == 1
    assert aut.preserves_brackets(lam)


@given(unit_circle, unit_circle)
def test_det_plus_is_a_subgroup(ab, cd):
    x, y = aut.rotation_form(*ab), aut.rotation_form(*cd)
    assert aut.component_of(x @ y).tag == aut.DET_PLUS
    assert aut.component_of(x.inverse()).tag == aut.DET_PLUS


@given(unit_circle)
def test_det_minus_component(ab):
    lam = aut.rotation_form(*ab) @ aut.reflection_lambda()
    comp = aut.component_of(lam)
    assert comp.tag == aut.DET_MINUS and comp.diagonal_relation and comp.offdiagonal_relation
    assert aut.preserves_brackets(lam)


def test_complex_rotation_parameters():
    # a = 5/3, b = 4i/3: a^2 + b^2 = 25/9 - 16/9 = 1
    lam = aut.rotation_form(Fraction(5, 3), I * Fraction(4, 3))
    assert aut.check_lambda_equations(lam)
    assert aut.preserves_brackets(lam)


def test_angle_family_examples():
    assert np.allclose(aut.lambda_from_angles(0, 0), np.eye(2))
    assert np.allclose(aut.lambda_from_angles(0, math.pi / 2), [[0, 1], [-1, 0]])
    lam = aut.lambda_from_angles(1, 0)
    assert np.allclose(lam, [[math.cosh(1), 1j * math.sinh(1)], [-1j * math.sinh(1), math.cosh(1)]])
    assert abs(np.linalg.det(lam) - 1) < 1e-12


@given(st.floats(-2, 2), st.floats(-math.pi, math.pi))
def test_angle_family_solves_the_equations(psi, phi):
    lam = aut.lambda_from_angles(psi, phi)
    assert aut.check_lambda_equations(lam, 1e-9)
    assert abs(np.linalg.det(lam) - 1) < 1e-9


@given(unit_circle)
def test_real_rotations_preserve_the_reality_condition(ab):
    real = aut.real_rho_basis()
    assert all(aut.satisfies_reality(x) for x in real)
    out = aut.transform_rho(aut.rotation_form(*ab), SquareMatrix.identity(2), real)
    assert all(aut.satisfies_reality(x) for x in out)


def test_complex_rotation_breaks_reality():
    lam = aut.rotation_form(Fraction(5, 3), I * Fraction(4, 3))
    out = aut.transform_rho(lam, SquareMatrix.identity(2), aut.real_rho_basis())
    assert not all(aut.satisfies_reality(x) for x in out)


def test_zero_is_not_a_solution():
    assert aut.lambda_equations(SquareMatrix([[ZERO, ZERO], [ZERO, ONE]]))[0] == -ONE
