import itertools
import random

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from chessboard import graded as g
from chessboard.graded import ETA, GradedMatrix
from chessboard.linalg import SquareMatrix
from chessboard.scalar import J, J2, ONE, ZERO, j_power, random_qj

from conftest import qj_scalars

UNITS = g.unit_basis()


def graded_matrices(grade=None):
    grades = st.sampled_from((0, 1, 2)) if grade is None else st.just(grade)
    return st.builds(GradedMatrix.from_entries, grades, qj_scalars, qj_scalars, qj_scalars)


nonzero_qj = qj_scalars.filter(bool)
invertible_diag = st.builds(GradedMatrix.from_entries, st.just(0), nonzero_qj, nonzero_qj, nonzero_qj)


def test_block_patterns():
    with pytest.raises(ValueError):
        GradedMatrix(1, SquareMatrix.identity(3))
    a = GradedMatrix.from_entries(1, 1, 2, 3)
    assert a.m[0, 1] == 1 and a.m[1, 2] == 2 and a.m[2, 0] == 3
    b = GradedMatrix.from_entries(2, 1, 2, 3)
    assert b.m[1, 0] == 1 and b.m[2, 1] == 2 and b.m[0, 2] == 3


def test_grades_add_on_the_unit_basis():
    for x, y in itertools.product(UNITS, repeat=2):
        assert (x @ y).grade == (x.grade + y.grade) % 3


def test_grade1_product_pattern_and_cube():
    a = GradedMatrix.from_entries(1, 2, 3, 5)
    assert (a @ a).grade == 2
    assert a @ a @ a == GradedMatrix.identity().scale(30)
    assert GradedMatrix.identity() @ a == a


def test_eta_cube_is_identity():
    assert ETA @ ETA @ ETA == GradedMatrix.identity()


def test_commutator_examples():
    x = GradedMatrix.from_entries(0, 1, 2, 3)
    y = GradedMatrix.from_entries(0, 4, 5, 6)
    assert g.graded_commutator(x, y).is_zero()
    # grade 1 with grade 0: j^0 = 1, so eta commutes with the unit
    assert g.graded_commutator(ETA, GradedMatrix.identity()).is_zero()


@given(graded_matrices(), graded_matrices())
def test_commutator_twisted_antisymmetry(a, b):
    # expanding both sides: [A,B] + j^{ab} [B,A] = (1 - j^{2ab}) AB
    lhs = g.graded_commutator(a, b) + g.graded_commutator(b, a).scale(j_power(a.grade * b.grade))
    assert lhs == (a @ b).scale(ONE - j_power(2 * a.grade * b.grade))
    if a.grade * b.grade % 3 == 0:
        assert lhs.is_zero()


def test_antisymmetry_fails_for_grades_one_and_one():
    a, b = UNITS[1], UNITS[5]  # e12 and e23, both grade 1
    assert a.grade == b.grade == 1
    assert g.graded_commutator(a, b) != g.graded_commutator(b, a).scale(-J)


@given(graded_matrices(), graded_matrices(), graded_matrices())
def test_leibniz_rule(a, b, c):
    lhs = g.derivation(a, b @ c)
    rhs = g.derivation(a, b) @ c + (b @ g.derivation(a, c)).scale(j_power(a.grade * b.grade))
    assert lhs == rhs
    assert g.derivation(a, GradedMatrix.identity() @ b) == g.derivation(a, b)


def test_cubic_nilpotency_exhaustive():
    for a in UNITS:
        if a.grade == 0:
            continue
        for b in UNITS:
            assert g.derivation_power(a, b, 3).is_zero()


@given(graded_matrices(1), graded_matrices())
def test_cubic_nilpotency_random(a, b):
    assert g.derivation_power(a, b, 3).is_zero()


def test_grade0_derivations_are_not_nilpotent():
    a = GradedMatrix.from_entries(0, 1, 2, 3)
    b = UNITS[1]  # e12
    assert not g.derivation_power(a, b, 3).is_zero()


def _np(x):
    return x.m.to_complex()


def test_jacobi_witness_regression():
    (x, y, z), defect = g.find_jacobi_witness()
    assert [u.entries for u in (x, y, z)] == [(ONE, ZERO, ZERO), (ZERO, ONE, ZERO), (ZERO, ZERO, ONE)]
    assert defect == GradedMatrix.identity().scale(2 + J)
    # numeric oracle with the commutator written out
    jc = np.exp(2j * np.pi / 3)

    def comm(p, q, gp, gq):
        return p @ q - jc ** (gp * gq) * q @ p
    X, Y, Z = _np(x), _np(y), _np(z)
    total = (comm(comm(X, Y, 1, 1), Z, 2, 1) + comm(comm(Y, Z, 1, 1), X, 2, 1)
             + comm(comm(Z, X, 1, 1), Y, 2, 1))
    assert np.allclose(total, (2 + jc) * np.eye(3))


@given(graded_matrices(0), graded_matrices(0), graded_matrices(0))
def test_grade0_jacobi_holds(x, y, z):
    assert g.jacobi_defect(x, y, z).is_zero()


@given(graded_matrices(1), graded_matrices(1), graded_matrices(1), qj_scalars)
def test_jacobi_defect_is_linear(x, y, z, c):
    assert g.jacobi_defect(x.scale(c), y, z) == g.jacobi_defect(x, y, z).scale(c)
    assert g.jacobi_defect(x + x, y, z) == g.jacobi_defect(x, y, z).scale(2)


def test_d_cubed_vanishes_and_complex_inclusions():
    for b in UNITS:
        assert g.d_power(b, 3).is_zero()
        assert g.matrix_d(b).grade == (b.grade + 1) % 3
    assert g.matrix_d(GradedMatrix.identity()).is_zero()
    rep = g.d_complex_report()
    assert rep.d3_zero and rep.im_d_in_ker_d2 and rep.im_d2_in_ker_d
    assert (rep.rank_d, rep.rank_d2) == (6, 3)


@given(graded_matrices(), graded_matrices())
def test_d_leibniz(b, c):
    lhs = g.matrix_d(b @ c)
    rhs = g.matrix_d(b) @ c + (b @ g.matrix_d(c)).scale(j_power(b.grade))
    assert lhs == rhs


def test_curvature_examples():
    assert g.curvature_omega(GradedMatrix.zero(1)).is_zero()
    a = GradedMatrix.from_entries(1, J - 1, J - 1, J - 1)
    assert g.curvature_omega(a).is_zero()
    assert g.curvature_omega(a).grade == 0
    with pytest.raises(ValueError):
        g.curvature_omega(GradedMatrix.identity())


@given(invertible_diag)
def test_pure_gauge_is_flat(u):
    assert g.curvature_omega(g.pure_gauge(u)).is_zero()


def test_pure_gauge_is_flat_fifty_samples():
    rng = random.Random(50)
    for _ in range(50):
        entries = [random_qj(rng) or ONE for _ in range(3)]
        u = GradedMatrix.from_entries(0, *entries)
        assert g.curvature_omega(g.pure_gauge(u)).is_zero()


def test_flat_condition_examples():
    assert g.flat_condition(0, 0, 0)
    assert g.flat_condition(J - 1, J - 1, J - 1)
    assert not g.flat_condition(1, 1, 1)


@given(qj_scalars, qj_scalars, qj_scalars)
def test_flat_condition_forms_agree(a, b, c):
    expanded = (a + b + c) + a * b + b * c + c * a + a * b * c == 0
    assert g.flat_condition(a, b, c) == expanded


def test_enumerated_flat_solutions():
    sols = g.enumerate_symmetric_flat()
    assert len(sols) == 9 and len(set(sols)) == 9
    assert (J - 1, J - 1, J - 1) in sols
    for s in sols:
        assert (s[0] + 1) * (s[1] + 1) * (s[2] + 1) == ONE
        assert g.curvature_omega(GradedMatrix.from_entries(1, *s)).is_zero()


@given(qj_scalars, qj_scalars, qj_scalars)
def test_curvature_vanishes_exactly_on_the_flat_cubic(a, b, c):
    omega = g.curvature_omega(GradedMatrix.from_entries(1, a, b, c))
    assert omega.is_zero() == g.flat_condition(a, b, c)


def test_gauge_transform_identity():
    a = GradedMatrix.from_entries(1, 1, 2, 3)
    assert g.gauge_transform(a, GradedMatrix.identity()) == a


@given(graded_matrices(1), invertible_diag)
def test_curvature_covariance_for_grade0(a, u):
    omega2 = g.curvature_omega(g.gauge_transform(a, u))
    assert omega2 == u.inverse() @ g.curvature_omega(a) @ u


@given(graded_matrices(1), graded_matrices())
def test_conjugated_operator_for_grade1(a, phi):
    u = GradedMatrix.from_entries(1, 1, 2, 3)
    assert g.conjugated_operator_check(a, u, phi)


def test_literal_conjugation_identity_fails():
    # U^-1 (d + A) U = d + j^u A does not hold as written for grade-1 U
    a = GradedMatrix.from_entries(1, 1, 2, 3)
    u = GradedMatrix.from_entries(1, 1, 2, 3)
    phi = GradedMatrix.from_entries(0, 1, 0, 0)
    assert not g.literal_conjugation_identity(a, u, phi)


def test_json_round_trip():
    a = GradedMatrix.from_entries(2, J, J2, 5)
    assert GradedMatrix.from_json(a.to_json()) == a
    assert set(a.to_json()) == {"grade", "alpha", "beta", "gamma"}
