import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chessboard import grassmann as G
from chessboard.grassmann import THETA, THETABAR, GrassmannAlgebra
from chessboard.scalar import J, J2, ONE, ZERO

T, TB = THETA, THETABAR


def elements(alg, max_terms=4):
    basis = alg.basis()
    return st.lists(st.tuples(st.sampled_from(basis), st.integers(-3, 3)), max_size=max_terms).map(
        lambda terms: alg.element({w: ONE * c for w, c in terms}))


def homogeneous(alg, grade):
    basis = [w for w in alg.basis() if G.word_grade(w) == grade]
    return st.lists(st.tuples(st.sampled_from(basis), st.integers(1, 3)), min_size=1, max_size=3).map(
        lambda terms: alg.element({w: ONE * c for w, c in terms}))


A3 = GrassmannAlgebra(3)
A4 = GrassmannAlgebra(4)
C2 = GrassmannAlgebra(2, with_conjugates=True)


def test_cubes_and_quartics_vanish():
    for a in (1, 2, 3):
        t = A3.theta(a)
        assert (t * t * t).is_zero()
    t = [A4.theta(a) for a in (1, 2, 3, 4)]
    assert (t[0] * t[1] * t[2] * t[3]).is_zero()
    for w in itertools.product(range(1, 5), repeat=4):
        assert A4.reduce(tuple((T, a) for a in w)) is None


def test_theta_thetabar_exchange():
    # theta^A thetabar^B = j thetabar^B theta^A; canonical order keeps theta first
    x = C2.theta(1) * C2.thetabar(2)
    y = C2.thetabar(2) * C2.theta(1)
    assert x == y.scale(J)
    assert C2.reduce(((TB, 2), (T, 1))) == (J2, ((T, 1), (TB, 2)))


def test_triple_rotation():
    # theta2 theta3 theta1 = j theta3 theta1 theta2 = j^2 theta1 theta2 theta3
    assert A3.reduce(((T, 2), (T, 3), (T, 1))) == (J2, ((T, 1), (T, 2), (T, 3)))
    assert A3.reduce(((T, 3), (T, 1), (T, 2))) == (J, ((T, 1), (T, 2), (T, 3)))
    assert A3.reduce(()) == (ONE, ())


def test_extended_algebra_kills_mixed_triples():
    assert C2.reduce(((T, 1), (T, 2), (TB, 1))) is None
    assert C2.reduce(((TB, 1), (T, 1), (T, 2))) is None


def test_dimensions():
    assert G.dimension(2) == 8
    assert G.dimension(3) == 20
    assert G.dimension(1) == 2
    for n in range(1, 5):
        assert G.dimension(n) == n + n * n + (n ** 3 - n) // 3


def test_extended_basis_is_the_listed_products():
    shapes = {}
    for w in C2.basis():
        key = (sum(k == T for k, _ in w), sum(k == TB for k, _ in w))
        shapes.setdefault(key, []).append(w)
    # grade 1: theta, thetabar thetabar; grade 2: thetabar, theta theta;
    # grade 0: theta thetabar, theta^3, thetabar^3
    assert set(shapes) == {(1, 0), (0, 2), (0, 1), (2, 0), (1, 1), (3, 0), (0, 3)}
    assert len(shapes[(1, 1)]) == 4 and len(shapes[(2, 0)]) == 4 and len(shapes[(3, 0)]) == 2
    by_grade = {g: {k for k in shapes if (k[0] + 2 * k[1]) % 3 == g} for g in range(3)}
    assert by_grade == {1: {(1, 0), (0, 2)}, 2: {(0, 1), (2, 0)}, 0: {(1, 1), (3, 0), (0, 3)}}
    assert C2.dimension() == G.dimension_formula(2, True) == 20


@given(elements(A3), elements(A3), elements(A3))
def test_associativity(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(elements(C2), elements(C2), elements(C2))
def test_associativity_with_conjugates(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(st.sampled_from((0, 1, 2)), st.sampled_from((0, 1, 2)), st.data())
def test_grades_add(gx, gy, data):
    x = data.draw(homogeneous(A3, gx))
    y = data.draw(homogeneous(A3, gy))
    p = x * y
    assert p.is_zero() or {G.word_grade(w) for w in p.terms} == {(gx + gy) % 3}


def test_binary_words_are_independent():
    assert A3.reduce(((T, 2), (T, 1))) == (ONE, ((T, 2), (T, 1)))


def test_word_strings():
    w = ((T, 1), (T, 2), (TB, 3))
    assert G.word_to_string(w) == "t1.t2.tb3"
    assert G.word_from_string("t1.t2.tb3") == w
    assert G.word_from_string("1") == ()


# --- one-generator derivations ----------------------------------------------------

X, X2, UNIT = [ZERO, ONE, ZERO], [ZERO, ZERO, ONE], [ONE, ZERO, ZERO]


def test_partial_values():
    assert G.partial(1, X) == UNIT
    assert G.partial(1, X2) == [ZERO, -J2, ZERO]
    assert G.partial(2, X) == X2
    assert G.partial(2, X2) == [ZERO] * 3
    assert G.partial(2, UNIT) == [ZERO] * 3
    assert G.partial(3, X) == X
    assert G.partial(3, X2) == [ZERO, ZERO, -J2]
    with pytest.raises(ValueError):
        G.partial(4, X)


def test_leibniz_by_hand():
    # d1(X X) = (d1 X) X + j X (d1 X) = X + j X = -j^2 X
    lhs = G.partial(1, G.one_gen_multiply(X, X))
    rhs = [a + J * b for a, b in zip(G.one_gen_multiply(G.partial(1, X), X),
                                      G.one_gen_multiply(X, G.partial(1, X)))]
    assert lhs == rhs == [ZERO, -J2, ZERO]


def test_all_three_satisfy_leibniz_and_span_the_solutions():
    for k in (1, 2, 3):
        assert G.leibniz_holds(G.PARTIALS[k])
    sols = G.solve_derivations()
    assert len(sols) == 3
    from chessboard.linalg import rank
    assert rank([m.flatten() for m in sols] + [G.PARTIALS[k].flatten() for k in (1, 2, 3)]) == 3


def test_ternary_closure():
    rep = G.derivation_ternary_closure()
    assert rep.identity_d1 and rep.identity_d2
    d1, d2 = G.PARTIALS[1], G.PARTIALS[2]
    lhs = d1 @ d2 @ d2 + d2 @ d1 @ d2 + d2 @ d2 @ d1
    assert G.apply(lhs, X) == [ZERO, ZERO, -J2]


def test_binary_products_miss_d1_d2_and_identity():
    rep = G.derivation_ternary_closure()
    assert not rep.binary_span_meets_d1_d2


def test_d3_is_a_binary_combination():
    # d3 = -j d1 d2 + d2 d1, so the grade-0 derivation does come from binary products
    rep = G.derivation_ternary_closure()
    assert rep.d3_from_binary == (-J, ONE)
    d1, d2 = G.PARTIALS[1], G.PARTIALS[2]
    assert (d1 @ d2).scale(-J) + d2 @ d1 == G.PARTIALS[3]


def test_d3_grade_zero_action():
    assert G.PARTIAL_GRADES == {1: 1, 2: 2, 3: 0}
    assert G.partial(3, X) == X and G.partial(3, X2) == [ZERO, ZERO, -J2]
