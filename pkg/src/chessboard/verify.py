"""Verification suites driving the invariants of every module.

Each suite is a function ``(rng) -> list[Check]``. A failing check carries
a JSON-serializable counterexample payload. All randomness comes from the
``random.Random`` passed in, so a report is reproducible from its seed.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import automorphism as aut
from . import cubic, dirac, enveloping, exterior, geometry, graded, grassmann
from .linalg import SquareMatrix
from .scalar import J, J2, ONE, SQRT2, SQRT3, ZERO, ExactScalar, random_qj, random_scalar

DEFAULT_SEED = 20240


@dataclass
class Check:
    name: str
    passed: bool
    payload: object = None  # counterexample on failure, summary value otherwise

    def to_json(self):
        out = {"name": self.name, "passed": bool(self.passed)}
        if self.payload is not None:
            key = "counterexample" if not self.passed else "value"
            out[key] = self.payload
        return out


@dataclass
class SuiteResult:
    suite: str
    checks: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def to_json(self):
        return {"suite": self.suite, "passed": self.passed, "seconds": round(self.seconds, 3),
                "checks": [c.to_json() for c in self.checks]}


def _s(x):
    return str(x)


def _first_failure(samples, predicate, describe=_s):
    """None if predicate holds on all samples, else describe(first failing sample)."""
    for s in samples:
        if not predicate(s):
            return describe(s)
    return None


def _all(name, samples, predicate, describe=_s):
    bad = _first_failure(samples, predicate, describe)
    return Check(name, bad is None, bad)


def _eq(name, got, want):
    ok = got == want
    return Check(name, ok, None if ok else {"got": _s(got), "want": _s(want)})


# --- cubic matrices ----------------------------------------------------------------

def _random_cubic(rng, n=2, density=0.6):
    return cubic.CubicMatrix(n, {idx: random_qj(rng) for idx in itertools.product(range(1, n + 1), repeat=3)
                                 if rng.random() < density})


def suite_cubic(rng):
    checks = [
        _eq("1 + j + j^2 = 0", ONE + J + J2, ZERO),
        _eq("j^3 = 1", J ** 3, ONE),
        _eq("conjugate(j) = j^2", J.conjugate(), J2),
        _eq("sqrt2^2 = 2", SQRT2 * SQRT2, ExactScalar(2)),
        _eq("sqrt3^2 = 3", SQRT3 * SQRT3, ExactScalar(3)),
    ]
    triples = [tuple(random_scalar(rng) for _ in range(3)) for _ in range(200)]

    def axioms(t):
        a, b, c = t
        ok = (a * b) * c == a * (b * c) and a * (b + c) == a * b + a * c
        ok &= (a * b).conjugate() == a.conjugate() * b.conjugate()
        if a:
            ok &= a * (ONE / a) == ONE
        return ok
    checks.append(_all("field axioms and conjugation homomorphism", triples, axioms))

    cubes = [tuple(_random_cubic(rng) for _ in range(3)) for _ in range(20)]

    def covariance(t):
        a, b, c = t
        s0, s1, s2 = cubic.star(a, b, c), cubic.star(b, c, a), cubic.star(c, a, b)
        return all(s0[(i, k, l)] == s1[(k, l, i)] == s2[(l, i, k)] for (i, k, l) in s0.indices())
    checks.append(_all("star cyclic covariance", cubes, covariance))
    checks.append(_all("oslash(a,b,c) = star(Ja, b, J^2 c)", cubes, lambda t: cubic.oslash(*t) == cubic.star(
        cubic.cyclic_J(t[0]), t[1], cubic.cyclic_J(cubic.cyclic_J(t[2])))))
    checks.append(_all("n-fold product at n=3 is oslash", cubes[:3], lambda t: cubic.from_object_array(
        cubic.n_fold_product([cubic.to_object_array(x) for x in t])) == cubic.oslash(*t)))
    checks.append(_all("J^3 = id and T^2 = id", [t[0] for t in cubes], lambda a: cubic.cyclic_J(
        cubic.cyclic_J(cubic.cyclic_J(a))) == a and cubic.transpose_T(cubic.transpose_T(a)) == a))
    checks.append(_all("j_bracket(a,a,a) = 0", [t[0] for t in cubes], lambda a: cubic.j_bracket(a, a, a).is_zero()))

    def projectors(a):
        diag, sym, js, j2s = cubic.decompose(a)
        return (diag + sym + js + j2s == a and cubic.cyclic_J(sym) == sym
                and cubic.cyclic_J(js) == js.scale(J) and cubic.cyclic_J(j2s) == j2s.scale(J2)
                and cubic.decompose(js)[2] == js and cubic.decompose(sym)[2].is_zero())
    checks.append(_all("decomposition projectors", [t[0] for t in cubes], projectors))

    for law in cubic.LAWS:
        w = cubic.non_associativity_witness(2, law)
        checks.append(Check(f"non-associativity witness ({law})", w is not None,
                            None if w is None else [list(t) for t in w[0]]))

    r1, r2 = cubic.rho_basis()
    checks.append(Check("rho basis is j-skew", all(cubic.classify(r).label == "j_skew" for r in (r1, r2))))
    c = cubic.bracket_constant(cubic.j_bracket(r1, r2, r1), r2)
    checks.append(_eq("{rho1, rho2, rho1} = 2 j^2 rho2 (leading normalization)", c, J2 * 2))
    u1, u2 = cubic.rho_basis(normalization="unit")
    checks.append(_eq("{rho1, rho2, rho1} = -rho2 (unit normalization)",
                      cubic.bracket_constant(cubic.j_bracket(u1, u2, u1), u2), -ONE))

    def pattern(basis):
        rep = cubic.check_subalgebra(basis, "j_bracket")
        if not rep.closed:
            return None
        return {k: tuple(bool(x) for x in v) for k, v in rep.products.items()}
    rho_pattern = pattern([r1, r2])
    fam = cubic.named_bases(3)["R"]
    checks.append(_all("R-family pairs close like the rho algebra", ("1", "2", "3"),
                       lambda a: pattern([fam[a + "+"], fam[a + "-"]]) == rho_pattern))
    units = [cubic.basis_unit(*idx, 2) for idx in ((1, 1, 2), (1, 2, 1), (1, 2, 2))]
    checks.append(Check("{e112, e121, e122} has zero oslash products",
                        cubic.check_subalgebra(units, "oslash").all_zero))
    table = cubic.mult_table(2, "star")
    checks.append(_eq("n=2 table rows", len(table), 512))
    checks.append(Check("table rows are products of units (at most one nonzero entry)",
                        all(len(list(r[3].nonzero())) <= 1 for r in table.rows)))
    return checks


# --- enveloping algebra ---------------------------------------------------------------

def suite_envelope(rng):
    rep = enveloping.verify_pauli_representation()
    checks = [Check("Pauli representation of the rho algebra", rep.ok,
                    None if rep.ok else {"constants": [_s(x) for x in rep.normalized_constants]})]
    eye = SquareMatrix.identity(2)
    mats = [tuple(enveloping.random_rational_matrix(rng, 2) for _ in range(3)) for _ in range(100)]
    desc = lambda t: [[[_s(x) for x in row] for row in m.rows] for m in t]  # noqa: E731
    checks.append(_all("[A, 1, C] = AC - CA", mats, lambda t: enveloping.j_commutator(
        t[0], eye, t[2]) == t[0] @ t[2] - t[2] @ t[0], desc))
    checks.append(_all("trace of the j-commutator vanishes", mats,
                       lambda t: enveloping.j_commutator(*t).trace() == 0, desc))
    checks.append(_all("j-commutator cyclic covariance", mats, lambda t: enveloping.j_commutator(
        *t) == enveloping.j_commutator(t[1], t[2], t[0]).scale(J), desc))
    words, sizes = enveloping.enumerate_double_brackets()
    checks.append(_eq("double bracket classes", len(words), 40))
    checks.append(Check("every class has 9 members", set(sizes) == {9}))
    cert = enveloping.double_bracket_identity_search(2, seed=rng.randrange(1 << 30))
    checks.append(Check("no identity among the 40 double brackets (2x2)",
                        cert.nullity == 0 and cert.recheck_rank == cert.rank,
                        {"rank": cert.rank, "nullity": cert.nullity}))
    jac = enveloping.double_bracket_identity_search(2, arity=2, seed=rng.randrange(1 << 30))
    checks.append(Check("classical commutators recover Jacobi", jac.nullity >= 1,
                        {"nullity": jac.nullity}))
    return checks


# --- automorphisms --------------------------------------------------------------------

def suite_automorphism(rng):
    eye, refl = aut.identity_lambda(), aut.reflection_lambda()
    rot = aut.rotation_form(Fraction(3, 5), Fraction(4, 5))
    quarter = aut.rotation_form(0, 1)
    checks = [
        Check("identity, reflection and rotations solve the equations",
              all(aut.check_lambda_equations(x) for x in (eye, refl, rot, quarter))),
        Check("2 * identity is not a solution", not aut.check_lambda_equations(eye.scale(2))),
        _eq("component of diag(1, -1)", aut.component_of(refl).tag, aut.DET_MINUS),
        _eq("component of the quarter turn", aut.component_of(quarter).tag, aut.DET_PLUS),
    ]
    sols = [eye, refl, rot, quarter, rot @ refl, refl @ quarter]
    checks.append(_all("[det L]^2 = 1", sols, lambda x: x.det() ** 2 == 1))
    plus = [eye, rot, quarter, rot @ quarter]
    checks.append(_all("det_plus component closed under products and inverses",
                       list(itertools.product(plus, repeat=2)),
                       lambda t: aut.component_of(t[0] @ t[1].inverse()).tag == aut.DET_PLUS))
    checks.append(_all("solutions preserve the bracket constants", sols, aut.preserves_brackets))
    checks.append(Check("a non-solution breaks the brackets",
                        not aut.preserves_brackets(SquareMatrix([[2, 0], [0, 1]]))))
    angles = [(rng.uniform(-2, 2), rng.uniform(-math.pi, math.pi)) for _ in range(10)]
    checks.append(_all("boost x rotation family solves the equations to 1e-9", angles,
                       lambda a: aut.check_lambda_equations(aut.lambda_from_angles(*a), 1e-9)))
    real = aut.real_rho_basis()
    checks.append(Check("real rho basis satisfies the reality condition", all(map(aut.satisfies_reality, real))))
    checks.append(Check("real rotations preserve the reality condition",
                        all(aut.satisfies_reality(x) for x in aut.transform_rho(rot, SquareMatrix.identity(2), real))))
    return checks


# --- graded matrices -----------------------------------------------------------------

def _random_graded(rng, grade=None):
    g = rng.randrange(3) if grade is None else grade
    return graded.GradedMatrix.from_entries(g, *(random_qj(rng) for _ in range(3)))


def suite_graded(rng):
    units = graded.unit_basis()
    checks = [_all("grades add under products", list(itertools.product(units, repeat=2)),
                   lambda t: (t[0] @ t[1]).grade == (t[0].grade + t[1].grade) % 3)]
    triples = [tuple(_random_graded(rng) for _ in range(3)) for _ in range(200)]

    def leibniz(t):
        a, b, c = t
        lhs = graded.derivation(a, b @ c)
        rhs = graded.derivation(a, b) @ c + (b @ graded.derivation(a, c)).scale(J ** (a.grade * b.grade))
        return lhs == rhs
    checks.append(_all("graded Leibniz rule for Der_A", triples, leibniz, lambda t: [x.to_json() for x in t]))
    pairs = [(a, b) for a in units if a.grade for b in units]
    checks.append(_all("(Der_A)^3 = 0 for grade 1 and 2 units", pairs,
                       lambda t: graded.derivation_power(t[0], t[1], 3).is_zero(),
                       lambda t: [x.to_json() for x in t]))
    diag = graded.GradedMatrix.from_entries(0, 1, 2, 3)
    checks.append(Check("grade-0 derivations are not cubic nilpotent",
                        any(not graded.derivation_power(diag, b, 3).is_zero() for b in units)))
    wit = graded.find_jacobi_witness()
    checks.append(Check("Jacobi defect witness (grades 1,1,1)", wit is not None,
                        None if wit is None else wit[1].to_json()))
    rep = graded.d_complex_report()
    checks.append(Check("d^3 = 0 on the basis", rep.d3_zero))
    checks.append(Check("Im d in Ker d^2 and Im d^2 in Ker d", rep.im_d_in_ker_d2 and rep.im_d2_in_ker_d))

    def nonzero_diag():
        return graded.GradedMatrix.from_entries(0, *(random_scalar(rng) or ONE for _ in range(3)))
    us = [nonzero_diag() for _ in range(50)]
    us = [u for u in us if all(u.entries)]
    checks.append(_all("pure gauge U^-1 dU is flat", us,
                       lambda u: graded.curvature_omega(graded.pure_gauge(u)).is_zero(), lambda u: u.to_json()))
    flats = graded.enumerate_symmetric_flat()
    checks.append(_all("enumerated flat triples satisfy (a+1)(b+1)(c+1) = 1", flats,
                       lambda t: graded.flat_condition(*t)))
    checks.append(_all("curvature vanishes on flat triples", flats, lambda t: graded.curvature_omega(
        graded.GradedMatrix.from_entries(1, *t)).is_zero()))
    samples = [tuple(random_qj(rng) for _ in range(3)) for _ in range(200)]

    def forms_agree(t):
        a, b, c = t
        expanded = a + b + c + a * b + b * c + c * a + a * b * c == 0
        try:
            return graded.flat_condition(a, b, c) == expanded
        except AssertionError:
            return False
    checks.append(_all("both forms of the flatness condition agree", samples, forms_agree))
    conn = [(_random_graded(rng, 1), nonzero_diag()) for _ in range(20)]
    conn = [(a, u) for a, u in conn if all(u.entries)]
    checks.append(_all("grade-0 gauge covariance of Omega", conn, lambda t: graded.curvature_omega(
        graded.gauge_transform(*t)) == t[1].inverse() @ graded.curvature_omega(t[0]) @ t[1],
        lambda t: [x.to_json() for x in t]))
    u1 = graded.GradedMatrix.from_entries(1, 1, 2, 3)
    phis = [_random_graded(rng) for _ in range(10)]
    checks.append(_all("U^-1 (d + A) U = j^u (d + j^-u A') for grade-1 U", phis,
                       lambda p: graded.conjugated_operator_check(_random_graded(rng, 1), u1, p)))
    return checks


# --- Grassmann algebras ---------------------------------------------------------------

def _random_grassmann(rng, alg, n_terms=4):
    words = alg.basis()
    return alg.element({rng.choice(words): random_qj(rng) for _ in range(n_terms)})


def suite_grassmann(rng):
    checks = [
        _eq("dimension n=2", grassmann.dimension(2), 8),
        _eq("dimension n=3", grassmann.dimension(3), 20),
        _eq("dimension n=1", grassmann.dimension(1), 2),
        _all("dimension matches N + N^2 + (N^3 - N)/3", range(1, 5),
             lambda n: grassmann.dimension(n) == grassmann.dimension_formula(n)),
    ]
    alg = grassmann.GrassmannAlgebra(3)
    t = [alg.theta(a) for a in (1, 2, 3)]
    checks.append(_all("cubes of generators vanish", t, lambda x: (x * x * x).is_zero()))
    big = grassmann.GrassmannAlgebra(4)
    checks.append(_all("quartic theta words vanish",
                       list(itertools.product(range(1, 5), repeat=4)),
                       lambda w: big.reduce(tuple((grassmann.THETA, a) for a in w)) is None))
    for a in (alg, grassmann.GrassmannAlgebra(2, with_conjugates=True)):
        trip = [tuple(_random_grassmann(rng, a) for _ in range(3)) for _ in range(30)]
        checks.append(_all(f"associativity ({'with' if a.with_conjugates else 'no'} conjugates)",
                           trip, lambda x: (x[0] * x[1]) * x[2] == x[0] * (x[1] * x[2])))
    conj = grassmann.GrassmannAlgebra(2, with_conjugates=True)
    checks.append(_eq("extended algebra dimension", conj.dimension(), grassmann.dimension_formula(2, True)))
    rep = grassmann.derivation_ternary_closure()
    checks.append(Check("ternary closure of d1, d2", rep.identity_d1 and rep.identity_d2))
    checks.append(_all("graded Leibniz rule for d1, d2, d3", (1, 2, 3),
                       lambda k: grassmann.leibniz_holds(grassmann.PARTIALS[k])))
    checks.append(_eq("number of derivations of {1, X, X^2}", len(grassmann.solve_derivations()), 3))
    return checks


# --- exterior calculus --------------------------------------------------------------------

def suite_forms(rng):
    alg = exterior.CoordinateAlgebra(3)
    polys = [alg.random_poly(rng, degree=4, n_terms=4) for _ in range(25)]
    checks = [_all("d^3 f = 0 (eps = 0)", polys, lambda f: exterior.d_power(
        exterior.FormElement.function(f), 3).is_zero())]
    eps = exterior.CoordinateAlgebra(3, {(1, 2): J, (2, 1): -J, (2, 3): ONE, (3, 2): -ONE})
    qp = [eps.random_poly(rng, degree=2, n_terms=4) for _ in range(10)]
    checks.append(_all("d^3 f = 0 (eps != 0)", qp, lambda f: exterior.d_power(
        exterior.FormElement.function(f), 3).is_zero()))
    oneforms = [[alg.random_poly(rng, degree=3, n_terms=3) for _ in range(3)] for _ in range(8)]
    checks.append(_all("d^3 = 0 on 1-forms", oneforms, lambda c: exterior.d_power(
        exterior.FormElement(3, {((1, k + 1),): v for k, v in enumerate(c)}), 3).is_zero()))

    def d2_structure(c):
        x = exterior.d2_oneform(c)
        for i, k in itertools.product(range(1, 4), repeat=2):
            want = c[k - 1].partial(i) - c[i - 1].partial(k)
            if i == k:
                want = alg.zero()
            got = x.coefficient(((2, i), (1, k)), alg.zero())
            if got != want:
                return False
        return x.degrees <= {2, 3}
    checks.append(_all("d^2 of a 1-form carries the antisymmetrized derivative", oneforms, d2_structure))
    words = [w for w in exterior.all_words(3) if w]
    one = alg.constant(1)
    checks.append(_all("grade and degree bookkeeping of d", words, lambda w: (
        lambda x: x.is_zero() or (x.grades == {(exterior.word_grade(w) + 1) % 3}))(
        exterior.d(exterior.FormElement(3, {w: alg.coordinate(1) * one})))))
    trip = list(itertools.product(range(1, 4), repeat=3))
    checks.append(_all("cyclic sum of dxi dxi dxi vanishes", trip,
                       lambda t: exterior.cyclic_condition(*t, 3).is_zero()))
    checks.append(_all("d2xi^k dxi^i = j^2 dxi^i d2xi^k", list(itertools.product(range(1, 4), repeat=2)),
                       lambda t: exterior.exchange_condition(*t, 3).is_zero()))
    fs = polys[:6]
    checks.append(_all("delta^3 f = 0", fs, lambda f: exterior.delta(exterior.delta(exterior.delta(
        exterior.FormElement.function(f, kind=exterior.DELTA_KIND)))).is_zero()))
    checks.append(_all("transported delta equals the direct delta rules", fs, lambda f: (
        lambda x: exterior.delta(exterior.delta(x)) == exterior.delta_direct(exterior.delta_direct(x)))(
        exterior.FormElement.function(f, kind=exterior.DELTA_KIND))))
    top = [(exterior.df(polys[i]), exterior.d(exterior.df(polys[i + 1]))) for i in range(4)]
    checks.append(_all("products of maximal degree are d-closed", top,
                       lambda t: exterior.d(exterior.product(t[0], t[1])).is_zero()
                       and exterior.d(exterior.product(t[1], t[0])).is_zero()))
    return checks


# --- coordinate geometry ---------------------------------------------------------------

def suite_geometry(rng):
    abelian = [geometry.GaugePotential.random(rng, n=2, m=1, degree=3) for _ in range(4)]
    nonab = [geometry.GaugePotential.random(rng, n=3, m=2, degree=1) for _ in range(3)]
    desc = lambda a: a.to_json()  # noqa: E731
    checks = [
        _all("curvature formula equals the calculus (abelian)", abelian,
             lambda a: geometry.curvature_dual_path(a)[2], desc),
        _all("curvature formula equals the calculus (nonabelian)", nonab,
             lambda a: geometry.curvature_dual_path(a)[2], desc),
        _all("field strength antisymmetry", nonab, lambda a: all(
            (lambda f: f[(i, k)] == -f[(k, i)])(geometry.field_strength(a))
            for i, k in itertools.product(range(1, 4), repeat=2)), desc),
        _all("covariant identity (abelian)", abelian, geometry.covariant_identity_check, desc),
        _all("covariant identity where A vanishes", [_shift_to_zero(a) for a in nonab],
             geometry.covariant_identity_at_origin, desc),
    ]
    jets = [geometry.ConnectionJet.random(rng, n=2) for _ in range(3)]
    sym = [geometry.ConnectionJet.random(rng, n=2, symmetric=True) for _ in range(2)]

    def antisym(jet):
        r, p = geometry.riemann(jet), geometry.p_tensor(jet)
        n = jet.n
        return all(r[l][m][i][k] == -r[l][i][m][k] and p[l][m][i][k] == p[l][i][m][k]
                   for l, m, i, k in itertools.product(range(n), repeat=4))
    checks.append(_all("R antisymmetric and P symmetric in (m, i)", jets, antisym, lambda j: j.to_json()))
    checks.append(_all("Bianchi cyclic sum (internal)", jets, lambda j: not geometry.bianchi_defect(j)))
    checks.append(_all("Bianchi cyclic sum (torsion-free, full)", sym,
                       lambda j: not geometry.bianchi_defect(j, full=True)))
    checks.append(_all("nabla^3 closed form at a point where Gamma vanishes", jets,
                       lambda j: geometry.nabla3(geometry.jet_with_vanishing_gamma(j)).agree,
                       lambda j: j.to_json()))
    checks.append(_all("nabla^3 curvature block equals R", jets, _curvature_block_is_r))
    g0 = [[1, 1], [0, 1]]
    g1 = [[[1, 0], [2, 1]], [[0, 1], [1, 0]]]
    rep = geometry.p_noncovariance(jets[0], g0, g1)
    checks.append(Check("R transforms homogeneously under a frame change", rep.r_homogeneous))
    checks.append(Check("P picks up an inhomogeneous remainder", not rep.p_homogeneous))
    return checks


def _shift_to_zero(a):
    """The same potential minus its value at the origin."""
    comps = [c - geometry.MatrixPoly.constant(a.alg, c.at_origin()) for c in a.components]
    return geometry.GaugePotential(a.alg, comps)


def _curvature_block_is_r(jet):
    rep = geometry.nabla3(jet)
    r = geometry.riemann(jet)
    n = jet.n
    for m, i in itertools.product(range(n), repeat=2):
        want = SquareMatrix([[r[l][m][i][k] for k in range(n)] for l in range(n)])
        got = rep.curvature_block.get((m + 1, i + 1), SquareMatrix.zeros(n))
        if got != want:
            return False
    return True


# --- ternary Dirac ---------------------------------------------------------------------

def suite_dirac(rng):
    sym = dirac.symmetrization_check()
    checks = [
        Check("a symmetrization convention makes all 27 triples scalar", sym.ok,
              {"counts": sym.scalar_counts, "winner": sym.winner}),
        Check("(Q^a)^3 = identity", sym.cubes_are_identity),
    ]
    cube = dirac.operator_cube()
    checks.append(Check("operator cube is a scalar matrix", cube.diagonal_scalar and cube.offdiagonal_zero))
    checks.append(_eq("mixed coefficient of the operator cube", cube.mixed_coefficient, ExactScalar(-3)))
    pts = [(tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(3)),
            Fraction(rng.randint(-5, 5), rng.randint(1, 3))) for _ in range(50)]
    checks.append(_all("operator symbol equals the dispersion RHS", pts[:10],
                       lambda t: cube.symbol(*t) == ExactScalar(dirac.dispersion_rhs(*t))))
    checks.append(_all("zeta r^2 identity", pts, lambda t: dirac.cylindrical_identity_check(
        dirac.DispersionPoint(Fraction(rng.randint(-5, 5)), t[0], t[1]))))
    checks.append(_all("dispersion relation is odd", pts, lambda t: dirac.dispersion_residual(
        dirac.DispersionPoint(-ONE_F, tuple(-x for x in t[0]), -t[1])) == -dirac.dispersion_residual(
        dirac.DispersionPoint(ONE_F, t[0], t[1]))))
    checks.append(_eq("k = 0 gives omega = m", dirac.solve_omega((0, 0, 0), Fraction(2))[0], 2))
    sols = []
    for _ in range(5):
        k = tuple(rng.uniform(-1, 1) for _ in range(3))
        m = rng.uniform(0.5, 1.5)
        w = dirac.real_cube_root(dirac.dispersion_rhs(k, m))
        sols.append(dirac.plane_wave(w, k, m, [[rng.uniform(-1, 1) for _ in range(3)] for _ in range(3)]))
    sample = [(0.1, 0.2, -0.1, 0.05)]
    res = max(dirac.residual_pde(s, sample) for s in sols)
    checks.append(Check("plane waves solve the third-order equation (h=1e-2, Richardson)",
                        res <= 1e-6, {"max_residual": res}))
    conj = [dirac.plane_wave(s.omega, s.k, s.m, s.A, dirac.CONJUGATE) for s in sols[:2]]
    res_c = max(dirac.residual_pde(s, sample) for s in conj)
    checks.append(Check("conjugate solutions also solve it", res_c <= 1e-6, {"max_residual": res_c}))
    rep = dirac.boundedness_report()
    checks.append(Check("determinant of the solution matrix is bounded", rep.determinant))
    checks.append(Check("cofactor products are bounded", rep.cofactor_terms))
    checks.append(Check("two copies of a row are unbounded",
                        not dirac.boundedness_check([[(0, 0, dirac.DIRECT), (0, 0, dirac.DIRECT)]])))
    M = 1.3
    shell = [dirac.point_on_shell(tuple(rng.uniform(-1, 1) for _ in range(3)), M) for _ in range(3)]
    ms = dirac.mass_shell_reduce(shell, M)
    checks.append(Check("mass-shell reduction to the quadratic hyperboloid", ms.combined is True))
    return checks


ONE_F = Fraction(1)

SUITES = {
    "cubic": suite_cubic,
    "envelope": suite_envelope,
    "automorphism": suite_automorphism,
    "graded": suite_graded,
    "grassmann": suite_grassmann,
    "forms": suite_forms,
    "geometry": suite_geometry,
    "dirac": suite_dirac,
}


def run_suite(name, seed=DEFAULT_SEED):
    if name not in SUITES:
        raise KeyError(name)
    rng = random.Random(f"{seed}:{name}")
    t0 = time.perf_counter()
    checks = SUITES[name](rng)
    return SuiteResult(name, checks, time.perf_counter() - t0)


def run(suite="all", seed=DEFAULT_SEED):
    names = list(SUITES) if suite == "all" else [suite]
    results = [run_suite(n, seed) for n in names]
    return {"seed": seed, "suite": suite, "passed": all(r.passed for r in results),
            "suites": [r.to_json() for r in results]}
