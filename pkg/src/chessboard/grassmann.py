"""Z3-graded Grassmann algebras as normal-form rewriting systems.

Generators theta^A (grade 1) obey the ternary rule
theta^A theta^B theta^C = j theta^B theta^C theta^A, binary products are
free, and all words of length >= 4 vanish. Optional conjugate generators
thetabar^A (grade 2) obey the conjugate rule with j^2 and the exchange
rule theta^A thetabar^B = j thetabar^B theta^A.

Canonical words put every theta before every thetabar. In the extended
algebra (the default with conjugates) only the words
1, t, tb, tt, tbtb, ttb, ttt, tbtbtb survive.

The module also contains the one-generator algebra {1, X, X^2} with its
three graded derivations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .linalg import RowEchelon, SquareMatrix, solve
from .scalar import J, J2, ONE, ZERO, ExactScalar, j_power

THETA = "t"
THETABAR = "tb"

# (number of thetas, number of thetabars) of the surviving extended words
_EXTENDED_SHAPES = {(0, 0), (1, 0), (0, 1), (2, 0), (0, 2), (1, 1), (3, 0), (0, 3)}


def _rotate_triple(word, root):
    """Canonical rotation of a three-letter block: (power of root, word) or None."""
    if word[0] == word[1] == word[2]:
        return None
    rots = [word, word[1:] + word[:1], word[2:] + word[:2]]
    s = min(range(3), key=lambda r: rots[r])
    return s, rots[s]


class GrassmannAlgebra:
    """Normal-form algebra on n theta generators (and optionally n thetabars)."""

    def __init__(self, n, with_conjugates=False, extended=None):
        if n < 1:
            raise ValueError("need at least one generator")
        self.n = n
        self.with_conjugates = with_conjugates
        self.extended = with_conjugates if extended is None else extended
        self._basis = None

    def __eq__(self, other):
        return (isinstance(other, GrassmannAlgebra) and self.n == other.n
                and self.with_conjugates == other.with_conjugates
                and self.extended == other.extended)

    def __hash__(self):
        return hash((self.n, self.with_conjugates, self.extended))

    # --- rewriting -------------------------------------------------------------
    def reduce(self, word):
        """Canonical (coefficient, word) for a raw word, or None if it vanishes.

        A word is a tuple of (kind, index) pairs, kind in {"t", "tb"}.
        """
        for kind, idx in word:
            if kind not in (THETA, THETABAR) or not 1 <= idx <= self.n:
                raise ValueError(f"bad generator {(kind, idx)}")
            if kind == THETABAR and not self.with_conjugates:
                raise ValueError("this algebra has no conjugate generators")
        thetas = tuple(i for k, i in word if k == THETA)
        bars = tuple(i for k, i in word if k == THETABAR)
        p, q = len(thetas), len(bars)
        if p > 3 or q > 3:
            return None
        if self.extended and self.with_conjugates and (p, q) not in _EXTENDED_SHAPES:
            return None
        # moving every thetabar to the right of every theta: thetabar theta = j^2 theta thetabar
        swaps = 0
        seen_bars = 0
        for k, _ in word:
            if k == THETABAR:
                seen_bars += 1
            else:
                swaps += seen_bars
        power = 2 * swaps
        if p == 3:
            rot = _rotate_triple(thetas, J)
            if rot is None:
                return None
            power += rot[0]
            thetas = rot[1]
        if q == 3:
            rot = _rotate_triple(bars, J2)
            if rot is None:
                return None
            power += 2 * rot[0]
            bars = rot[1]
        canon = tuple((THETA, i) for i in thetas) + tuple((THETABAR, i) for i in bars)
        return j_power(power), canon

    def basis(self):
        """Canonical monomials excluding the unit, ordered by length then lexicographically."""
        if self._basis is None:
            gens = [(THETA, a) for a in range(1, self.n + 1)]
            if self.with_conjugates:
                gens += [(THETABAR, a) for a in range(1, self.n + 1)]
            words = set()
            for length in range(1, 7):
                for w in itertools.product(gens, repeat=length):
                    r = self.reduce(w)
                    if r is not None:
                        words.add(r[1])
            self._basis = sorted(words, key=lambda w: (len(w), w))
        return list(self._basis)

    def dimension(self):
        return len(self.basis())

    # --- elements ---------------------------------------------------------------
    def element(self, terms):
        """Build an element from {raw word: coefficient}."""
        out = {}
        for w, c in terms.items():
            r = self.reduce(tuple(w))
            if r is None:
                continue
            f, canon = r
            out[canon] = out.get(canon, ZERO) + f * c
        return GrassmannElement(self, out)

    def one(self):
        return GrassmannElement(self, {(): ONE})

    def theta(self, a):
        return GrassmannElement(self, {((THETA, a),): ONE})

    def thetabar(self, a):
        return GrassmannElement(self, {((THETABAR, a),): ONE})


def word_grade(word):
    return sum(1 if k == THETA else 2 for k, _ in word) % 3


def word_to_string(word):
    return ".".join(f"{k}{i}" for k, i in word) or "1"


def word_from_string(s):
    if s == "1":
        return ()
    out = []
    for tok in s.split("."):
        kind = THETABAR if tok.startswith(THETABAR) else THETA
        out.append((kind, int(tok[len(kind):])))
    return tuple(out)


class GrassmannElement:
    """Linear combination of canonical monomials with ExactScalar coefficients."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = {w: ExactScalar(c) if not isinstance(c, ExactScalar) else c
                      for w, c in terms.items() if c}

    def _check(self, other):
        if self.algebra != other.algebra:
            raise ValueError("elements belong to different algebras")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, ZERO) + c
        return GrassmannElement(self.algebra, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return GrassmannElement(self.algebra, {w: v * c for w, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, GrassmannElement):
            return self.scale(other)
        self._check(other)
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                r = self.algebra.reduce(w1 + w2)
                if r is None:
                    continue
                f, canon = r
                out[canon] = out.get(canon, ZERO) + f * c1 * c2
        return GrassmannElement(self.algebra, out)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        return isinstance(other, GrassmannElement) and self.algebra == other.algebra \
            and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{word_to_string(w)}" for w, c in sorted(self.terms.items()))

    def is_zero(self):
        return not self.terms

    @property
    def grade(self):
        """The common grade of all monomials, or None for inhomogeneous elements."""
        grades = {word_grade(w) for w in self.terms}
        return grades.pop() if len(grades) == 1 else (0 if not grades else None)

    def to_json(self):
        return {word_to_string(w): c.to_json() for w, c in sorted(self.terms.items())}


def multiply(x, y):
    return x * y


def dimension(n, with_conjugates=False):
    """Size of the canonical basis without the unit."""
    return GrassmannAlgebra(n, with_conjugates).dimension()


def dimension_formula(n, with_conjugates=False):
    base = n + n * n + (n ** 3 - n) // 3
    if not with_conjugates:
        return base
    return 2 * n + 3 * n * n + 2 * (n ** 3 - n) // 3


# --- the one-generator algebra {1, X, X^2} ---------------------------------------
#
# Elements are coordinate vectors (c0, c1, c2) in the basis 1, X, X^2 and
# linear maps are 3 x 3 matrices acting on column vectors.

ONE_GEN_GRADES = (0, 1, 2)


def _basis_vector(e):
    return [ONE if t == e else ZERO for t in range(3)]


def one_gen_multiply(x, y):
    """Product in {1, X, X^2} with X^3 = 0 (commutative for one generator)."""
    out = [ZERO] * 3
    for a in range(3):
        for b in range(3):
            if a + b < 3 and x[a] and y[b]:
                out[a + b] = out[a + b] + x[a] * y[b]
    return out


def _from_columns(cols):
    return SquareMatrix([[cols[c][r] for c in range(3)] for r in range(3)])


# column k = image of basis element k (1, X, X^2)
PARTIALS = {
    1: _from_columns([[ZERO] * 3, [ONE, ZERO, ZERO], [ZERO, -J2, ZERO]]),
    2: _from_columns([[ZERO] * 3, [ZERO, ZERO, ONE], [ZERO] * 3]),
    3: _from_columns([[ZERO] * 3, [ZERO, ONE, ZERO], [ZERO, ZERO, -J2]]),
}
PARTIAL_GRADES = {1: 1, 2: 2, 3: 0}


def apply(op, x):
    return [sum((op[r, c] * x[c] for c in range(3)), ZERO) for r in range(3)]


def partial(k, x):
    """Apply the derivation d_k to an element (c0, c1, c2) of {1, X, X^2}."""
    if k not in PARTIALS:
        raise ValueError("only d_1, d_2 and d_3 exist on the one-generator algebra")
    if len(x) != 3:
        raise ValueError("elements of the one-generator algebra have 3 coordinates")
    return apply(PARTIALS[k], [ExactScalar(c) if not isinstance(c, ExactScalar) else c for c in x])


def leibniz_holds(op):
    """d(uv) = (du) v + j^{grade u} u (dv) for all basis pairs u, v."""
    for a in range(3):
        for b in range(3):
            u, v = _basis_vector(a), _basis_vector(b)
            lhs = apply(op, one_gen_multiply(u, v))
            t1 = one_gen_multiply(apply(op, u), v)
            t2 = one_gen_multiply(u, apply(op, v))
            w = j_power(ONE_GEN_GRADES[a])
            if lhs != [x + w * y for x, y in zip(t1, t2)]:
                return False
    return True


def solve_derivations():
    """Basis of all linear maps on {1, X, X^2} obeying the graded Leibniz rule."""
    # unknown map M with 9 entries M[r][c]; the constraints are linear in them
    rows = []
    for a in range(3):
        for b in range(3):
            u, v = _basis_vector(a), _basis_vector(b)
            uv = one_gen_multiply(u, v)
            w = j_power(ONE_GEN_GRADES[a])
            for r in range(3):
                row = [ZERO] * 9
                for c in range(3):
                    row[r * 3 + c] = row[r * 3 + c] + uv[c]
                # (M u) v: coordinate r of sum_c M[s][a] e_s * v
                for s in range(3):
                    prod = one_gen_multiply(_basis_vector(s), v)
                    row[s * 3 + a] = row[s * 3 + a] - prod[r]
                    prod2 = one_gen_multiply(u, _basis_vector(s))
                    row[s * 3 + b] = row[s * 3 + b] - w * prod2[r]
                rows.append(row)
    ech = RowEchelon(9)
    for r in rows:
        ech.add(r)
    return [SquareMatrix([v[0:3], v[3:6], v[6:9]]) for v in ech.nullspace()]


@dataclass
class ClosureReport:
    identity_d2: bool  # d1 d2 d2 + d2 d1 d2 + d2 d2 d1 = -j^2 d2
    identity_d1: bool  # d2 d1 d1 + d1 d2 d1 + d1 d1 d2 = -j^2 d1
    binary_span_meets_d1_d2: bool  # some binary product combination lies in span{d1, d2, 1}
    d3_from_binary: tuple  # (a, b) with a d1 d2 + b d2 d1 = d3, or None


def derivation_ternary_closure():
    d1, d2, d3 = PARTIALS[1], PARTIALS[2], PARTIALS[3]
    eye = SquareMatrix.identity(3)
    id_d2 = (d1 @ d2 @ d2 + d2 @ d1 @ d2 + d2 @ d2 @ d1) == d2.scale(-J2)
    id_d1 = (d2 @ d1 @ d1 + d1 @ d2 @ d1 + d1 @ d1 @ d2) == d1.scale(-J2)
    # the span of binary products d_a d_b (a, b in {1, 2}) against span{d1, d2, identity}
    binary = [d1 @ d1, d1 @ d2, d2 @ d1, d2 @ d2]
    targets = [d1, d2, eye]
    ech_b = RowEchelon(9)
    for m in binary:
        ech_b.add(m.flatten())
    ech_t = RowEchelon(9)
    for m in targets:
        ech_t.add(m.flatten())
    ech_all = RowEchelon(9)
    for m in binary + targets:
        ech_all.add(m.flatten())
    meets = ech_b.rank + ech_t.rank > ech_all.rank
    coeffs = solve([(d1 @ d2).flatten(), (d2 @ d1).flatten()], d3.flatten())
    return ClosureReport(id_d2, id_d1, meets, tuple(coeffs) if coeffs is not None else None)
