"""Z3-graded exterior differential calculus on N coordinates.

Functions are polynomials in coordinates xi^1..xi^N obeying
xi^i xi^k = xi^k xi^i + eps^{ik} (eps = 0 by default). Forms are left
combinations of words in the grade-1 symbols dxi^i and the grade-2 symbols
d2xi^i, reduced by

    dxi^i dxi^k dxi^m = j dxi^k dxi^m dxi^i,   dxi^i d2xi^k = j d2xi^k dxi^i,

and by discarding every word that carries four or more d's. The
differential obeys d(w phi) = (dw) phi + j^{grade w} w dphi, d(dxi) = d2xi
and d(d2xi) = 0, which gives d^3 = 0 identically.

The conjugate differential delta (grade 2, j -> j^2) is obtained by
transporting d along the conjugation and also by an independent
rewriting system; the two must agree.

Words are tuples of (order, index) pairs with order 1 for dxi and 2 for
d2xi, indices 1-based. Text form: "d1 d2 D3" (D is d2xi); conjugate words
use "b" and "B".
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

from .scalar import J, J2, ONE, ZERO, ExactScalar, j_power, random_qj

D_KIND = "d"
DELTA_KIND = "delta"
_LETTERS = {D_KIND: ("d", "D"), DELTA_KIND: ("b", "B")}
_ROOT = {D_KIND: J, DELTA_KIND: J2}


def _as_scalar(x):
    return x if isinstance(x, ExactScalar) else ExactScalar(x)


# --- coefficient algebra --------------------------------------------------------

class CoordinateAlgebra:
    """Coordinates xi^1..xi^n with antisymmetric constants eps^{ik}."""

    def __init__(self, n, epsilon=None):
        if n < 1:
            raise ValueError("need at least one coordinate")
        self.n = n
        eps = {}
        if epsilon is not None:
            items = epsilon.items() if isinstance(epsilon, dict) else (
                ((i + 1, k + 1), v) for i, row in enumerate(epsilon) for k, v in enumerate(row))
            for (i, k), v in items:
                v = _as_scalar(v)
                if v:
                    eps[(i, k)] = v
        for (i, k), v in eps.items():
            if i == k or eps.get((k, i), ZERO) != -v:
                raise ValueError("epsilon must be antisymmetric")
        self._eps = eps
        self._order_cache = {}

    def eps(self, i, k):
        return self._eps.get((i, k), ZERO)

    @property
    def commutative(self):
        return not self._eps

    def __eq__(self, other):
        return isinstance(other, CoordinateAlgebra) and self.n == other.n and self._eps == other._eps

    def __hash__(self):
        return hash((self.n, tuple(sorted(self._eps.items(), key=lambda t: t[0]))))

    def conjugate(self):
        return CoordinateAlgebra(self.n, {ik: v.conjugate() for ik, v in self._eps.items()})

    def normal_order(self, word):
        """Reorder a word of coordinate indices to ascending order (a PolyFunction)."""
        return PolyFunction(self, self._normal_terms(tuple(word)))

    def _normal_terms(self, word):
        if word in self._order_cache:
            return self._order_cache[word]
        p = next((p for p in range(len(word) - 1) if word[p] > word[p + 1]), None)
        if p is None:
            out = {word: ONE}
        elif self.commutative:
            out = {tuple(sorted(word)): ONE}
        else:
            a, b = word[p], word[p + 1]
            out = dict(self._normal_terms(word[:p] + (b, a) + word[p + 2:]))
            e = self.eps(a, b)
            if e:
                for mono, c in self._normal_terms(word[:p] + word[p + 2:]).items():
                    v = out.get(mono, ZERO) + e * c
                    if v:
                        out[mono] = v
                    else:
                        out.pop(mono, None)
        self._order_cache[word] = out
        return out

    # --- constructors ----------------------------------------------------------
    def constant(self, c):
        return PolyFunction(self, {(): _as_scalar(c)})

    def zero(self):
        return PolyFunction(self, {})

    def coordinate(self, i):
        if not 1 <= i <= self.n:
            raise IndexError(f"coordinate index {i} outside 1..{self.n}")
        return PolyFunction(self, {(i,): ONE})

    def monomial(self, indices, c=1):
        return self.normal_order(indices).scale(c)

    def random_poly(self, rng: random.Random, degree=4, n_terms=5, coeff=random_qj):
        terms = {}
        for _ in range(n_terms):
            deg = rng.randint(0, degree)
            mono = tuple(rng.randint(1, self.n) for _ in range(deg))
            terms[mono] = coeff(rng)
        acc = self.zero()
        for mono, c in terms.items():
            acc = acc + self.monomial(mono, c)
        return acc


class PolyFunction:
    """A polynomial in normally ordered coordinate monomials."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms):
        self.alg = alg
        self.terms = {tuple(m): _as_scalar(c) for m, c in terms.items() if c}
        for m in self.terms:
            if list(m) != sorted(m):
                raise ValueError(f"monomial {m} is not normally ordered")

    def _wrap(self, other):
        if isinstance(other, PolyFunction):
            return other
        return self.alg.constant(other)

    def __add__(self, other):
        other = self._wrap(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, ZERO) + c
        return PolyFunction(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return PolyFunction(self.alg, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def scale(self, c):
        c = _as_scalar(c)
        return PolyFunction(self.alg, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, ExactScalar)):
            return self.scale(other)
        if not isinstance(other, PolyFunction):
            return NotImplemented
        out = {}
        for (m1, c1), (m2, c2) in itertools.product(self.terms.items(), other.terms.items()):
            c = c1 * c2
            for m, v in self.alg._normal_terms(m1 + m2).items():
                out[m] = out.get(m, ZERO) + c * v
        return PolyFunction(self.alg, out)

    def __rmul__(self, other):
        if isinstance(other, (int, ExactScalar)):
            return self.scale(other)
        return NotImplemented

    def partial(self, i):
        """d/dxi^i as a derivation with d_i xi^k = delta^k_i and d_i eps = 0."""
        out = {}
        for mono, c in self.terms.items():
            for p, idx in enumerate(mono):
                if idx == i:
                    rest = mono[:p] + mono[p + 1:]
                    out[rest] = out.get(rest, ZERO) + c
        return PolyFunction(self.alg, out)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, PolyFunction):
            other = self._wrap(other) if isinstance(other, (int, ExactScalar)) else None
            if other is None:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    @property
    def degree(self):
        return max((len(m) for m in self.terms), default=-1)

    def constant_term(self):
        return self.terms.get((), ZERO)

    def truncate(self, degree):
        return PolyFunction(self.alg, {m: c for m, c in self.terms.items() if len(m) <= degree})

    def evaluate(self, point):
        """Value at a point (commutative coordinates only)."""
        if not self.alg.commutative:
            raise ValueError("pointwise evaluation needs eps = 0")
        acc = ZERO
        for mono, c in self.terms.items():
            v = c
            for idx in mono:
                v = v * point[idx - 1]
            acc = acc + v
        return acc

    def conjugate(self):
        return PolyFunction(self.alg.conjugate(), {m: c.conjugate() for m, c in self.terms.items()})

    def __repr__(self):
        return f"PolyFunction({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=lambda m: (len(m), m)):
            c = self.terms[mono]
            name = "*".join(f"x{i}" for i in mono)
            if not name:
                parts.append(f"({c})")
            else:
                parts.append(name if c == 1 else f"({c})*{name}")
        return " + ".join(parts)

    def to_json(self):
        return {"terms": [{"mono": list(m), "c": c.to_json()}
                          for m, c in sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))]}

    @classmethod
    def from_json(cls, alg, data):
        return cls(alg, {tuple(t["mono"]): ExactScalar.from_json(t["c"]) for t in data["terms"]})


# --- words -------------------------------------------------------------------------

def d_count(word):
    return sum(o for o, _ in word)


def word_grade(word, kind=D_KIND):
    g = d_count(word)
    return g % 3 if kind == D_KIND else (2 * g) % 3


def word_to_string(word, kind=D_KIND):
    if not word:
        return "1"
    one, two = _LETTERS[kind]
    return " ".join(f"{one if o == 1 else two}{i}" for o, i in word)


def word_from_string(text, kind=D_KIND):
    text = text.strip()
    if text == "1":
        return ()
    one, two = _LETTERS[kind]
    out = []
    for tok in text.split():
        if tok[0] == one:
            out.append((1, int(tok[1:])))
        elif tok[0] == two:
            out.append((2, int(tok[1:])))
        else:
            raise ValueError(f"bad form symbol {tok!r}")
    return tuple(out)


@lru_cache(maxsize=None)
def reduce_word(word, kind=D_KIND):
    """Canonical form of a raw word: (scalar, canonical word) or None for zero."""
    root = _ROOT[kind]
    word = tuple(word)
    if d_count(word) > 3:
        return None
    if len(word) == 2 and word[0][0] == 1 and word[1][0] == 2:
        return root, (word[1], word[0])
    if len(word) == 3:
        if word[0] == word[1] == word[2]:
            return None
        rots = [word, word[1:] + word[:1], word[2:] + word[:2]]
        s = min(range(3), key=lambda r: rots[r])
        # w(ikm) = root w(kmi): each left rotation costs one factor of root
        return root ** s, rots[s]
    return ONE, word


class FormElement:
    """A left combination sum_w c_w w with canonical words w.

    Coefficients are PolyFunction or MatrixPoly objects; any type with
    +, scale, partial, is_zero and * works.
    """

    __slots__ = ("n", "terms", "kind")

    def __init__(self, n, terms=None, kind=D_KIND):
        self.n = n
        self.kind = kind
        self.terms = {}
        for w, c in (terms or {}).items():
            self._accumulate(tuple(w), c)

    def _accumulate(self, raw_word, c, already_reduced=False):
        if c.is_zero():
            return
        red = (ONE, raw_word) if already_reduced else reduce_word(raw_word, self.kind)
        if red is None:
            return
        s, w = red
        if s != 1:
            c = c.scale(s)
        if w in self.terms:
            v = self.terms[w] + c
            if v.is_zero():
                del self.terms[w]
            else:
                self.terms[w] = v
        else:
            self.terms[w] = c

    @classmethod
    def function(cls, f, n=None, kind=D_KIND):
        n = f.alg.n if n is None and hasattr(f, "alg") else n
        return cls(n, {(): f}, kind)

    @classmethod
    def from_word(cls, word, coeff, n, kind=D_KIND):
        return cls(n, {tuple(word): coeff}, kind)

    def _new(self):
        return FormElement(self.n, kind=self.kind)

    def __add__(self, other):
        self._check(other)
        out = self.copy()
        for w, c in other.terms.items():
            out._accumulate(w, c, already_reduced=True)
        return out

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def _check(self, other):
        if not isinstance(other, FormElement):
            raise TypeError("can only combine forms with forms")
        if other.terms and self.terms and other.kind != self.kind:
            raise ValueError("cannot add d-forms and delta-forms")

    def copy(self):
        out = self._new()
        out.terms = dict(self.terms)
        return out

    def scale(self, c):
        c = _as_scalar(c)
        out = self._new()
        if c:
            out.terms = {w: v.scale(c) for w, v in self.terms.items()}
        return out

    def left_multiply(self, f):
        """f * form: functions act on the left only."""
        out = self._new()
        for w, c in self.terms.items():
            out._accumulate(w, f * c, already_reduced=True)
        return out

    def __rmul__(self, f):
        if isinstance(f, (int, ExactScalar)):
            return self.scale(f)
        return self.left_multiply(f)

    def __mul__(self, other):
        if isinstance(other, (int, ExactScalar)):
            return self.scale(other)
        raise TypeError("right multiplication of forms by functions is not supported; "
                        "use left_multiply or product")

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, FormElement):
            return NotImplemented
        if not self.terms and not other.terms:
            return True
        return self.kind == other.kind and self.terms == other.terms

    def __hash__(self):
        return hash((self.kind, frozenset(self.terms)))

    def block(self, pattern):
        """Sub-form whose words have the given order pattern, e.g. (2, 1)."""
        out = self._new()
        out.terms = {w: c for w, c in self.terms.items() if tuple(o for o, _ in w) == tuple(pattern)}
        return out

    def coefficient(self, word, default=None):
        red = reduce_word(tuple(word), self.kind)
        if red is None:
            return default
        s, w = red
        c = self.terms.get(w)
        if c is None:
            return default
        return c.scale(ONE / s)

    def map_coefficients(self, fn):
        out = self._new()
        for w, c in self.terms.items():
            out._accumulate(w, fn(c), already_reduced=True)
        return out

    @property
    def grades(self):
        return {word_grade(w, self.kind) for w in self.terms}

    @property
    def degrees(self):
        return {len(w) for w in self.terms}

    def __repr__(self):
        return f"FormElement({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"[{c}] {word_to_string(w, self.kind)}"
                          for w, c in sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0])))

    def to_json(self):
        return {"kind": self.kind, "n": self.n,
                "terms": [{"word": word_to_string(w, self.kind), "coeff": c.to_json()}
                          for w, c in sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))]}


def reduce_form(raw_word, coeff, n, kind=D_KIND):
    """The canonical form of coeff * raw_word."""
    return FormElement(n, {tuple(raw_word): coeff}, kind)


# --- differentials ---------------------------------------------------------------

def _differential(x, kind):
    out = FormElement(x.n, kind=kind)
    for w, c in x.terms.items():
        for i in range(1, x.n + 1):
            dc = c.partial(i)
            if not dc.is_zero():
                out._accumulate(((1, i),) + w, dc)
        prefix = 0
        for p, (o, idx) in enumerate(w):
            if o == 1:
                g = prefix if kind == D_KIND else 2 * prefix
                out._accumulate(w[:p] + ((2, idx),) + w[p + 1:], c.scale(j_power(g)))
            prefix += o
    return out


def _is_function(x):
    return all(not w for w in x.terms)


def d(x):
    """Exterior differential; zero on delta-forms of positive degree (d delta = 0)."""
    if x.kind == DELTA_KIND and not _is_function(x):
        return FormElement(x.n, kind=D_KIND)
    return _differential(_rekind(x, D_KIND), D_KIND)


def d_power(x, times):
    for _ in range(times):
        x = d(x)
    return x


def df(f):
    """Differential of a function."""
    return d(FormElement.function(f))


def d2_oneform(coeffs):
    """d^2(omega_k dxi^k) for coefficients omega_1..omega_n."""
    n = len(coeffs)
    omega = FormElement(n, {((1, k + 1),): c for k, c in enumerate(coeffs)})
    return d(d(omega))


def _rekind(x, kind):
    if x.kind == kind:
        return x
    out = FormElement(x.n, kind=kind)
    out.terms = dict(x.terms)
    return out


def conjugate_form(x):
    """The conjugation *: j -> j^2 on coefficients, d <-> delta on words."""
    kind = DELTA_KIND if x.kind == D_KIND else D_KIND
    out = FormElement(x.n, kind=kind)
    out.terms = {w: c.conjugate() for w, c in x.terms.items()}
    return out


def delta(x):
    """Conjugate differential, transported from d along the conjugation."""
    if x.kind == D_KIND and not _is_function(x):
        return FormElement(x.n, kind=DELTA_KIND)
    return conjugate_form(d(conjugate_form(_rekind(x, DELTA_KIND))))


def delta_direct(x):
    """Conjugate differential from its own rewriting rules (j replaced by j^2)."""
    if x.kind == D_KIND and not _is_function(x):
        return FormElement(x.n, kind=DELTA_KIND)
    return _differential(_rekind(x, DELTA_KIND), DELTA_KIND)


# --- products ---------------------------------------------------------------------

def concatenate(*forms):
    """Tensor-style product: coefficients and words concatenated left to right.

    Coefficients of later factors are moved past the words of earlier ones,
    which the calculus only justifies at maximal degree; ``product`` enforces
    that.
    """
    kind = forms[0].kind
    acc = forms[0]
    for f in forms[1:]:
        if f.kind != kind and f.terms and acc.terms:
            return FormElement(acc.n, kind=kind)  # mixed d/delta words vanish
        out = FormElement(acc.n, kind=kind)
        for (w1, c1), (w2, c2) in itertools.product(acc.terms.items(), f.terms.items()):
            out._accumulate(w1 + w2, c1 * c2)
        acc = out
    return acc


def product(*forms):
    """Product of forms whose every surviving word has the maximal d-count 3."""
    for combo in itertools.product(*(f.terms for f in forms)):
        total = sum(d_count(w) for w in combo)
        if total < 3:
            raise ValueError("products of forms are only defined at maximal degree")
    return concatenate(*forms)


# --- the two displayed conditions ---------------------------------------------------

def cyclic_condition(m, k, i, n):
    """dxi^m dxi^k dxi^i + dxi^k dxi^i dxi^m + dxi^i dxi^m dxi^k (reduced)."""
    one = PolyFunction(CoordinateAlgebra(n), {(): ONE})
    acc = FormElement(n)
    for w in (((1, m), (1, k), (1, i)), ((1, k), (1, i), (1, m)), ((1, i), (1, m), (1, k))):
        acc = acc + reduce_form(w, one, n)
    return acc


def exchange_condition(k, i, n):
    """d2xi^k dxi^i - j^2 dxi^i d2xi^k (reduced)."""
    one = PolyFunction(CoordinateAlgebra(n), {(): ONE})
    return reduce_form(((2, k), (1, i)), one, n) - reduce_form(((1, i), (2, k)), one.scale(J2), n)


def all_words(n, kind=D_KIND):
    """Every canonical nonzero word over n coordinates."""
    symbols = [(o, i) for o in (1, 2) for i in range(1, n + 1)]
    seen = set()
    for length in range(4):
        for raw in itertools.product(symbols, repeat=length):
            red = reduce_word(raw, kind)
            if red is not None:
                seen.add(red[1])
    return sorted(seen, key=lambda w: (len(w), w))
