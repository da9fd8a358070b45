"""Exact arithmetic in the cyclotomic field Q(zeta), zeta a primitive 24th root of unity.

Elements are stored as ``sum_{e<8} (n_e / den) * zeta**e`` with integer
numerators and one positive common denominator, reduced by
``zeta**8 = zeta**4 - 1`` (the 24th cyclotomic polynomial is x^8 - x^4 + 1).
The field contains everything the chessboard algebras need: the cube root
of unity j, the imaginary unit, sqrt(2) and sqrt(3).
"""

from __future__ import annotations

import cmath
import math
import random
from fractions import Fraction
from functools import reduce
from numbers import Rational

DEGREE = 8
ORDER = 24


def _reduce_poly(coeffs):
    """Reduce a coefficient list of any length modulo x^8 - x^4 + 1 in place."""
    for e in range(len(coeffs) - 1, DEGREE - 1, -1):
        c = coeffs[e]
        if c:
            coeffs[e] = 0
            coeffs[e - 4] += c
            coeffs[e - 8] -= c
    return coeffs[:DEGREE]


def _power_table():
    table = []
    for e in range(ORDER):
        coeffs = [0] * (e + 1)
        coeffs[e] = 1
        table.append(tuple(_reduce_poly(coeffs) + [0] * max(0, DEGREE - e - 1)))
    return tuple(t[:DEGREE] for t in table)


_POW = _power_table()
_GALOIS = (1, 5, 7, 11, 13, 17, 19, 23)


class ExactScalar:
    """An immutable, hashable element of Q(zeta_24).

    >>> J * J * J == ONE
    True
    >>> (SQRT2 * SQRT2, SQRT3 * SQRT3)
    (ExactScalar(2), ExactScalar(3))
    """

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, value=0):
        if isinstance(value, ExactScalar):
            self._num, self._den = value._num, value._den
        elif isinstance(value, (int, Fraction)) or isinstance(value, Rational):
            f = Fraction(value)
            self._num = (f.numerator,) + (0,) * (DEGREE - 1)
            self._den = f.denominator
        else:
            raise TypeError(f"cannot build an ExactScalar from {type(value).__name__}")
        self._hash = None

    @classmethod
    def _make(cls, num, den):
        obj = cls.__new__(cls)
        g = reduce(math.gcd, num, den)
        if den < 0:
            g = -g
        if g != 1:
            num = tuple(n // g for n in num)
            den //= g
        obj._num = tuple(num)
        obj._den = den
        obj._hash = None
        return obj

    @classmethod
    def from_coefficients(cls, coeffs):
        """Build from up to 24 rational coefficients of zeta**0, zeta**1, ..."""
        fracs = [Fraction(c) for c in coeffs]
        den = reduce(lambda a, b: a * b // math.gcd(a, b), (f.denominator for f in fracs), 1)
        ints = [f.numerator * (den // f.denominator) for f in fracs]
        ints += [0] * max(0, DEGREE - len(ints))
        return cls._make(tuple(_reduce_poly(ints)), den)

    @classmethod
    def zeta_power(cls, e):
        return cls._make(_POW[e % ORDER], 1)

    # --- inspection -----------------------------------------------------
    @property
    def coefficients(self):
        """The 8 rational coordinates in the power basis."""
        return tuple(Fraction(n, self._den) for n in self._num)

    def is_zero(self):
        return not any(self._num)

    def is_rational(self):
        return not any(self._num[1:])

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self._num[0], self._den)

    def to_complex(self):
        return sum(n * cmath.exp(2j * math.pi * e / ORDER)
                   for e, n in enumerate(self._num) if n) / self._den + 0j

    # --- arithmetic -----------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, ExactScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return ExactScalar(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self._den == o._den:
            return ExactScalar._make(tuple(a + b for a, b in zip(self._num, o._num)), self._den)
        return ExactScalar._make(
            tuple(a * o._den + b * self._den for a, b in zip(self._num, o._num)),
            self._den * o._den)

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar._make(tuple(-a for a in self._num), self._den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._num, o._num
        acc = [0] * (2 * DEGREE - 1)
        for i, x in enumerate(a):
            if x:
                for k, y in enumerate(b):
                    if y:
                        acc[i + k] += x * y
        return ExactScalar._make(tuple(_reduce_poly(acc)), self._den * o._den)

    __rmul__ = __mul__

    def galois(self, k):
        """Apply the automorphism zeta -> zeta**k (k coprime to 24)."""
        if math.gcd(k, ORDER) != 1:
            raise ValueError("k must be coprime to 24")
        acc = [0] * DEGREE
        for e, n in enumerate(self._num):
            if n:
                for t, p in enumerate(_POW[(e * k) % ORDER]):
                    if p:
                        acc[t] += n * p
        return ExactScalar._make(tuple(acc), self._den)

    def conjugate(self):
        """Complex conjugation, zeta -> zeta**-1."""
        return self.galois(23)

    def norm(self):
        """The absolute field norm, a rational number."""
        return self.to_norm_parts()[0]

    def to_norm_parts(self):
        others = ONE
        for k in _GALOIS[1:]:
            others = others * self.galois(k)
        return (self * others).to_fraction(), others

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_24)")
        if self.is_rational():
            return ExactScalar(1 / Fraction(self._num[0], self._den))
        n, others = self.to_norm_parts()
        return others * ExactScalar(1 / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # --- comparison and hashing -------------------------------------------
    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._num == o._num and self._den == o._den

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self._num[0], self._den))
            else:
                self._hash = hash((self._num, self._den))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    # --- text forms --------------------------------------------------------
    def __repr__(self):
        if self.is_rational():
            return f"ExactScalar({self.to_fraction()})"
        return f"ExactScalar({self})"

    def __str__(self):
        named = _NAMES.get(self)
        if named is not None:
            return named
        n = self._num
        if not any(n[e] for e in (1, 2, 3, 5, 6, 7)):
            # element of Q(j): c0 + c4 z^4 = (c0 + c4) + c4 j
            a, b = Fraction(n[0] + n[4], self._den), Fraction(n[4], self._den)
            if not b:
                return str(a)
            jt = "j" if b == 1 else ("-j" if b == -1 else f"{b}*j")
            return jt if not a else f"{a}+{jt}".replace("+-", "-")
        terms = []
        for e, c in enumerate(self.coefficients):
            if not c:
                continue
            mono = "" if e == 0 else ("z" if e == 1 else f"z^{e}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        if not terms:
            return "0"
        return "+".join(terms).replace("+-", "-")

    def to_json(self):
        return {"c": [str(c) for c in self.coefficients]}

    @classmethod
    def from_json(cls, data):
        return cls.from_coefficients(Fraction(s) for s in data["c"])


ZERO = ExactScalar(0)
ONE = ExactScalar(1)
ZETA = ExactScalar.zeta_power(1)
J = ExactScalar.zeta_power(8)
J2 = ExactScalar.zeta_power(16)
I = ExactScalar.zeta_power(6)
SQRT2 = ZETA ** 3 + ZETA ** 21
SQRT3 = ZETA ** 2 + ZETA ** 22

_NAMES = {J: "j", J2: "j^2", -J: "-j", -J2: "-j^2", I: "i", -I: "-i"}


def j_power(k):
    """j**k for any integer k."""
    return (ONE, J, J2)[k % 3]


def to_complex(x):
    """Approximate complex value of an ExactScalar or rational."""
    if isinstance(x, ExactScalar):
        return x.to_complex()
    return complex(x)


def random_scalar(rng: random.Random, height=3, support=None, density=0.5):
    """A random field element with integer-over-small-denominator coordinates.

    ``support`` restricts which powers of zeta may occur (default: all 8).
    """
    support = range(DEGREE) if support is None else support
    coeffs = [0] * DEGREE
    for e in support:
        if rng.random() < density:
            coeffs[e] = Fraction(rng.randint(-height, height), rng.randint(1, 3))
    return ExactScalar.from_coefficients(coeffs)


def random_qj(rng: random.Random, height=3):
    """A random element of the subfield Q(j), cheap to multiply."""
    return ExactScalar(rng.randint(-height, height)) + J * rng.randint(-height, height)

