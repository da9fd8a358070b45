"""The j-commutator in associative matrix algebras.

[A, B, C] = ABC + j BCA + j^2 CAB realizes the ternary rho-algebra on
2 x 2 matrices (through Pauli matrices), degenerates to the ordinary
commutator when the middle slot is the unit, and satisfies no linear
identity among the forty inequivalent double brackets [X, [Y, Z, U], V].
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from string import ascii_uppercase

from .linalg import RowEchelon, SquareMatrix
from .scalar import I, J, ONE, SQRT2, ZERO, ExactScalar

SIGMA1 = SquareMatrix([[0, 1], [1, 0]])
SIGMA2 = SquareMatrix([[ZERO, -I], [I, ZERO]])
SIGMA3 = SquareMatrix([[1, 0], [0, -1]])
PAULI = (SIGMA1, SIGMA2, SIGMA3)


def cyclic_bracket(root, mats):
    """sum_r root**r * (product of mats rotated left by r).

    With root = j and three matrices this is the j-commutator; with
    root = -1 and two matrices it is the ordinary commutator.
    """
    mats = list(mats)
    k = len(mats)
    n = mats[0].n
    acc = SquareMatrix.zeros(n)
    weight = ONE
    for r in range(k):
        rot = mats[r:] + mats[:r]
        prod = rot[0]
        for m in rot[1:]:
            prod = prod @ m
        acc = acc + prod.scale(weight)
        weight = weight * root
    return acc


def j_commutator(a, b, c):
    """[A, B, C] = ABC + j BCA + j^2 CAB."""
    if not (a.n == b.n == c.n):
        raise ValueError("matrices must have equal dimension")
    return cyclic_bracket(J, [a, b, c])


@dataclass
class PauliReport:
    unnormalized: tuple  # (lhs == -2 sigma2, lhs == -2 sigma1)
    normalized_constants: tuple  # c with [X1,X2,X1] = c X2 and [X2,X1,X2] = c' X1
    traceless: bool
    rho_constants: tuple  # the same constants from the cubic-matrix algebra

    @property
    def ok(self):
        return (all(self.unnormalized) and self.traceless
                and self.normalized_constants == (ExactScalar(-1), ExactScalar(-1))
                and self.normalized_constants == self.rho_constants)


def _scalar_ratio(x, y):
    """c with x == c * y for square matrices, or None."""
    flat_y = y.flatten()
    pos = next((p for p, v in enumerate(flat_y) if v), None)
    if pos is None:
        return None
    c = x.flatten()[pos] / flat_y[pos]
    return c if x == y.scale(c) else None


def verify_pauli_representation(pair=(0, 1)):
    """Check that two Pauli matrices over sqrt(2) represent the rho algebra."""
    from .cubic import bracket_constant, j_bracket, rho_basis

    s1, s2 = PAULI[pair[0]], PAULI[pair[1]]
    unnorm = (j_commutator(s1, s2, s1) == s2.scale(-2),
              j_commutator(s2, s1, s2) == s1.scale(-2))
    x1, x2 = s1.scale(ONE / SQRT2), s2.scale(ONE / SQRT2)
    consts = (_scalar_ratio(j_commutator(x1, x2, x1), x2),
              _scalar_ratio(j_commutator(x2, x1, x2), x1))
    r1, r2 = rho_basis(normalization="unit")
    rho_consts = (bracket_constant(j_bracket(r1, r2, r1), r2),
                  bracket_constant(j_bracket(r2, r1, r2), r1))
    traceless = all(s.trace() == 0 for s in PAULI)
    return PauliReport(unnorm, consts, traceless, rho_consts)


# --- bracket words -----------------------------------------------------------

def _key(tree):
    if isinstance(tree, int):
        return (0, tree)
    return (1, tuple(_key(t) for t in tree))


def canonical(tree):
    """Canonical representative of a bracket tree under cyclic rotation at every node.

    Returns (power, tree') with tree == root**power * tree'. Rotation uses
    [c1, c2, ..., ck] = root * [c2, ..., ck, c1].
    """
    if isinstance(tree, int):
        return 0, tree
    power = 0
    kids = []
    for t in tree:
        p, c = canonical(t)
        power += p
        kids.append(c)
    k = len(kids)
    best = min(range(k), key=lambda r: _key(tuple(kids[r:] + kids[:r])))
    return power + best, tuple(kids[best:] + kids[:best])


@dataclass(frozen=True)
class BracketWord:
    """A nested bracket over distinct labels, stored in canonical form."""

    tree: tuple

    @property
    def shape(self):
        """1-based outer slot holding the inner bracket (double brackets only)."""
        return next(s + 1 for s, t in enumerate(self.tree) if not isinstance(t, int))

    @property
    def labels(self):
        return tuple(_leaves(self.tree))

    def __str__(self):
        return _show(self.tree)

    def evaluate(self, root, mats):
        return _evaluate(self.tree, root, mats, {})


def _leaves(tree):
    if isinstance(tree, int):
        yield tree
    else:
        for t in tree:
            yield from _leaves(t)


def _show(tree):
    if isinstance(tree, int):
        return ascii_uppercase[tree]
    return "[" + ",".join(_show(t) for t in tree) + "]"


def _evaluate(tree, root, mats, memo):
    if isinstance(tree, int):
        return mats[tree]
    if tree not in memo:
        memo[tree] = cyclic_bracket(root, [_evaluate(t, root, mats, memo) for t in tree])
    return memo[tree]


def _double_trees(arity):
    """All raw double-bracket trees over 2*arity - 1 distinct labels."""
    nlab = 2 * arity - 1
    for slot in range(arity):
        for perm in itertools.permutations(range(nlab)):
            inner = tuple(perm[slot:slot + arity])
            outer = list(perm[:slot]) + [inner] + list(perm[slot + arity:])
            yield tuple(outer)


def enumerate_double_brackets(arity=3):
    """Canonical classes of double brackets; returns (words, orbit_sizes)."""
    classes = {}
    for tree in _double_trees(arity):
        _, c = canonical(tree)
        classes[c] = classes.get(c, 0) + 1
    words = [BracketWord(t) for t in sorted(classes, key=_key)]
    return words, [classes[w.tree] for w in words]


def _ternary_shapes(internal, arity):
    """All bracket-tree shapes with ``internal`` bracket nodes (leaves are None)."""
    if internal == 0:
        return [None]
    shapes = []
    rest = internal - 1
    for split in _compositions(rest, arity):
        for kids in itertools.product(*(_ternary_shapes(s, arity) for s in split)):
            shapes.append(tuple(kids))
    return shapes


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _fill(shape, labels):
    it = iter(labels)

    def go(s):
        return next(it) if s is None else tuple(go(t) for t in s)
    return go(shape)


def enumerate_nested_brackets(internal=3, arity=3, max_words=None):
    """Canonical bracket classes with a given number of brackets (bounded)."""
    nlab = internal * (arity - 1) + 1
    seen = {}
    for shape in _ternary_shapes(internal, arity):
        for perm in itertools.permutations(range(nlab)):
            _, c = canonical(_fill(shape, perm))
            if c not in seen:
                seen[c] = True
                if max_words is not None and len(seen) >= max_words:
                    return [BracketWord(t) for t in seen]
    return [BracketWord(t) for t in seen]


# --- identity search -------------------------------------------------------------

def random_rational_matrix(rng, n, height=3):
    return SquareMatrix([[Fraction(rng.randint(-height, height), rng.randint(1, 2))
                          for _ in range(n)] for _ in range(n)])


@dataclass
class SearchCertificate:
    arity: int
    n: int
    words: list
    samples: list = field(repr=False)
    rank: int = 0
    nullity: int = 0
    recheck_rank: int | None = None
    null_vectors: list = field(default_factory=list)

    def to_json(self):
        return {
            "arity": self.arity,
            "n": self.n,
            "words": [str(w) for w in self.words],
            "samples": [[[[str(x) for x in row] for row in m.rows] for m in tup]
                        for tup in self.samples],
            "rank": self.rank,
            "nullity": self.nullity,
            "recheck_rank": self.recheck_rank,
            "null_vectors": [[str(x) for x in v] for v in self.null_vectors],
        }


def _system_rank(words, root, n, rng, n_tuples, nlab):
    ech = RowEchelon(len(words))
    samples = []
    for _ in range(n_tuples):
        mats = [random_rational_matrix(rng, n) for _ in range(nlab)]
        samples.append(mats)
        if ech.rank == len(words):
            continue
        memo = {}
        values = [_evaluate(w.tree, root, mats, memo).flatten() for w in words]
        for e in range(n * n):
            ech.add([v[e] for v in values])
    return ech, samples


def double_bracket_identity_search(n=2, arity=3, seed=0, n_tuples=None, words=None):
    """Null-space dimension of sum_w c_w w(A, ..., E) = 0 over n x n matrices.

    Each word is evaluated on exact random tuples with small rational
    entries; every tuple contributes n*n linear equations. The sample
    count is at least twice the number of unknowns, and the rank is
    re-checked on a fresh sample set.
    """
    root = J if arity == 3 else ExactScalar(-1)
    if words is None:
        words, _ = enumerate_double_brackets(arity)
    nlab = max(max(w.labels) for w in words) + 1
    if n_tuples is None:
        n_tuples = 2 * len(words)
    rng = random.Random(seed)
    ech, samples = _system_rank(words, root, n, rng, n_tuples, nlab)
    fresh, _ = _system_rank(words, root, n, random.Random(seed + 1), n_tuples, nlab)
    return SearchCertificate(arity, n, list(words), samples, ech.rank,
                             len(words) - ech.rank, fresh.rank, ech.nullspace())
