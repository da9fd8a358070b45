"""Cubic matrices a_{ikm} and their ternary algebra.

Two trilinear laws are provided:

* ``star``:   (a*b*c)_{ikl} = sum a_{piq} b_{qkr} c_{rlp}
* ``oslash``: (a(/)b(/)c)_{ijk} = sum a_{ipq} b_{pjr} c_{qrk}

together with the index operators ``J`` ((Ja)_{ikl} = a_{kli}) and ``T``
((Ta)_{ikm} = a_{mki}), the four-way symmetry decomposition, canonical
orbit bases and the full multiplication table of basis units.

Indices are 1-based in the public interface, matching the usual tensor
notation; storage is a dense flat tuple of n**3 ExactScalars.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
from dataclasses import dataclass

import numpy as np

from .linalg import as_scalar, solve
from .scalar import J, J2, ONE, ZERO, ExactScalar, j_power

LAWS = ("star", "oslash")


class CubicMatrix:
    """An immutable n x n x n array of ExactScalar."""

    __slots__ = ("n", "entries", "_hash")

    def __init__(self, n, entries=None):
        if n < 1:
            raise ValueError("dimension must be at least 1")
        self.n = n
        if entries is None:
            self.entries = (ZERO,) * n ** 3
        elif isinstance(entries, dict):
            flat = [ZERO] * n ** 3
            for idx, v in entries.items():
                flat[self._pos(idx)] = as_scalar(v)
            self.entries = tuple(flat)
        else:
            flat = tuple(as_scalar(v) for v in entries)
            if len(flat) != n ** 3:
                raise ValueError(f"expected {n ** 3} entries, got {len(flat)}")
            self.entries = flat
        self._hash = None

    def _pos(self, idx):
        i, k, m = idx
        n = self.n
        if not all(1 <= x <= n for x in (i, k, m)):
            raise IndexError(f"index {idx} out of range for n={n}")
        return ((i - 1) * n + (k - 1)) * n + (m - 1)

    @classmethod
    def from_nested(cls, nested):
        arr = list(nested)
        n = len(arr)
        return cls(n, [x for plane in arr for row in plane for x in row])

    @classmethod
    def zeros(cls, n):
        return cls(n)

    def indices(self):
        return itertools.product(range(1, self.n + 1), repeat=3)

    def __getitem__(self, idx):
        return self.entries[self._pos(idx)]

    def nonzero(self):
        """Iterator of ((i, k, m), value) over nonzero entries, 1-based."""
        n = self.n
        for pos, v in enumerate(self.entries):
            if v:
                yield (pos // (n * n) + 1, (pos // n) % n + 1, pos % n + 1), v

    def is_zero(self):
        return not any(self.entries)

    def _check(self, other):
        if not isinstance(other, CubicMatrix) or other.n != self.n:
            raise ValueError("cubic matrices must have equal dimension")

    def __add__(self, other):
        self._check(other)
        return CubicMatrix(self.n, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._check(other)
        return CubicMatrix(self.n, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return CubicMatrix(self.n, [-a for a in self.entries])

    def scale(self, c):
        c = as_scalar(c)
        return CubicMatrix(self.n, [c * a if a else a for a in self.entries])

    def __mul__(self, c):
        if isinstance(c, CubicMatrix):
            raise TypeError("use star() or oslash() for ternary products")
        return self.scale(c)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, CubicMatrix) and self.n == other.n and self.entries == other.entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.entries))
        return self._hash

    def __repr__(self):
        return f"CubicMatrix(n={self.n}, {self.to_sparse_string() or '0'})"

    def conjugate(self):
        return CubicMatrix(self.n, [a.conjugate() for a in self.entries])

    # --- serialization ---------------------------------------------------
    def to_sparse_string(self):
        return ";".join(f"{i},{k},{m}:{v}" for (i, k, m), v in self.nonzero())

    def to_json(self):
        return {"n": self.n,
                "entries": [{"i": i, "k": k, "m": m, "v": v.to_json()}
                            for (i, k, m), v in self.nonzero()]}

    @classmethod
    def from_json(cls, data):
        return cls(data["n"], {(e["i"], e["k"], e["m"]): ExactScalar.from_json(e["v"])
                               for e in data["entries"]})

    def to_array(self):
        """Numeric complex array of shape (n, n, n), 0-based."""
        return np.array([v.to_complex() for v in self.entries], dtype=complex).reshape((self.n,) * 3)


def basis_unit(i, k, m, n):
    """The cubic matrix e_{ikm} with a single 1 at (i, k, m)."""
    return CubicMatrix(n, {(i, k, m): ONE})


def omega(k, n):
    """The diagonal unit omega^(k) = e_{kkk}."""
    return basis_unit(k, k, k, n)


def _check_same(*mats):
    n = mats[0].n
    for a in mats:
        if not isinstance(a, CubicMatrix) or a.n != n:
            raise ValueError("cubic matrices must have equal dimension")
    return n


def star(a, b, c):
    """(a*b*c)_{ikl} = sum_{p,q,r} a_{piq} b_{qkr} c_{rlp}."""
    n = _check_same(a, b, c)
    b_by_first = {}
    for (q, k, r), v in b.nonzero():
        b_by_first.setdefault(q, []).append((k, r, v))
    c_by_outer = {}
    for (r, l, p), v in c.nonzero():
        c_by_outer.setdefault((r, p), []).append((l, v))
    out = {}
    for (p, i, q), va in a.nonzero():
        for k, r, vb in b_by_first.get(q, ()):
            vab = va * vb
            for l, vc in c_by_outer.get((r, p), ()):
                key = (i, k, l)
                out[key] = out.get(key, ZERO) + vab * vc
    return CubicMatrix(n, out)


def oslash(a, b, c):
    """(a(/)b(/)c)_{ijk} = sum_{p,q,r} a_{ipq} b_{pjr} c_{qrk}."""
    n = _check_same(a, b, c)
    b_by_first = {}
    for (p, j, r), v in b.nonzero():
        b_by_first.setdefault(p, []).append((j, r, v))
    c_by_front = {}
    for (q, r, k), v in c.nonzero():
        c_by_front.setdefault((q, r), []).append((k, v))
    out = {}
    for (i, p, q), va in a.nonzero():
        for j, r, vb in b_by_first.get(p, ()):
            vab = va * vb
            for k, vc in c_by_front.get((q, r), ()):
                key = (i, j, k)
                out[key] = out.get(key, ZERO) + vab * vc
    return CubicMatrix(n, out)


def product(law, a, b, c):
    if law == "star":
        return star(a, b, c)
    if law == "oslash":
        return oslash(a, b, c)
    raise ValueError(f"unknown law {law!r}")


def n_fold_product(tensors):
    """The n-fold product of n order-n tensors of equal dimension.

    Each pair of factors (r, s), r < s, shares one summed index j_{rs}.
    Factor r carries, in order, the contracted indices j_{r1}..j_{r,r-1}
    shared with earlier factors, then its free index, then the indices
    j_{r,r+1}..j_{rn} shared with later factors. The free indices of the
    n factors form the result. For n = 2 this is the matrix product; for
    n = 3 it coincides with ``oslash`` (j12 = p, j13 = q, j23 = r).

    Inputs are numpy arrays (object dtype for exact values); the result
    is an array of the same dtype.
    """
    arrays = [np.asarray(t) for t in tensors]
    order = len(arrays)
    if order < 2:
        raise ValueError("need at least two factors")
    dim = arrays[0].shape[0]
    for t in arrays:
        if t.ndim != order or any(s != dim for s in t.shape):
            raise ValueError(f"each factor must be an order-{order} tensor of dimension {dim}")
    pairs = [(r, s) for r in range(order) for s in range(r + 1, order)]
    dtype = object if any(t.dtype == object for t in arrays) else np.result_type(*arrays)
    out = np.empty((dim,) * order, dtype=dtype)
    for free in itertools.product(range(dim), repeat=order):
        acc = ZERO if dtype == object else 0
        for summed in itertools.product(range(dim), repeat=len(pairs)):
            shared = dict(zip(pairs, summed))
            term = None
            for r, t in enumerate(arrays):
                idx = tuple(shared[(s, r)] for s in range(r)) + (free[r],) + \
                    tuple(shared[(r, s)] for s in range(r + 1, order))
                v = t[idx]
                term = v if term is None else term * v
                if not term:
                    break
            if term:
                acc = acc + term
        out[free] = acc
    return out


def to_object_array(a: CubicMatrix):
    return np.array(a.entries, dtype=object).reshape((a.n,) * 3)


def from_object_array(arr):
    n = arr.shape[0]
    return CubicMatrix(n, list(arr.reshape(-1)))


# --- index operators ---------------------------------------------------------

def cyclic_J(a):
    """(Ja)_{ikl} = a_{kli}."""
    return CubicMatrix(a.n, {(i, k, l): a[(k, l, i)] for (i, k, l) in a.indices()})


def transpose_T(a):
    """(Ta)_{ikm} = a_{mki}."""
    return CubicMatrix(a.n, {(i, k, m): a[(m, k, i)] for (i, k, m) in a.indices()})


def diagonal_part(a):
    return CubicMatrix(a.n, {(i, i, i): a[(i, i, i)] for i in range(1, a.n + 1)})


def decompose(a):
    """Split a into (diag, sym, jskew, j2skew).

    The J-projectors act on the off-diagonal part only:
    sym = (1 + J + J^2)/3, jskew = (1 + j^2 J + j J^2)/3 (so that J x = j x),
    j2skew = (1 + j J + j^2 J^2)/3 (so that J x = j^2 x).
    """
    diag = diagonal_part(a)
    off = a - diag
    Ja = cyclic_J(off)
    J2a = cyclic_J(Ja)
    third = ExactScalar(1) / 3
    sym = (off + Ja + J2a).scale(third)
    jskew = (off + Ja.scale(J2) + J2a.scale(J)).scale(third)
    j2skew = (off + Ja.scale(J) + J2a.scale(J2)).scale(third)
    return diag, sym, jskew, j2skew


@dataclass(frozen=True)
class SymmetryClass:
    """Symmetry type of a cubic matrix under J and T.

    ``label`` is one of diagonal, symmetric, j_skew, j2_skew, mixed;
    ``t_flag`` is "T=a", "T=conj" or None.
    """

    label: str
    t_flag: str | None = None


def classify(a):
    Ja = cyclic_J(a)
    if diagonal_part(a) == a:
        label = "diagonal"
    elif Ja == a:
        label = "symmetric"
    elif Ja == a.scale(J):
        label = "j_skew"
    elif Ja == a.scale(J2):
        label = "j2_skew"
    else:
        label = "mixed"
    Ta = transpose_T(a)
    t_flag = "T=a" if Ta == a else ("T=conj" if Ta == a.conjugate() else None)
    return SymmetryClass(label, t_flag)


# --- canonical bases -------------------------------------------------------

def orbit(idx):
    """The J-orbit of an index triple, starting from the lexicographically smallest."""
    i, k, m = idx
    rots = [(i, k, m), (k, m, i), (m, i, k)]
    start = min(range(3), key=lambda s: rots[s])
    return rots[start:] + rots[:start]


def orbit_matrix(idx, n, eigenvalue_power):
    """Cubic matrix supported on the J-orbit of ``idx`` with J x = j**p x.

    Normalized with entry 1 at the lexicographically smallest orbit index
    t = (i, k, m); then x_{kmi} = j**p and x_{mik} = j**(2p).
    """
    t = orbit(idx)
    if t[0][0] == t[0][1] == t[0][2]:
        raise ValueError("diagonal indices have a trivial orbit")
    lam = j_power(eigenvalue_power)
    return CubicMatrix(n, {t[0]: ONE, t[1]: lam, t[2]: lam * lam})


# Scale factors turning the leading-one rho basis into one whose j-bracket
# constants are exactly -1 (see ``rho_basis``).
def _unit_scales():
    from .scalar import SQRT2, ZETA
    return (ZETA ** 22 / SQRT2, ZETA ** 2 / SQRT2)


def rho_basis(n=2, normalization="leading"):
    """The two j-skew cubic matrices of dimension 2.

    rho1 lives on the orbit of (1,1,2), rho2 on the orbit of (1,2,2), both
    in the eigenspace J x = j x, which is where the j-bracket of star
    products takes its values. With ``normalization="leading"`` the entry
    at the smallest orbit index is 1, giving the brackets
    {rho1, rho2, rho1} = 2 j^2 rho2 and {rho2, rho1, rho2} = 2 j rho1.
    ``normalization="unit"`` rescales both so these constants become -1.
    """
    if n != 2:
        raise ValueError("rho basis is defined for n = 2 only")
    r1 = orbit_matrix((1, 1, 2), 2, 1)
    r2 = orbit_matrix((1, 2, 2), 2, 1)
    if normalization == "leading":
        return [r1, r2]
    if normalization == "unit":
        s1, s2 = _unit_scales()
        return [r1.scale(s1), r2.scale(s2)]
    raise ValueError(f"unknown normalization {normalization!r}")


def kappa_basis(n=2):
    """The j^2-skew counterparts of the rho matrices (J x = j^2 x)."""
    if n != 2:
        raise ValueError("kappa basis is defined for n = 2 only")
    return [orbit_matrix((1, 1, 2), 2, 2), orbit_matrix((1, 2, 2), 2, 2)]


def pi_basis(n=2):
    """The symmetric off-diagonal matrices (J x = x) for n = 2."""
    if n != 2:
        raise ValueError("pi basis is defined for n = 2 only")
    return [orbit_matrix((1, 1, 2), 2, 0), orbit_matrix((1, 2, 2), 2, 0)]


R_POSITIONS = {
    "1+": (2, 3, 2), "1-": (3, 2, 3),
    "2+": (3, 1, 3), "2-": (1, 3, 1),
    "3+": (1, 2, 1), "3-": (2, 1, 2),
    "7": (1, 2, 3), "8": (3, 2, 1),
}


def named_bases(n=3):
    """Canonical families for n = 3.

    O: the 3 diagonal units; P: the 8 symmetric orbit matrices; R: the 8
    j-skew orbit matrices keyed "1+", "1-", ..., "7", "8"; K: the 8
    j^2-skew orbit matrices with the same keys.
    """
    if n != 3:
        raise ValueError("named bases are defined for n = 3 only")
    fam = {"O": {str(k): omega(k, 3) for k in (1, 2, 3)}}
    for name, power in (("P", 0), ("R", 1), ("K", 2)):
        fam[name] = {key: orbit_matrix(idx, 3, power) for key, idx in R_POSITIONS.items()}
    return fam


# --- brackets and closure ----------------------------------------------------

def j_bracket(a, b, c):
    """{a, b, c} = a*b*c + j b*c*a + j^2 c*a*b (star law)."""
    return star(a, b, c) + star(b, c, a).scale(J) + star(c, a, b).scale(J2)


def ternary(law, a, b, c):
    if law == "j_bracket":
        return j_bracket(a, b, c)
    return product(law, a, b, c)


@dataclass
class ClosureReport:
    law: str
    products: dict  # (i1, i2, i3) -> list of coefficients, or None if outside the span
    closed: bool
    all_zero: bool


def expand_in(basis, x):
    """Coefficients of x in the span of ``basis``, or None."""
    cols = [list(b.entries) for b in basis]
    return solve(cols, list(x.entries))


def check_subalgebra(basis, law="star"):
    """Expand every ordered triple product of basis elements in the basis."""
    if not basis:
        raise ValueError("basis must be non-empty")
    _check_same(*basis)
    products = {}
    closed = all_zero = True
    for trip in itertools.product(range(len(basis)), repeat=3):
        x = ternary(law, *(basis[t] for t in trip))
        coeffs = expand_in(basis, x)
        products[trip] = coeffs
        if coeffs is None:
            closed = False
        if not x.is_zero():
            all_zero = False
    return ClosureReport(law, products, closed, all_zero)


def bracket_constant(result, target):
    """Scalar c with result == c * target, or None."""
    pos = next((p for p, v in enumerate(target.entries) if v), None)
    if pos is None:
        return None
    c = result.entries[pos] / target.entries[pos]
    return c if result == target.scale(c) else None


# --- the chessboard ----------------------------------------------------------

@dataclass
class TernaryTable:
    n: int
    law: str
    rows: list  # (lhs, mid, rhs, result) with index triples and a CubicMatrix

    def __len__(self):
        return len(self.rows)

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["lhs", "mid", "rhs", "result"])
        for lhs, mid, rhs, res in self.rows:
            w.writerow(["".join(map(str, lhs)), "".join(map(str, mid)), "".join(map(str, rhs)),
                        res.to_sparse_string()])
        return buf.getvalue()

    def to_json(self):
        rows = [{"lhs": list(lhs), "mid": list(mid), "rhs": list(rhs),
                 "result": res.to_json()} for lhs, mid, rhs, res in self.rows]
        return json.dumps(rows, separators=(",", ":")) + "\n"


def _table_rows(n, law, lhs_indices):
    units = {idx: basis_unit(*idx, n) for idx in itertools.product(range(1, n + 1), repeat=3)}
    idxs = list(units)
    rows = []
    for lhs in lhs_indices:
        for mid in idxs:
            for rhs in idxs:
                rows.append((lhs, mid, rhs, product(law, units[lhs], units[mid], units[rhs])))
    return rows


def mult_table(n, law="star", workers=1):
    """All n**9 products of basis units, in row-major (lhs, mid, rhs) order.

    With ``workers > 1`` the lhs slices are computed in a process pool;
    rows are reassembled in canonical order so output does not depend on
    scheduling.
    """
    if n not in (2, 3):
        raise ValueError("tables are supported for n in {2, 3}")
    if law not in LAWS:
        raise ValueError(f"unknown law {law!r}")
    lhs_all = list(itertools.product(range(1, n + 1), repeat=3))
    if workers <= 1:
        return TernaryTable(n, law, _table_rows(n, law, lhs_all))
    from concurrent.futures import ProcessPoolExecutor
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_table_rows, [n] * len(lhs_all), [law] * len(lhs_all),
                         [[lhs] for lhs in lhs_all])
        rows = [r for part in parts for r in part]
    return TernaryTable(n, law, rows)


def non_associativity_witness(n=2, law="oslash"):
    """First 5-tuple of basis units with (a.(b.c.d).e) != ((a.b.c).d.e).

    Returns (indices, left, right) or None. Search order is lexicographic.
    """
    idxs = list(itertools.product(range(1, n + 1), repeat=3))
    units = {idx: basis_unit(*idx, n) for idx in idxs}
    for tup in itertools.product(idxs, repeat=5):
        a, b, c, d, e = (units[t] for t in tup)
        left = product(law, a, product(law, b, c, d), e)
        right = product(law, product(law, a, b, c), d, e)
        if left != right:
            return tup, left, right
    return None
