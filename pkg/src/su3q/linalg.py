"""Sparse exact matrices over a scalar field and the kernels the pipeline needs.

Index convention for tensor products is row-major throughout: basis vector
``e_i (x) f_j`` of ``V (x) W`` has index ``i * dim(W) + j``.  Matrices are
stored as ``{row: {col: value}}`` with no explicit zeros; vectors are
``{index: value}`` dicts.  Entries may be ints, :class:`RatFunc`,
:class:`fractions.Fraction` or :class:`flint.nmod`.
"""

from __future__ import annotations

import hashlib
from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence

from .field import RatFunc
from .laurent import LaurentPoly

Vec = dict  # sparse vector {index: value}


class SingularMatrixError(ArithmeticError):
    pass


class NotInSpanError(ArithmeticError):
    pass


def _div(x, y):
    if isinstance(x, int) and isinstance(y, int):
        return x // y if x % y == 0 else Fraction(x, y)
    return x / y


def _complexity(x) -> int:
    c = getattr(x, "complexity", None)
    return c() if c is not None else 0


# -- vectors ---------------------------------------------------------------
def vec_add(u: Vec, v: Vec, scale=1) -> Vec:
    out = dict(u)
    for i, x in v.items():
        y = out.get(i)
        z = x * scale if y is None else y + x * scale
        if z == 0:
            out.pop(i, None)
        else:
            out[i] = z
    return out


def vec_scale(v: Vec, c) -> Vec:
    if c == 0:
        return {}
    out = {}
    for i, x in v.items():
        y = x * c
        if y != 0:
            out[i] = y
    return out


def vec_sub(u: Vec, v: Vec) -> Vec:
    return vec_add(u, v, -1)


def vec_equal(u: Vec, v: Vec) -> bool:
    return not vec_sub(u, v)


def vec_kron(u: Vec, v: Vec, dim_v: int) -> Vec:
    out = {}
    for i, x in u.items():
        for j, y in v.items():
            out[i * dim_v + j] = x * y
    return out


def basis_vector(i: int, one=1) -> Vec:
    return {i: one}


def normalize_vector(v: Vec) -> Vec:
    """Clear denominators and strip content; first nonzero entry made canonical.

    Symbolic entries end up as Laurent polynomials with no common factor and
    the lowest-index entry having lowest exponent 0 and positive lead.  Other
    fields scale the lowest-index entry to 1.
    """
    if not v:
        return {}
    first = v[min(v)]
    if isinstance(first, RatFunc):
        den = None
        for x in v.values():
            d = x.den
            den = d if den is None else den * d.divexact(den.gcd(d))
        nums = {i: (x.num * den.divexact(x.den)) for i, x in v.items()}
        g = None
        for p in nums.values():
            g = p if g is None else g.gcd(p)
        lead = nums[min(nums)]
        sign = -1 if lead.leading_coefficient() < 0 else 1
        shift = lead.shift
        out = {}
        for i, p in nums.items():
            q = p.divexact(g) if g is not None and not g.poly.is_one() else p
            out[i] = RatFunc.from_laurent(q.times_monomial(-shift) * sign)
        return out
    if first == 1:
        return dict(v)
    return vec_scale(v, _div(1, first))


# -- matrices --------------------------------------------------------------
class Mat:
    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: dict | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = {}
        if rows:
            for i, r in rows.items():
                r = {j: x for j, x in r.items() if x != 0}
                if r:
                    self.rows[i] = r

    @classmethod
    def identity(cls, n: int, one=1) -> Mat:
        return cls(n, n, {i: {i: one} for i in range(n)})

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> Mat:
        return cls(nrows, ncols)

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[Any]]) -> Mat:
        nrows = len(data)
        ncols = len(data[0]) if nrows else 0
        return cls(nrows, ncols, {i: {j: x for j, x in enumerate(row)} for i, row in enumerate(data)})

    @classmethod
    def diag(cls, values: Sequence[Any]) -> Mat:
        n = len(values)
        return cls(n, n, {i: {i: x} for i, x in enumerate(values)})

    @classmethod
    def from_columns(cls, columns: Sequence[Vec], nrows: int) -> Mat:
        rows: dict = {}
        for j, col in enumerate(columns):
            for i, x in col.items():
                rows.setdefault(i, {})[j] = x
        return cls(nrows, len(columns), rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows.get(i, {}).get(j, 0)

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows.values())

    def row(self, i: int) -> Vec:
        return dict(self.rows.get(i, {}))

    def columns(self) -> list[Vec]:
        cols: list[Vec] = [{} for _ in range(self.ncols)]
        for i, r in self.rows.items():
            for j, x in r.items():
                cols[j][i] = x
        return cols

    def column(self, j: int) -> Vec:
        return {i: r[j] for i, r in self.rows.items() if j in r}

    @property
    def T(self) -> Mat:
        out: dict = {}
        for i, r in self.rows.items():
            for j, x in r.items():
                out.setdefault(j, {})[i] = x
        return Mat(self.ncols, self.nrows, out)

    def map(self, f: Callable[[Any], Any]) -> Mat:
        return Mat(self.nrows, self.ncols, {i: {j: f(x) for j, x in r.items()} for i, r in self.rows.items()})

    def apply(self, v: Vec) -> Vec:
        """Matrix-vector product ``self @ v``."""
        out: dict = {}
        for i, r in self.rows.items():
            acc = None
            if len(r) <= len(v):
                for j, x in r.items():
                    y = v.get(j)
                    if y is not None:
                        acc = x * y if acc is None else acc + x * y
            else:
                for j, y in v.items():
                    x = r.get(j)
                    if x is not None:
                        acc = x * y if acc is None else acc + x * y
            if acc is not None and acc != 0:
                out[i] = acc
        return out

    def __matmul__(self, other: Mat) -> Mat:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out: dict = {}
        for i, r in self.rows.items():
            acc: dict = {}
            for k, x in r.items():
                rk = other.rows.get(k)
                if not rk:
                    continue
                for j, y in rk.items():
                    z = acc.get(j)
                    acc[j] = x * y if z is None else z + x * y
            out[i] = acc
        return Mat(self.nrows, other.ncols, out)

    def _combine(self, other: Mat, scale) -> Mat:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        out = {i: dict(r) for i, r in self.rows.items()}
        for i, r in other.rows.items():
            tgt = out.setdefault(i, {})
            for j, x in r.items():
                y = tgt.get(j)
                tgt[j] = x * scale if y is None else y + x * scale
        return Mat(self.nrows, self.ncols, out)

    def __add__(self, other: Mat) -> Mat:
        return self._combine(other, 1)

    def __sub__(self, other: Mat) -> Mat:
        return self._combine(other, -1)

    def __neg__(self) -> Mat:
        return self.map(lambda x: -x)

    def scale(self, c) -> Mat:
        return self.map(lambda x: x * c)

    def __mul__(self, c) -> Mat:
        if isinstance(c, Mat):
            raise TypeError("use @ for matrix products")
        return self.scale(c)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and (self - other).is_zero()

    __hash__ = None

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows.values() for x in r.values())

    def is_diagonal(self) -> bool:
        return all(j == i for i, r in self.rows.items() for j in r)

    def diagonal(self) -> list:
        return [self[i, i] for i in range(min(self.shape))]

    def trace(self):
        acc = 0
        for i, r in self.rows.items():
            if i in r:
                acc = r[i] + acc
        return acc

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> Mat:
        cpos = {j: n for n, j in enumerate(col_idx)}
        out = {}
        for m, i in enumerate(row_idx):
            r = self.rows.get(i)
            if r:
                out[m] = {cpos[j]: x for j, x in r.items() if j in cpos}
        return Mat(len(row_idx), len(col_idx), out)

    def to_dense(self, zero=0) -> list[list]:
        return [[self.rows.get(i, {}).get(j, zero) for j in range(self.ncols)] for i in range(self.nrows)]

    def __repr__(self) -> str:
        return f"Mat({self.nrows}x{self.ncols}, nnz={self.nnz()})"


def hstack(blocks: Sequence[Mat]) -> Mat:
    nrows = blocks[0].nrows
    cols: list[Vec] = []
    for b in blocks:
        if b.nrows != nrows:
            raise ValueError("hstack row mismatch")
        cols.extend(b.columns())
    return Mat.from_columns(cols, nrows)


def vstack(blocks: Sequence[Mat]) -> Mat:
    ncols = blocks[0].ncols
    rows: dict = {}
    off = 0
    for b in blocks:
        if b.ncols != ncols:
            raise ValueError("vstack column mismatch")
        for i, r in b.rows.items():
            rows[off + i] = dict(r)
        off += b.nrows
    return Mat(off, ncols, rows)


def kron(A: Mat, B: Mat) -> Mat:
    """Kronecker product, row-major: ``(A (x) B)[i*p + k, j*q + l] = A[i,j] B[k,l]``."""
    p, q = B.shape
    out: dict = {}
    for i, ra in A.rows.items():
        for k, rb in B.rows.items():
            row = {}
            for j, x in ra.items():
                for l, y in rb.items():
                    row[j * q + l] = x * y
            out[i * p + k] = row
    return Mat(A.nrows * p, A.ncols * q, out)


def kron_all(mats: Iterable[Mat]) -> Mat:
    mats = list(mats)
    out = mats[0]
    for m in mats[1:]:
        out = kron(out, m)
    return out


# -- elimination -------------------------------------------------------------
def _rref(rows: list[dict], ncols: int, col_order: Iterable[int] | None = None):
    """In-place Gauss-Jordan over a field; returns the pivot (col -> row) map.

    The pivot in each column is the candidate entry of least polynomial size,
    which keeps symbolic fill-in small.
    """
    pivots: dict[int, int] = {}
    used: set[int] = set()
    for c in col_order if col_order is not None else range(ncols):
        best = None
        best_size = None
        for r, row in enumerate(rows):
            if r in used:
                continue
            x = row.get(c)
            if x is None or x == 0:
                continue
            size = _complexity(x) + len(row)
            if best is None or size < best_size:
                best, best_size = r, size
        if best is None:
            continue
        prow = rows[best]
        inv = _div(1, prow[c])
        prow = {j: x * inv for j, x in prow.items()}
        prow = {j: x for j, x in prow.items() if x != 0}
        rows[best] = prow
        used.add(best)
        pivots[c] = best
        for r, row in enumerate(rows):
            if r == best:
                continue
            f = row.get(c)
            if f is None or f == 0:
                continue
            for j, x in prow.items():
                y = row.get(j)
                z = -f * x if y is None else y - f * x
                if z == 0:
                    row.pop(j, None)
                else:
                    row[j] = z
            row.pop(c, None)
    return pivots


def nullspace(A: Mat, normalize: bool = True) -> list[Vec]:
    """Basis of ``ker A``; every returned ``w`` satisfies ``A w = 0`` (asserted)."""
    rows = [dict(r) for r in A.rows.values()]
    pivots = _rref(rows, A.ncols)
    free = [c for c in range(A.ncols) if c not in pivots]
    basis = []
    for f in free:
        v = {f: 1}
        for c, r in pivots.items():
            x = rows[r].get(f)
            if x is not None and x != 0:
                v[c] = -x
        if normalize:
            v = normalize_vector(_lift_ints(v, rows))
        basis.append(v)
    for v in basis:
        if A.apply(v):
            raise ArithmeticError("nullspace vector is not annihilated; elimination bug")
    return basis


def _lift_ints(v: Vec, rows) -> Vec:
    # Promote bare int 1s to the field type of the surrounding entries.
    sample = next((x for r in rows for x in r.values() if not isinstance(x, (int, Fraction))), None)
    if sample is None:
        return v
    one = sample / sample
    return {i: (x * one if isinstance(x, int) else x) for i, x in v.items()}


def rank(A: Mat) -> int:
    rows = [dict(r) for r in A.rows.values()]
    return len(_rref(rows, A.ncols))


def eigenspace(A: Mat, lam) -> list[Vec]:
    """``ker(A - lam I)``; the eigenvalue is always supplied by the caller."""
    if A.nrows != A.ncols:
        raise ValueError("eigenspace of a non-square matrix")
    return nullspace(A - Mat.identity(A.nrows, lam))


def inverse(A: Mat) -> Mat:
    n = A.nrows
    if A.ncols != n:
        raise ValueError("inverse of a non-square matrix")
    rows = []
    for i in range(n):
        r = dict(A.rows.get(i, {}))
        r[n + i] = 1
        rows.append(r)
    pivots = _rref(rows, 2 * n, col_order=range(n))
    if len(pivots) != n:
        raise SingularMatrixError("matrix is singular")
    out = {}
    for c, r in pivots.items():
        out[c] = {j - n: x for j, x in rows[r].items() if j >= n}
    return Mat(n, n, out)


def partitioned_projection(P: Mat, Q: Mat) -> Mat:
    """Top block ``pi`` of ``(P|Q)^{-1}``; satisfies ``pi P = I`` and ``pi Q = 0``."""
    full = hstack([P, Q])
    if full.nrows != full.ncols:
        raise ValueError(f"(P|Q) is {full.shape}, not square")
    inv = inverse(full)
    k = P.ncols
    pi = Mat(k, full.nrows, {i: r for i, r in inv.rows.items() if i < k})
    if not (pi @ P) == Mat.identity(k) or not (pi @ Q).is_zero():
        raise ArithmeticError("partitioned projection failed its defining identities")
    return pi


def partial_trace_last(A: Mat, n: int) -> Mat:
    """Trace over the last tensor factor of dimension ``n``."""
    if A.nrows != A.ncols or A.nrows % n:
        raise ValueError(f"cannot trace a factor of size {n} out of {A.shape}")
    m = A.nrows // n
    out: dict = {}
    for i, r in A.rows.items():
        v, k = divmod(i, n)
        for j, x in r.items():
            w, l = divmod(j, n)
            if l == k:
                row = out.setdefault(v, {})
                row[w] = x if w not in row else row[w] + x
    return Mat(m, m, out)


def solve_in_span(v: Vec, basis: Sequence[Vec]) -> list:
    """Coefficients ``c`` with ``v = sum c_i basis_i``; the residual must vanish exactly."""
    k = len(basis)
    if k == 0:
        if v:
            raise NotInSpanError("nonzero vector, empty basis")
        return []
    coords = sorted(set().union(*[b.keys() for b in basis]) | set(v.keys()))
    rows = []
    for i in coords:
        r = {j: b[i] for j, b in enumerate(basis) if i in b}
        if i in v:
            r[k] = v[i]
        rows.append(r)
    pivots = _rref(rows, k + 1, col_order=range(k))
    if len(pivots) < k:
        raise ValueError("basis vectors are linearly dependent")
    coeffs = [rows[pivots[j]].get(k, 0) for j in range(k)]
    residual = dict(v)
    for c, b in zip(coeffs, basis):
        if c != 0:
            residual = vec_add(residual, b, -c)
    if residual:
        raise NotInSpanError("vector is not in the span of the basis")
    return coeffs


# -- dump format -------------------------------------------------------------
def _entry_text(x) -> str:
    if isinstance(x, RatFunc):
        return x.to_compact()
    if isinstance(x, LaurentPoly):
        return x.to_compact()
    if isinstance(x, int):
        return LaurentPoly.constant(x).to_compact()
    raise TypeError(f"cannot dump entry of type {type(x).__name__}")


def dump_matrix(A: Mat) -> str:
    """Sparse text form: header ``rows cols`` then ``i j num[/den]`` lines."""
    lines = [f"{A.nrows} {A.ncols}"]
    for i in sorted(A.rows):
        r = A.rows[i]
        for j in sorted(r):
            lines.append(f"{i} {j} {_entry_text(r[j])}")
    return "\n".join(lines) + "\n"


def load_matrix(text: str) -> Mat:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    nrows, ncols = (int(t) for t in lines[0].split())
    rows: dict = {}
    for ln in lines[1:]:
        i, j, e = ln.split()
        rows.setdefault(int(i), {})[int(j)] = RatFunc.from_compact(e)
    return Mat(nrows, ncols, rows)


def content_hash(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()
