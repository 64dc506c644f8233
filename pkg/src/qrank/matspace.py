"""Matrices over F_q: RREF, rank, kernel, column space, trace product.

Matrices are immutable values; every operation returns a new value, so
they can be shared freely across enumeration workers.
"""

from __future__ import annotations

from .errors import ShapeMismatch
from .gf import FieldContext


def rref_rows(rows, width: int, field: FieldContext):
    """Reduced row echelon form of a list of row tuples.

    Returns (rows, pivots): rows with zero rows dropped, pivots strictly
    increasing.  Leftmost pivot, scale to unit, eliminate above and below.
    """
    work = [list(r) for r in rows]
    pivots = []
    r = 0
    for col in range(width):
        pivot_row = None
        for i in range(r, len(work)):
            if work[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = field.inv(work[r][col])
        if inv != 1:
            work[r] = [field.mul(inv, v) for v in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col] != 0:
                f = work[i][col]
                work[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return [tuple(row) for row in work[:r]], pivots


def kernel_basis(rows, width: int, field: FieldContext):
    """Canonical (RREF) basis of {x : Mx = 0} for M given as row tuples."""
    red, pivots = rref_rows(rows, width, field)
    free = [j for j in range(width) if j not in pivots]
    basis = []
    for f in free:
        vec = [0] * width
        vec[f] = 1
        for i, p in enumerate(pivots):
            vec[p] = field.neg(red[i][f])
        basis.append(tuple(vec))
    canon, _ = rref_rows(basis, width, field)
    return canon


class MatrixFq:
    """Immutable n x m matrix over F_q, entries row-major packed ints."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: FieldContext, rows: int, cols: int, entries):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ShapeMismatch(f"expected {rows * cols} entries, got {len(entries)}")
        if any(not 0 <= v < field.q for v in entries):
            raise ValueError("entry out of field range")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, field, row_lists):
        rows = len(row_lists)
        cols = len(row_lists[0]) if rows else 0
        flat = []
        for r in row_lists:
            if len(r) != cols:
                raise ShapeMismatch("ragged rows")
            flat.extend(r)
        return cls(field, rows, cols, flat)

    @classmethod
    def zeros(cls, field, rows, cols):
        return cls(field, rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, field, n):
        return cls(field, n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def unit(cls, field, rows, cols, i, j):
        return cls(
            field, rows, cols, tuple(1 if (a, b) == (i, j) else 0 for a in range(rows) for b in range(cols))
        )

    def row(self, i):
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j):
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def row_tuples(self):
        return tuple(self.row(i) for i in range(self.rows))

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self):
        return MatrixFq(
            self.field,
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __add__(self, other):
        self._check_shape(other)
        add = self.field.add
        return MatrixFq(
            self.field, self.rows, self.cols, tuple(add(a, b) for a, b in zip(self.entries, other.entries))
        )

    def __neg__(self):
        neg = self.field.neg
        return MatrixFq(self.field, self.rows, self.cols, tuple(neg(a) for a in self.entries))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: int):
        mul = self.field.mul
        return MatrixFq(self.field, self.rows, self.cols, tuple(mul(c, a) for a in self.entries))

    def is_zero(self):
        return all(v == 0 for v in self.entries)

    def _check_shape(self, other):
        if (
            not isinstance(other, MatrixFq)
            or other.field != self.field
            or other.rows != self.rows
            or other.cols != self.cols
        ):
            raise ShapeMismatch("matrices must share shape and field")

    def __eq__(self, other):
        return (
            isinstance(other, MatrixFq)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.field.key, self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"MatrixFq({self.to_rows()} over F_{self.field.q})"


def rref_decompose(M: MatrixFq):
    """Unique RREF of M: returns (R, rank, pivots)."""
    red, pivots = rref_rows(M.row_tuples(), M.cols, M.field)
    flat = []
    for r in red:
        flat.extend(r)
    flat.extend([0] * (M.cols * (M.rows - len(red))))
    R = MatrixFq(M.field, M.rows, M.cols, flat)
    return R, len(pivots), pivots


def rank(M: MatrixFq) -> int:
    _, rk, _ = rref_decompose(M)
    return rk


def kernel(M: MatrixFq):
    """Canonical basis vectors of the right kernel {x : Mx = 0}."""
    return kernel_basis(M.row_tuples(), M.cols, M.field)


def column_space(M: MatrixFq):
    """The subspace of F_q^n spanned by the columns of M."""
    from .subspaces import Subspace

    return Subspace.span([M.col(j) for j in range(M.cols)], M.rows, M.field)


def trace_product(M: MatrixFq, N: MatrixFq) -> int:
    """Tr(M N^T) = sum of entrywise products; symmetric and bilinear."""
    M._check_shape(N)
    field = M.field
    acc = 0
    for a, b in zip(M.entries, N.entries):
        if a and b:
            acc = field.add(acc, field.mul(a, b))
    return acc
