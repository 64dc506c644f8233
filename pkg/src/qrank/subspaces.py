"""Canonical subspaces of E = F_q^n and the full subspace lattice.

A subspace is represented by the RREF basis of its row space (zero rows
removed), so equality of values is equality of subspaces.  Enumeration
generates RREF matrices directly from pivot-column choices, per
dimension, in a deterministic total order.
"""

from __future__ import annotations

from itertools import combinations, product

from .errors import AmbientMismatch, LengthMismatch
from .gf import FieldContext
from .matspace import kernel_basis, rref_rows


class Subspace:
    __slots__ = ("field", "n", "basis")

    def __init__(self, field: FieldContext, n: int, basis):
        # trusted constructor: basis must already be canonical RREF rows
        self.field = field
        self.n = n
        self.basis = tuple(tuple(r) for r in basis)

    @classmethod
    def span(cls, vectors, n: int, field: FieldContext) -> "Subspace":
        vecs = [tuple(v) for v in vectors]
        for v in vecs:
            if len(v) != n:
                raise LengthMismatch(f"vector of length {len(v)}, ambient dimension {n}")
        rows, _ = rref_rows(vecs, n, field)
        return cls(field, n, rows)

    @classmethod
    def zero(cls, n: int, field: FieldContext) -> "Subspace":
        return cls(field, n, ())

    @classmethod
    def full(cls, n: int, field: FieldContext) -> "Subspace":
        return cls(field, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _check_ambient(self, other: "Subspace"):
        if self.n != other.n or self.field != other.field:
            raise AmbientMismatch("subspaces live in different ambient spaces")

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        return Subspace.span(self.basis + other.basis, self.n, self.field)

    def intersect(self, other: "Subspace") -> "Subspace":
        # (A^perp + B^perp)^perp, reusing the two primitives already needed
        self._check_ambient(other)
        return self.perp().sum(other.perp()).perp()

    def contains(self, other: "Subspace") -> bool:
        """True iff other is a subspace of self."""
        self._check_ambient(other)
        for v in other.basis:
            if not self._member(v):
                return False
        return True

    def _member(self, vec) -> bool:
        field = self.field
        v = list(vec)
        for row in self.basis:
            pivot = next(j for j, c in enumerate(row) if c != 0)
            c = v[pivot]
            if c:
                v = [field.sub(a, field.mul(c, b)) for a, b in zip(v, row)]
        return all(x == 0 for x in v)

    def perp(self) -> "Subspace":
        """Orthogonal complement under the standard inner product."""
        if self.dim == 0:
            return Subspace.full(self.n, self.field)
        return Subspace(self.field, self.n, kernel_basis(self.basis, self.n, self.field))

    def canonical_key(self) -> str:
        return ";".join(",".join(str(v) for v in row) for row in self.basis)

    @classmethod
    def from_key(cls, text: str, n: int, field: FieldContext) -> "Subspace":
        if not text:
            return cls.zero(n, field)
        rows = [[int(v) for v in part.split(",")] for part in text.split(";")]
        return cls.span(rows, n, field)

    def sort_key(self):
        return (self.dim, self.basis)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.n == other.n
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.field.key, self.n, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, n={self.n}, q={self.field.q}, [{self.canonical_key()}])"


def lattice_ops(A: Subspace, B: Subspace, op: str):
    """Dispatch helper: op in {sum, intersect, contains}."""
    if op == "sum":
        return A.sum(B)
    if op == "intersect":
        return A.intersect(B)
    if op == "contains":
        return A.contains(B)
    raise ValueError(f"unknown op {op!r}")


def orthogonal_complement(A: Subspace) -> Subspace:
    return A.perp()


def _rref_bases_of_dim(n: int, d: int, field: FieldContext):
    # every RREF matrix with d pivot rows, directly from pivot choices
    if d == 0:
        yield ()
        return
    values = list(field.elements())
    for pivots in combinations(range(n), d):
        pivot_set = set(pivots)
        free = [
            (i, j)
            for i in range(d)
            for j in range(n)
            if j > pivots[i] and j not in pivot_set
        ]
        for assignment in product(values, repeat=len(free)):
            rows = [[0] * n for _ in range(d)]
            for i in range(d):
                rows[i][pivots[i]] = 1
            for (i, j), v in zip(free, assignment):
                rows[i][j] = v
            yield tuple(tuple(r) for r in rows)


def enumerate_subspaces(n: int, field: FieldContext, dim_filter: int | None = None):
    """All subspaces of F_q^n, by dimension then lexicographic basis order."""
    dims = range(n + 1) if dim_filter is None else [dim_filter]
    for d in dims:
        if not 0 <= d <= n:
            continue
        for basis in sorted(_rref_bases_of_dim(n, d, field)):
            yield Subspace(field, n, basis)


class SubspaceLattice:
    """The full lattice of subspaces of F_q^n with precomputed structure.

    Intended for the small ambient dimensions the identity checks sweep
    over; meet/join index tables are built lazily on first use.
    """

    def __init__(self, n: int, field: FieldContext):
        self.n = n
        self.field = field
        self.subspaces = list(enumerate_subspaces(n, field))
        self.index = {S.basis: i for i, S in enumerate(self.subspaces)}
        self.dims = [S.dim for S in self.subspaces]
        self.perp = [self.index[S.perp().basis] for S in self.subspaces]
        self.full_index = self.index[Subspace.full(n, field).basis]
        self.zero_index = 0
        self._below = None
        self._join = None
        self._meet = None

    def __len__(self):
        return len(self.subspaces)

    def index_of(self, S: Subspace) -> int:
        return self.index[S.basis]

    @property
    def below(self):
        """below[i] = tuple of indices j with S_j a subspace of S_i."""
        if self._below is None:
            self._below = [
                tuple(j for j, T in enumerate(self.subspaces) if S.contains(T))
                for S in self.subspaces
            ]
        return self._below

    def _build_meet_join(self):
        n = len(self.subspaces)
        join = [[0] * n for _ in range(n)]
        meet = [[0] * n for _ in range(n)]
        for i, A in enumerate(self.subspaces):
            for j in range(i, n):
                B = self.subspaces[j]
                s = self.index[A.sum(B).basis]
                m = self.index[A.intersect(B).basis]
                join[i][j] = join[j][i] = s
                meet[i][j] = meet[j][i] = m
        self._join, self._meet = join, meet

    @property
    def join(self):
        if self._join is None:
            self._build_meet_join()
        return self._join

    @property
    def meet(self):
        if self._meet is None:
            self._build_meet_join()
        return self._meet


_LATTICE_CACHE: dict = {}


def lattice(n: int, field: FieldContext) -> SubspaceLattice:
    key = (field.key, n)
    if key not in _LATTICE_CACHE:
        _LATTICE_CACHE[key] = SubspaceLattice(n, field)
    return _LATTICE_CACHE[key]
