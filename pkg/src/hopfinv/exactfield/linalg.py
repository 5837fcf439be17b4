"""Dense exact linear algebra: Gauss-Jordan, kernels, linear solves and row-reduced subspaces.

Matrices are lists of row lists.  Entries must all belong to one field; plain
ints are accepted and coerced.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .fields import QQ, FieldError, FieldSpec, field_of


def infer_field(rows: Iterable[Sequence], field: FieldSpec | None = None) -> FieldSpec:
    """Single field containing every entry; raises FieldError on a mixture."""
    found = field
    for row in rows:
        for x in row:
            f = field_of(x)
            if f is None:
                continue
            if found is None:
                found = f
            elif found != f:
                raise FieldError(f"mixed-field entries: {found.describe()} and {f.describe()}")
    return found or QQ


def coerce(M: Sequence[Sequence], field: FieldSpec | None = None) -> tuple[list[list], FieldSpec]:
    F = infer_field(M, field)
    return [[F(x) for x in row] for row in M], F


def _rref_inplace(A: list[list], ncols: int) -> list[int]:
    """Pivots are searched in the first ncols columns; row operations span the whole row."""
    pivots = []
    r = 0
    nrows = len(A)
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if A[i][c]:
                piv = i
                break
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        row = A[r]
        inv = 1 / row[c]
        width = len(row)
        if row[c] != 1:
            for j in range(c, width):
                if row[j]:
                    row[j] = row[j] * inv
        nz = [j for j in range(c, width) if row[j]]
        for i in range(nrows):
            if i != r:
                f = A[i][c]
                if f:
                    other = A[i]
                    for j in nz:
                        other[j] = other[j] - f * row[j]
        pivots.append(c)
        r += 1
    return pivots


def mat_rref(M: Sequence[Sequence], field: FieldSpec | None = None, ncols: int | None = None):
    """Reduced row-echelon form and pivot columns (zero rows kept at the bottom)."""
    A, _ = coerce(M, field)
    if ncols is None:
        ncols = len(A[0]) if A else 0
    pivots = _rref_inplace(A, ncols)
    return A, pivots


def rank(M, field: FieldSpec | None = None) -> int:
    return len(mat_rref(M, field)[1])


def mat_kernel(M: Sequence[Sequence], ncols: int | None = None, field: FieldSpec | None = None) -> "Subspace":
    """Right kernel {v : M v = 0} as a Subspace of k^ncols."""
    A, F = coerce(M, field)
    if ncols is None:
        if not A:
            raise ValueError("ncols is required for a matrix with no rows")
        ncols = len(A[0])
    pivots = _rref_inplace(A, ncols)
    pivset = set(pivots)
    vecs = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [F.zero] * ncols
        v[f] = F.one
        for r, p in enumerate(pivots):
            if A[r][f]:
                v[p] = -A[r][f]
        vecs.append(v)
    return Subspace.span(vecs, ncols, F)


def solve_linear(M: Sequence[Sequence], b: Sequence, field: FieldSpec | None = None, ncols: int | None = None):
    """Solve M x = b.

    Returns ``None`` if inconsistent, else ``(x0, kernel)`` where x0 is the
    particular solution with all free variables set to zero.
    """
    A, F = coerce(M, infer_field([b], field))
    if len(A) != len(b):
        raise ValueError("right-hand side length does not match row count")
    if ncols is None:
        if not A:
            raise ValueError("ncols is required for a matrix with no rows")
        ncols = len(A[0])
    aug = [row + [F(bi)] for row, bi in zip(A, b)]
    pivots = _rref_inplace(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x0 = [F.zero] * ncols
    for r, p in enumerate(pivots):
        x0[p] = aug[r][ncols]
    kernel = mat_kernel([row[:ncols] for row in aug[: len(pivots)]], ncols, F)
    return x0, kernel


def mat_mul(A, B):
    nb = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [0] * nb
        for k, a in enumerate(row):
            if a:
                for j, b in enumerate(B[k]):
                    if b:
                        acc[j] = acc[j] + a * b
        out.append(acc)
    return out


def mat_vec(A, v):
    out = []
    for row in A:
        acc = 0
        for a, x in zip(row, v):
            if a and x:
                acc = acc + a * x
        out.append(acc)
    return out


def transpose(A, ncols: int | None = None):
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*A)]


def identity(n: int, field: FieldSpec = QQ):
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def mat_inverse(M, field: FieldSpec | None = None):
    A, F = coerce(M, field)
    n = len(A)
    aug = [row + [F.one if i == j else F.zero for j in range(n)] for i, row in enumerate(A)]
    pivots = _rref_inplace(aug, n)
    if pivots != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in aug]


@dataclass(frozen=True)
class Subspace:
    """Linear subspace of k^ambient stored by its reduced row-echelon basis."""

    ambient: int
    basis: tuple[tuple, ...]
    pivots: tuple[int, ...]
    field: FieldSpec = QQ

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient: int, field: FieldSpec | None = None) -> "Subspace":
        vecs = [list(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient:
                raise ValueError(f"vector of length {len(v)} in ambient dimension {ambient}")
        A, F = coerce(vecs, field)
        pivots = _rref_inplace(A, ambient)
        return cls(ambient, tuple(tuple(r) for r in A[: len(pivots)]), tuple(pivots), F)

    @classmethod
    def zero(cls, ambient: int, field: FieldSpec = QQ) -> "Subspace":
        return cls(ambient, (), (), field)

    @classmethod
    def full(cls, ambient: int, field: FieldSpec = QQ) -> "Subspace":
        return cls(ambient, tuple(map(tuple, identity(ambient, field))), tuple(range(ambient)), field)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return self.dim

    def reduce(self, v: Sequence) -> list:
        """Canonical representative of v modulo this subspace (zero at every pivot)."""
        w = [self.field(x) for x in v]
        for row, p in zip(self.basis, self.pivots):
            c = w[p]
            if c:
                for j in range(p, self.ambient):
                    if row[j]:
                        w[j] = w[j] - c * row[j]
        return w

    def coordinates(self, v: Sequence) -> list | None:
        """Coefficients of v in the stored basis, or None if v is not in the span."""
        coords = [self.field(v[p]) for p in self.pivots]
        if any(self.reduce(v)):
            return None
        return coords

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    __contains__ = contains

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def __le__(self, other: "Subspace") -> bool:
        return other.contains_space(self)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.pivots == other.pivots and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace.span(list(self.basis) + list(other.basis), self.ambient, self.field)

    def annihilator(self) -> "Subspace":
        """Functionals (in dual-basis coordinates) vanishing on this subspace."""
        return mat_kernel([list(r) for r in self.basis], self.ambient, self.field)

    def intersect(self, other: "Subspace") -> "Subspace":
        ann = Subspace.span(list(self.annihilator().basis) + list(other.annihilator().basis), self.ambient, self.field)
        return ann.annihilator()

    def complement_indices(self) -> list[int]:
        piv = set(self.pivots)
        return [i for i in range(self.ambient) if i not in piv]

    def vectors(self) -> list[list]:
        return [list(r) for r in self.basis]

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient}, field={self.field.describe()})"
