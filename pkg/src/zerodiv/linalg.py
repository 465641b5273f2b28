"""Exact linear algebra over a FieldTower.

Vectors are plain tuples of FieldElements. Subspaces are kept in canonical
reduced-row-echelon form so that equality is syntactic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NonSquare, NonSymmetric, SingularMatrix
from .field import QQ, FieldElement, FieldTower

Vector = tuple  # tuple[FieldElement, ...]


def _tower_of(rows: Sequence[Sequence]) -> FieldTower:
    for row in rows:
        for x in row:
            if isinstance(x, FieldElement):
                return x.tower
    return QQ


def vec(values: Iterable, tower: FieldTower) -> Vector:
    return tuple(tower(v) for v in values)


def dot(u: Sequence[FieldElement], v: Sequence[FieldElement]) -> FieldElement:
    total = u[0] * v[0]
    for a, b in zip(u[1:], v[1:]):
        if a and b:
            total = total + a * b
    return total


class Matrix:
    """Immutable dense matrix with entries in one tower."""

    __slots__ = ("tower", "nrows", "ncols", "rows")

    def __init__(self, rows: Sequence[Sequence], tower: FieldTower | None = None, ncols: int | None = None):
        tower = tower or _tower_of(rows)
        self.tower = tower
        self.rows = tuple(tuple(tower(x) for x in row) for row in rows)
        self.nrows = len(self.rows)
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        self.ncols = ncols
        if any(len(r) != ncols for r in self.rows):
            raise DimensionMismatch("ragged matrix rows")

    @classmethod
    def identity(cls, n: int, tower: FieldTower = QQ) -> Matrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], tower, n)

    @classmethod
    def zeros(cls, m: int, n: int, tower: FieldTower = QQ) -> Matrix:
        return cls([[0] * n for _ in range(m)], tower, n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], tower: FieldTower | None = None, nrows: int | None = None) -> Matrix:
        tower = tower or _tower_of(columns)
        if not columns:
            return cls([[] for _ in range(nrows or 0)], tower, 0)
        return cls([list(r) for r in zip(*columns)], tower, len(columns))

    def __getitem__(self, ij: tuple[int, int]) -> FieldElement:
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    @property
    def T(self) -> Matrix:
        return Matrix([self.column(j) for j in range(self.ncols)], self.tower, self.nrows)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self.rows[i][j] == self.rows[j][i] for i in range(self.nrows) for j in range(i)
        )

    def apply(self, v: Sequence[FieldElement]) -> Vector:
        if len(v) != self.ncols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.ncols} columns")
        return tuple(dot(row, v) for row in self.rows) if self.ncols else (self.tower.zero,) * self.nrows

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        cols = [self.apply(other.column(j)) for j in range(other.ncols)]
        return Matrix.from_columns(cols, self.tower, self.nrows)

    def __add__(self, other: Matrix) -> Matrix:
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.tower, self.ncols)

    def __sub__(self, other: Matrix) -> Matrix:
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.tower, self.ncols)

    def scale(self, c) -> Matrix:
        return Matrix([[a * c for a in r] for r in self.rows], self.tower, self.ncols)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Matrix) and self.ncols == other.ncols and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return "Matrix([" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows) + "])"


def _rref_lists(rows: list[list[FieldElement]], ncols: int) -> tuple[list[list[FieldElement]], list[int]]:
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(M: Matrix) -> tuple[Matrix, int]:
    rows, pivots = _rref_lists([list(r) for r in M.rows], M.ncols)
    return Matrix(rows, M.tower, M.ncols), len(pivots)


def rank(M: Matrix) -> int:
    return len(_rref_lists([list(r) for r in M.rows], M.ncols)[1])


def kernel(M: Matrix) -> Subspace:
    rows, pivots = _rref_lists([list(r) for r in M.rows], M.ncols)
    zero, one = M.tower.zero, M.tower.one
    free = [c for c in range(M.ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * M.ncols
        v[f] = one
        for i, p in enumerate(pivots):
            v[p] = -rows[i][f]
        basis.append(v)
    return Subspace.span(basis, M.ncols, M.tower)


def det(M: Matrix) -> FieldElement:
    """Fraction-free (Bareiss) determinant."""
    if not M.is_square():
        raise NonSquare(f"{M.nrows}x{M.ncols} matrix has no determinant")
    n = M.nrows
    tower = M.tower
    if n == 0:
        return tower.one
    a = [list(r) for r in M.rows]
    sign = 1
    prev = tower.one
    for k in range(n - 1):
        if not a[k][k]:
            p = next((i for i in range(k + 1, n) if a[i][k]), None)
            if p is None:
                return tower.zero
            a[k], a[p] = a[p], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
            a[i][k] = tower.zero
        prev = a[k][k]
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


def inverse(M: Matrix) -> Matrix:
    if not M.is_square():
        raise NonSquare("only square matrices are invertible")
    n = M.nrows
    ident = Matrix.identity(n, M.tower)
    aug = [list(M.rows[i]) + list(ident.rows[i]) for i in range(n)]
    rows, pivots = _rref_lists(aug, 2 * n)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return Matrix([r[n:] for r in rows], M.tower, n)


def solve(M: Matrix, b: Sequence[FieldElement]) -> Vector | None:
    """One solution x of M x = b, or None when the system is inconsistent."""
    if len(b) != M.nrows:
        raise DimensionMismatch("right-hand side length mismatch")
    aug = [list(M.rows[i]) + [M.tower(b[i])] for i in range(M.nrows)]
    rows, pivots = _rref_lists(aug, M.ncols + 1)
    if M.ncols in pivots:
        return None
    x = [M.tower.zero] * M.ncols
    for i, p in enumerate(pivots):
        x[p] = rows[i][M.ncols]
    return tuple(x)


class Subspace:
    """Linear subspace of F^n stored by its canonical RREF basis."""

    __slots__ = ("tower", "ambient_dim", "basis", "_pivots")

    def __init__(self, ambient_dim: int, basis: Sequence[Sequence[FieldElement]], tower: FieldTower, pivots=None):
        self.tower = tower
        self.ambient_dim = ambient_dim
        self.basis = tuple(tuple(r) for r in basis)
        if pivots is None:
            pivots = [next(j for j, x in enumerate(r) if x) for r in self.basis]
        self._pivots = tuple(pivots)

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int, tower: FieldTower) -> Subspace:
        rows = [[tower(x) for x in v] for v in vectors]
        for r in rows:
            if len(r) != ambient_dim:
                raise DimensionMismatch(f"vector of length {len(r)} in F^{ambient_dim}")
        rows, pivots = _rref_lists(rows, ambient_dim)
        return cls(ambient_dim, rows[: len(pivots)], tower, pivots)

    @classmethod
    def zero(cls, n: int, tower: FieldTower = QQ) -> Subspace:
        return cls(n, (), tower, ())

    @classmethod
    def full(cls, n: int, tower: FieldTower = QQ) -> Subspace:
        return cls.span(Matrix.identity(n, tower).rows, n, tower)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def codim(self) -> int:
        return self.ambient_dim - self.dim

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def _check(self, other: Subspace) -> None:
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatch(f"F^{self.ambient_dim} vs F^{other.ambient_dim}")

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in F^{self.ambient_dim}")
        v = [self.tower(x) for x in v]
        for row, p in zip(self.basis, self._pivots):
            f = v[p]
            if f:
                v = [a - f * b for a, b in zip(v, row)]
        return not any(v)

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def __le__(self, other: Subspace) -> bool:
        self._check(other)
        return all(other.contains(b) for b in self.basis)

    def __lt__(self, other: Subspace) -> bool:
        return self <= other and self.dim < other.dim

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __add__(self, other: Subspace) -> Subspace:
        return subspace_sum(self, other)

    def __and__(self, other: Subspace) -> Subspace:
        return subspace_intersect(self, other)

    def constraints(self) -> Matrix:
        """Rows spanning the linear forms that vanish on this subspace."""
        if not self.basis:
            return Matrix.identity(self.ambient_dim, self.tower)
        ann = kernel(Matrix(self.basis, self.tower, self.ambient_dim))
        return Matrix(ann.basis, self.tower, self.ambient_dim)

    def image(self, M: Matrix) -> Subspace:
        return Subspace.span([M.apply(b) for b in self.basis], M.nrows, self.tower)

    def random_point(self, rng: random.Random, spread: int = 20) -> Vector:
        """A random combination of the basis with small rational coefficients."""
        point = [self.tower.zero] * self.ambient_dim
        for b in self.basis:
            c = Fraction(rng.randint(-spread, spread), rng.randint(1, spread))
            point = [p + x * c for p, x in zip(point, b)]
        return tuple(point)

    def __repr__(self) -> str:
        rows = ", ".join("(" + ", ".join(str(x) for x in r) + ")" for r in self.basis)
        return f"Subspace(dim={self.dim}, basis=[{rows}])"


def subspace_sum(U: Subspace, V: Subspace) -> Subspace:
    U._check(V)
    return Subspace.span(U.basis + V.basis, U.ambient_dim, U.tower)


def subspace_intersect(U: Subspace, V: Subspace) -> Subspace:
    U._check(V)
    stacked = Matrix(U.constraints().rows + V.constraints().rows, U.tower, U.ambient_dim)
    return kernel(stacked)


def subspace_contains(U: Subspace, x: Sequence) -> bool:
    return U.contains(x)


@dataclass(frozen=True)
class SignatureResult:
    rank: int
    positives: int
    negatives: int
    transform: Matrix
    diagonal: tuple[FieldElement, ...]


def diagonalize_symmetric(Q: Matrix) -> SignatureResult:
    """Congruence diagonalization T^t Q T = diag by completing squares."""
    if not Q.is_symmetric():
        raise NonSymmetric("quadratic-form matrix must be symmetric")
    n = Q.nrows
    a = [list(r) for r in Q.rows]
    t = [list(r) for r in Matrix.identity(n, Q.tower).rows]

    def add_col(src: int, dst: int, f: FieldElement) -> None:
        for i in range(n):
            a[i][dst] = a[i][dst] + f * a[i][src]
        for j in range(n):
            a[dst][j] = a[dst][j] + f * a[src][j]
        for i in range(n):
            t[i][dst] = t[i][dst] + f * t[i][src]

    def swap(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in t:
            row[i], row[j] = row[j], row[i]

    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][i]), None)
        if piv is None:
            pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if a[i][j]), None)
            if pair is None:
                break
            i, j = pair
            add_col(j, i, Q.tower.one)
            piv = i
        if piv != k:
            swap(k, piv)
        p = a[k][k]
        for i in range(k + 1, n):
            if a[i][k]:
                add_col(k, i, -(a[i][k] / p))

    diagonal = tuple(a[i][i] for i in range(n))
    signs = [d.sign() for d in diagonal]
    return SignatureResult(
        rank=sum(1 for s in signs if s),
        positives=signs.count(1),
        negatives=signs.count(-1),
        transform=Matrix(t, Q.tower, n),
        diagonal=diagonal,
    )
