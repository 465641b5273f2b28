"""Finite-dimensional algebras given by structure constants.

``A.table[i][j]`` holds the coordinates of the product b_i b_j, so the
structure constant c_{ij}^k is ``A.table[i][j][k]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import DimensionMismatch, ShapeMismatch
from .field import FieldElement, FieldTower
from .linalg import Matrix, Subspace, inverse, rank, solve
from .poly import MultiPoly, det_poly_matrix

Vector = tuple


@dataclass(frozen=True, eq=False)
class Algebra:
    n: int
    tower: FieldTower
    table: tuple  # table[i][j] = coordinates of b_i * b_j
    name: str = "algebra"
    basis_names: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.basis_names:
            object.__setattr__(self, "basis_names", tuple(f"e{i + 1}" for i in range(self.n)))

    def constant(self, i: int, j: int, k: int) -> FieldElement:
        return self.table[i][j][k]

    def basis_vector(self, i: int) -> Vector:
        return tuple(self.tower(int(i == j)) for j in range(self.n))

    def vector(self, values: Sequence) -> Vector:
        if len(values) != self.n:
            raise DimensionMismatch(f"vector of length {len(values)} in a {self.n}-dim algebra")
        return tuple(self.tower(v) for v in values)

    def same_structure(self, other: Algebra) -> bool:
        return self.n == other.n and self.tower == other.tower and self.table == other.table

    def __repr__(self) -> str:
        return f"Algebra({self.name!r}, n={self.n}, over {self.tower})"


def make_algebra(
    n: int,
    tower: FieldTower,
    constants: Sequence,
    name: str = "algebra",
    basis_names: Sequence[str] = (),
) -> Algebra:
    """Build an algebra from ``constants[i][j][k] = c_{ij}^k``."""
    if n < 1:
        raise ShapeMismatch("dimension must be at least 1")
    if len(constants) != n or any(len(row) != n for row in constants):
        raise ShapeMismatch(f"structure constants must have shape {n}x{n}x{n}")
    table = []
    for row in constants:
        trow = []
        for entry in row:
            if len(entry) != n:
                raise ShapeMismatch(f"structure constants must have shape {n}x{n}x{n}")
            trow.append(tuple(tower(x) for x in entry))
        table.append(tuple(trow))
    if basis_names and len(basis_names) != n:
        raise ShapeMismatch(f"{len(basis_names)} basis names for dimension {n}")
    return Algebra(n, tower, tuple(table), name, tuple(basis_names))


def product(A: Algebra, x: Sequence, y: Sequence) -> Vector:
    x, y = A.vector(x), A.vector(y)
    out = [A.tower.zero] * A.n
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j, yj in enumerate(y):
            if not yj:
                continue
            c = xi * yj
            for k, ck in enumerate(A.table[i][j]):
                if ck:
                    out[k] = out[k] + c * ck
    return tuple(out)


def right_mult_matrix(A: Algebra, x: Sequence) -> Matrix:
    """Matrix of y -> y*x; column j is b_j * x."""
    x = A.vector(x)
    cols = [product(A, A.basis_vector(j), x) for j in range(A.n)]
    return Matrix.from_columns(cols, A.tower, A.n)


def left_mult_matrix(A: Algebra, x: Sequence) -> Matrix:
    """Matrix of y -> x*y; column j is x * b_j."""
    x = A.vector(x)
    cols = [product(A, x, A.basis_vector(j)) for j in range(A.n)]
    return Matrix.from_columns(cols, A.tower, A.n)


def determinant_form(A: Algebra) -> MultiPoly:
    """det R(x) as a form in the coordinates of x; entry (k, j) is sum_i c_{ji}^k x_i."""
    n, tower = A.n, A.tower
    xs = MultiPoly.variables(n, tower)
    M = []
    for k in range(n):
        row = []
        for j in range(n):
            entry = MultiPoly.zero(n, tower)
            for i in range(n):
                c = A.table[j][i][k]
                if c:
                    entry = entry + xs[i].scale(c)
            row.append(entry)
        M.append(row)
    return det_poly_matrix(M)


def is_right_zero_divisor(A: Algebra, x: Sequence) -> bool:
    """x is a right zero divisor iff R(x) is singular (0 counts)."""
    return rank(right_mult_matrix(A, x)) < A.n


def span_of_products(A: Algebra) -> Subspace:
    """The span of all b_i b_j (equal to A exactly when AA = A)."""
    vecs = [A.table[i][j] for i in range(A.n) for j in range(A.n)]
    return Subspace.span(vecs, A.n, A.tower)


def left_ideal_closure(A: Algebra, W: Subspace) -> Subspace:
    """Smallest subspace containing W and closed under left multiplication."""
    Ls = [left_mult_matrix(A, A.basis_vector(i)) for i in range(A.n)]
    current = W
    while True:
        vecs = list(current.basis)
        for L in Ls:
            vecs.extend(L.apply(b) for b in current.basis)
        nxt = Subspace.span(vecs, A.n, A.tower)
        if nxt == current:
            return current
        current = nxt


def is_left_ideal(A: Algebra, W: Subspace) -> bool:
    for i in range(A.n):
        for w in W.basis:
            if not W.contains(product(A, A.basis_vector(i), w)):
                return False
    return True


@dataclass
class AxiomReport:
    associative: bool
    commutative: bool
    identity: Vector | None
    aa_dim: int
    aa_full: bool
    associativity_witness: tuple[int, int, int] | None = None
    commutativity_witness: tuple[int, int] | None = None
    notes: list[str] = field(default_factory=list)


def check_axioms(A: Algebra) -> AxiomReport:
    n = A.n
    basis = [A.basis_vector(i) for i in range(n)]
    assoc_witness = None
    for i in range(n):
        for j in range(n):
            bij = A.table[i][j]
            for k in range(n):
                if product(A, bij, basis[k]) != product(A, basis[i], A.table[j][k]):
                    assoc_witness = (i, j, k)
                    break
            if assoc_witness:
                break
        if assoc_witness:
            break
    comm_witness = next(
        ((i, j) for i in range(n) for j in range(i + 1, n) if A.table[i][j] != A.table[j][i]),
        None,
    )
    # e*b_i = b_i and b_i*e = b_i, linear in e
    rows, rhs = [], []
    for i in range(n):
        for k in range(n):
            rows.append([A.table[m][i][k] for m in range(n)])
            rhs.append(A.tower(int(i == k)))
            rows.append([A.table[i][m][k] for m in range(n)])
            rhs.append(A.tower(int(i == k)))
    identity = solve(Matrix(rows, A.tower, n), rhs)
    aa = span_of_products(A)
    notes = []
    products_given = sum(1 for i in range(n) for j in range(n) if any(A.table[i][j]))
    if products_given < n * n:
        notes.append(f"{n * n - products_given} of {n * n} basis products are zero")
    return AxiomReport(
        associative=assoc_witness is None,
        commutative=comm_witness is None,
        identity=identity,
        aa_dim=aa.dim,
        aa_full=aa.is_full(),
        associativity_witness=assoc_witness,
        commutativity_witness=comm_witness,
        notes=notes,
    )


def change_basis(A: Algebra, P: Matrix, name: str | None = None) -> Algebra:
    """Re-express A in the basis whose j-th vector is column j of P."""
    Pinv = inverse(P)
    cols = [P.column(j) for j in range(A.n)]
    table = [[Pinv.apply(product(A, cols[i], cols[j])) for j in range(A.n)] for i in range(A.n)]
    return make_algebra(A.n, A.tower, table, name or f"{A.name}_rebased")


def opposite(A: Algebra) -> Algebra:
    """The opposite algebra x.y = yx, which swaps left and right."""
    table = [[A.table[j][i] for j in range(A.n)] for i in range(A.n)]
    return make_algebra(A.n, A.tower, table, f"{A.name}_op", A.basis_names)


def direct_sum(A: Algebra, B: Algebra, name: str | None = None) -> Algebra:
    if A.tower != B.tower:
        A_tower = A.tower if B.tower.is_subtower_of(A.tower) else B.tower
    else:
        A_tower = A.tower
    n = A.n + B.n
    zero = (A_tower.zero,) * n
    table = [[zero] * n for _ in range(n)]
    for i in range(A.n):
        for j in range(A.n):
            table[i][j] = tuple(A.table[i][j]) + (A_tower.zero,) * B.n
    for i in range(B.n):
        for j in range(B.n):
            table[A.n + i][A.n + j] = (A_tower.zero,) * A.n + tuple(B.table[i][j])
    return make_algebra(n, A_tower, table, name or f"{A.name}+{B.name}")
