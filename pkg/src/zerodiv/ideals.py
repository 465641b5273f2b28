"""Maximal left ideals of algebras with AA = A and dimension <= 3.

Under AA = A a maximal left ideal is a linear subspace. Codimension-1 ones
are kernels of linear factors of the determinant form; for n = 3 the only
other positive-dimensional candidates are lines invariant under every left
multiplication; {0} is maximal exactly when no nonzero proper left ideal
exists.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import Algebra, determinant_form, is_left_ideal, left_mult_matrix, span_of_products
from .errors import DimensionTooLarge, RequiresAAFull, ZeroDivError
from .factor import COMPLETE, FactorReport, linear_factors
from .linalg import Matrix, Subspace, kernel
from .poly import MultiPoly, det_poly_matrix
from .roots import univariate_roots

MAX_IDEAL_DIM = 3


class IdealBoundViolation(ZeroDivError, AssertionError):
    """An enumeration broke one of the counting bounds; always a bug."""


@dataclass
class IdealList:
    ideals: list[Subspace]
    complete: bool
    infinite: bool = False
    bounds_used: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)


def charpoly(M: Matrix) -> list:
    """Coefficients (constant first) of det(t*I - M)."""
    n, tower = M.nrows, M.tower
    t = MultiPoly.var(0, 1, tower)
    rows = [
        [(t if i == j else MultiPoly.zero(1, tower)) - M[i, j] for j in range(n)]
        for i in range(n)
    ]
    return det_poly_matrix(rows).univariate_coeffs()


def _is_scalar(M: Matrix) -> bool:
    d = M[0, 0]
    return all(M[i, j] == (d if i == j else 0) for i in range(M.nrows) for j in range(M.ncols))


def _preimage_within(S: Subspace, op: Matrix) -> Subspace:
    """{v in S : op v in S}."""
    C = S.constraints()
    stacked = Matrix(C.rows + (C @ op).rows, S.tower, S.ambient_dim)
    return kernel(stacked)


def _restriction(S: Subspace, op: Matrix) -> Matrix:
    """Matrix of op on an op-invariant S, in the RREF basis of S."""
    pivots = S._pivots
    cols = [[op.apply(b)[p] for p in pivots] for b in S.basis]
    return Matrix.from_columns(cols, S.tower, S.dim)


def common_invariant_lines(S: Subspace, ops: list[Matrix]) -> tuple[list[Subspace], list[Subspace], bool]:
    """Lines in S invariant under every op.

    Returns (lines, families, complete); a family is a subspace of dimension
    >= 2 on which every op acts as a scalar, so all its lines are invariant.
    """
    if S.dim == 0:
        return [], [], True
    if S.dim == 1:
        ok = all(S.contains(op.apply(S.basis[0])) for op in ops)
        return ([S] if ok else []), [], True
    for op in ops:
        if not all(S.contains(op.apply(b)) for b in S.basis):
            return common_invariant_lines(_preimage_within(S, op), ops)
        M = _restriction(S, op)
        if _is_scalar(M):
            continue
        report = univariate_roots(charpoly(M))
        lines, families, complete = [], [], report.complete
        ident = Matrix.identity(M.nrows, S.tower)
        for mu in report.distinct():
            eig = kernel(M - ident.scale(mu))
            ambient = Subspace.span(
                [_combine(S, c) for c in eig.basis], S.ambient_dim, S.tower
            )
            sub_lines, sub_families, ok = common_invariant_lines(ambient, ops)
            lines += sub_lines
            families += sub_families
            complete = complete and ok
        return lines, families, complete
    return [], [S], True


def _combine(S: Subspace, coeffs) -> tuple:
    out = [S.tower.zero] * S.ambient_dim
    for c, b in zip(coeffs, S.basis):
        if c:
            out = [o + c * x for o, x in zip(out, b)]
    return tuple(out)


def maximal_left_ideals(
    A: Algebra, form: MultiPoly | None = None, factors: FactorReport | None = None
) -> IdealList:
    n = A.n
    if n > MAX_IDEAL_DIM:
        raise DimensionTooLarge(f"ideal enumeration supports n <= {MAX_IDEAL_DIM}, got {n}")
    if not span_of_products(A).is_full():
        raise RequiresAAFull("maximal-ideal enumeration needs AA = A")
    D = determinant_form(A) if form is None else form
    if D.is_zero():
        return IdealList(
            [], complete=False, infinite=True,
            notes=["D == 0 with AA = A: Z = A is not proper tame, so there are infinitely many maximal left ideals"],
        )
    fr = linear_factors(D) if factors is None else factors
    complete = fr.complete == COMPLETE
    notes = []
    bounds = ["codimension-1 maximal ideals are kernels of linear factors of D"]
    codim1 = [f.kernel() for f, _ in fr.linear_factors]
    codim1 = [W for W in codim1 if is_left_ideal(A, W)]

    raw_lines: list[Subspace] = []
    families: list[Subspace] = []
    if n == 3:
        ops = [left_mult_matrix(A, A.basis_vector(i)) for i in range(n)]
        raw_lines, families, ok = common_invariant_lines(Subspace.full(n, A.tower), ops)
        complete = complete and ok
        raw_lines = list(dict.fromkeys(L for L in raw_lines if is_left_ideal(A, L)))
        for fam in families:
            if not any(fam <= W for W in codim1):
                complete = False
                notes.append(f"unresolved family of invariant lines {fam}")
        bounds.append("lines: common eigenlines of all left multiplications")
    lines = [L for L in raw_lines if not any(L <= W for W in codim1)]

    ideals = codim1 + lines
    if not codim1 and not raw_lines and not families:
        ideals = [Subspace.zero(n, A.tower)]
        notes.append("no nonzero proper left ideal: {0} is the unique maximal left ideal")
    result = IdealList(ideals, complete, bounds_used=bounds, notes=notes)
    if complete:
        check_ideal_bounds(A, result)
    return result


def check_ideal_bounds(A: Algebra, result: IdealList) -> None:
    n = A.n
    ideals = result.ideals
    codim1 = sum(1 for W in ideals if W.codim == 1)
    small = sum(1 for W in ideals if 2 * W.dim < n)
    if codim1 > n:
        raise IdealBoundViolation(f"{codim1} codimension-1 maximal ideals exceed n = {n}")
    if small > 1:
        raise IdealBoundViolation(f"{small} maximal ideals of dimension < n/2")
    if any(W.dim == 1 for W in ideals) and len(ideals) > n + 1:
        raise IdealBoundViolation(f"{len(ideals)} maximal ideals alongside a line exceed n + 1")
    result.bounds_used += [
        f"at most n = {n} of codimension 1 (found {codim1})",
        f"at most one of dimension < n/2 (found {small})",
        "a 1-dimensional maximal ideal caps the total at n + 1",
    ]
