"""Linear factors of homogeneous forms and the splitting of quadratic forms."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .errors import DegreeTooHigh, NotHomogeneous, PreconditionError, WrongDegree
from .field import FieldElement
from .linalg import Matrix, Subspace, diagonalize_symmetric, inverse, kernel
from .poly import LinearForm, MultiPoly, divide_linear, divides_linear, square_root_up_to_scalar
from .roots import univariate_roots

COMPLETE = "complete_over_tower"
BEST_EFFORT = "best_effort"

SPLITS_OVER_TOWER = "splits_over_tower"
SPLITS_OVER_CLOSURE_ONLY = "splits_over_closure_only"
SPLITS_OVER_CLOSURE = "splits_over_closure"
IRREDUCIBLE_OVER_CLOSURE = "irreducible_over_closure"


@dataclass
class FactorReport:
    """input = content * prod(form**mult) * residual, exactly."""

    content: FieldElement
    linear_factors: list[tuple[LinearForm, int]]
    residual: MultiPoly
    complete: str = COMPLETE

    def expand(self) -> MultiPoly:
        total = self.residual.scale(self.content)
        for form, mult in self.linear_factors:
            total = total * form.to_poly() ** mult
        return total

    @property
    def fully_split(self) -> bool:
        return self.residual.degree == 0


def nonvanishing_point(p: MultiPoly) -> tuple[FieldElement, ...]:
    """A small integer point where the nonzero polynomial p does not vanish."""
    n = p.nvars
    tower = p.tower
    for bound in range(1, p.degree + 2):
        for pt in itertools.product(range(bound + 1), repeat=n):
            if max(pt) == bound or bound == 1:
                v = tuple(tower(x) for x in pt)
                if any(pt) and p.evaluate(v):
                    return v
    # a nonzero polynomial of degree d cannot vanish on the grid {0..d}^n
    raise PreconditionError(f"{p} vanishes on the whole test grid")


def linear_factors(p: MultiPoly, max_degree: int = 4) -> FactorReport:
    """Greedily extract every linear factor of p with coefficients in the tower.

    With a point v where p(v) != 0, each linear factor f can be scaled so
    f(v) = 1; then f(e_j) is minus a root of t -> p(e_j + t*v), a univariate
    of full degree because its leading coefficient is p(v). Candidate forms
    assembled from those roots are confirmed by exact hyperplane restriction
    and divided out.
    """
    if p.is_zero():
        raise PreconditionError("cannot factor the zero polynomial")
    if not p.is_homogeneous():
        raise NotHomogeneous(f"{p} is not homogeneous")
    if p.degree > max_degree:
        raise DegreeTooHigh(f"degree {p.degree} exceeds {max_degree}")
    n, tower = p.nvars, p.tower
    content = p.leading_term()[1]
    work = p / content
    complete = COMPLETE
    found: dict[LinearForm, int] = {}
    if work.degree >= 1:
        v = nonvanishing_point(work)
        units = [tuple(tower(int(i == j)) for j in range(n)) for i in range(n)]
        while work.degree >= 1:
            choices = []
            for e in units:
                report = univariate_roots(work.along_line(e, v))
                if not report.complete:
                    complete = BEST_EFFORT
                choices.append([-r for r in report.distinct()])
            factor = None
            for combo in itertools.product(*choices):
                if sum((b * x for b, x in zip(combo, v)), tower.zero) != 1:
                    continue
                f = LinearForm(combo)
                if divides_linear(f, work):
                    factor = f
                    break
            if factor is None:
                break
            quotient, remainder = divide_linear(work, factor)
            assert remainder.is_zero()
            work = quotient
            found[factor] = found.get(factor, 0) + 1
    factors = sorted(found.items(), key=lambda kv: kv[0].sort_key())
    return FactorReport(content, factors, work, complete)


@dataclass
class QuadraticSplit:
    """Classification of a quadratic form q via its Gram-matrix signature.

    ``real_components``: subspaces (over the tower) whose union is the real
    zero set of q, or None when that set is a cone or needs coefficients
    outside the tower. ``tower_components``: the same for points with
    coordinates in the tower, or None when undecided (indefinite, rank >= 3).
    """

    kind: str
    rank: int
    positives: int
    negatives: int
    definite: bool
    gram_kernel: Subspace
    forms: tuple[LinearForm, ...] | None = None
    scale: FieldElement | None = None
    real_components: list[Subspace] | None = None
    tower_components: list[Subspace] | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def splits_over_closure(self) -> bool:
        return self.rank <= 2

    @property
    def signature(self) -> tuple[int, int]:
        return (self.positives, self.negatives)


def gram_matrix(q: MultiPoly) -> Matrix:
    n, tower = q.nvars, q.tower
    rows = [[tower.zero] * n for _ in range(n)]
    for exp, c in q.terms.items():
        idx = [i for i, k in enumerate(exp) for _ in range(k)]
        i, j = idx
        if i == j:
            rows[i][i] = c
        else:
            rows[i][j] = rows[j][i] = c / 2
    return Matrix(rows, tower, n)


def quadratic_split(q: MultiPoly) -> QuadraticSplit:
    if not q.is_homogeneous():
        raise NotHomogeneous(f"{q} is not homogeneous")
    if q.degree != 2:
        raise WrongDegree(f"expected a quadratic form, got degree {q.degree}")
    G = gram_matrix(q)
    sig = diagonalize_symmetric(G)
    ker = kernel(G)
    definite = sig.rank > 0 and (sig.positives == sig.rank or sig.negatives == sig.rank)
    base = dict(
        rank=sig.rank, positives=sig.positives, negatives=sig.negatives,
        definite=definite, gram_kernel=ker,
    )
    if sig.rank >= 3:
        comps = [ker] if definite else None
        note = "definite: zero set is the Gram kernel" if definite else "indefinite: zero set is a cone"
        return QuadraticSplit(IRREDUCIBLE_OVER_CLOSURE, **base, real_components=comps,
                              tower_components=comps, notes=[note])
    tinv = inverse(sig.transform)
    idx = [i for i, d in enumerate(sig.diagonal) if d]
    ys = [tinv.rows[i] for i in idx]
    if sig.rank == 1:
        f = LinearForm(ys[0])
        comps = [f.kernel()]
        return QuadraticSplit(SPLITS_OVER_TOWER, **base, forms=(f, f),
                              scale=_scale(q, (f, f)), real_components=comps, tower_components=comps)
    d1, d2 = (sig.diagonal[i] for i in idx)
    if definite:
        return QuadraticSplit(SPLITS_OVER_CLOSURE, **base, real_components=[ker], tower_components=[ker],
                              notes=["definite rank 2: conjugate pair of complex linear factors"])
    s = (-d2 / d1).try_sqrt()
    if s is None:
        return QuadraticSplit(SPLITS_OVER_CLOSURE_ONLY, **base, tower_components=[ker],
                              notes=["real linear factors need a square root outside the tower"])
    f1 = LinearForm([a - s * b for a, b in zip(*ys)])
    f2 = LinearForm([a + s * b for a, b in zip(*ys)])
    forms = tuple(sorted((f1, f2), key=LinearForm.sort_key))
    comps = [f.kernel() for f in forms]
    return QuadraticSplit(SPLITS_OVER_TOWER, **base, forms=forms, scale=_scale(q, forms),
                          real_components=comps, tower_components=comps)


def _scale(q: MultiPoly, forms: Sequence[LinearForm]) -> FieldElement:
    prod = forms[0].to_poly() * forms[1].to_poly()
    exp, c = prod.leading_term()
    scale = q.coefficient(exp) / c
    assert prod.scale(scale) == q
    return scale


@dataclass
class ResidualAnalysis:
    """Real/tower zero set of a factor-free residual of the form c*q**k."""

    power: int
    core: MultiPoly | None
    split: QuadraticSplit | None


def analyze_residual(residual: MultiPoly) -> ResidualAnalysis:
    """Recognize residuals that are constants, quadratics, or squares of quadratics."""
    d = residual.degree
    if d <= 0:
        return ResidualAnalysis(0, None, None)
    if d == 2:
        return ResidualAnalysis(1, residual, quadratic_split(residual))
    if d == 4:
        sq = square_root_up_to_scalar(residual)
        if sq is not None:
            return ResidualAnalysis(2, sq[1], quadratic_split(sq[1]))
    return ResidualAnalysis(1, residual, None)
