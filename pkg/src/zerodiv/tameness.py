"""Decide right tameness and decompose the right-zero-divisor set Z.

Z is computed over the tower itself (points with tower coordinates). The
tame verdict uses the factor analysis of D: a rank >= 3 indefinite
quadratic core means the real zero set is a cone, which is not a finite
union of subspaces.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import (
    Algebra,
    AxiomReport,
    check_axioms,
    determinant_form,
    left_mult_matrix,
    right_mult_matrix,
)
from .errors import TamenessContradiction, DimensionTooLarge, NotAssociative, PreconditionError
from .factor import COMPLETE, FactorReport, ResidualAnalysis, analyze_residual, linear_factors
from .ideals import MAX_IDEAL_DIM, IdealList, maximal_left_ideals
from .linalg import Subspace, det, kernel
from .poly import MultiPoly
from .roots import univariate_roots

MAX_DIM = 4

ALL_OF_A = "all_of_A"
SUBSPACE_UNION = "subspace_union"
UNDETERMINED = "undetermined"

RULE_PRODUCTS = "AA != A, so every element is a right zero divisor: Z = A"
RULE_DET_ZERO = "D vanishes identically, and a polynomial vanishing on all of F^n is zero: Z = A"
RULE_IDEALS = "AA = A: Z is the union of all maximal left ideals"
RULE_VARIETY = "Z is the zero set of D: hyperplanes of linear factors plus the residual's zero set"


@dataclass
class ZDecomposition:
    kind: str
    components: list[Subspace] = field(default_factory=list)
    residual: MultiPoly | None = None
    justification: list[str] = field(default_factory=list)

    def contains(self, x) -> bool:
        return any(c.contains(x) for c in self.components)


@dataclass
class OpenQuestionRow:
    name: str
    real_tame: bool | None
    splits: str
    flagged: bool


@dataclass
class TamenessReport:
    name: str
    n: int
    axioms: AxiomReport
    tame: bool | None
    proper: bool
    z: ZDecomposition
    D: MultiPoly
    factor_report: FactorReport | None
    residual: ResidualAnalysis | None
    ideal_list: IdealList | None
    splits_over_closure: str
    notes: list[str] = field(default_factory=list)

    @property
    def open_question_row(self) -> OpenQuestionRow:
        flagged = (self.tame is True and self.splits_over_closure == "no") or (
            self.tame is False and self.splits_over_closure == "yes"
        )
        return OpenQuestionRow(self.name, self.tame, self.splits_over_closure, flagged)

    @property
    def determined(self) -> bool:
        return self.tame is not None and self.z.kind != UNDETERMINED


def _maximal_only(components: list[Subspace]) -> list[Subspace]:
    unique = list(dict.fromkeys(components))
    return [c for c in unique if not any(c != d and c <= d for d in unique)]


def _require(A: Algebra) -> AxiomReport:
    if A.n > MAX_DIM:
        raise DimensionTooLarge(f"tameness analysis supports n <= {MAX_DIM}, got {A.n}")
    axioms = check_axioms(A)
    if not axioms.associative:
        i, j, k = axioms.associativity_witness
        names = A.basis_names
        raise NotAssociative(f"({names[i]}*{names[j]})*{names[k]} != {names[i]}*({names[j]}*{names[k]})")
    return axioms


def _variety(fr: FactorReport, ra: ResidualAnalysis, notes: list[str]) -> ZDecomposition:
    comps = [f.kernel() for f, _ in fr.linear_factors]
    just = [RULE_VARIETY]
    if ra.power == 0:
        return ZDecomposition(SUBSPACE_UNION, _maximal_only(comps), None, just)
    if ra.split is None or ra.split.tower_components is None:
        return ZDecomposition(UNDETERMINED, _maximal_only(comps), ra.core, just)
    comps += ra.split.tower_components
    just += ra.split.notes
    return ZDecomposition(SUBSPACE_UNION, _maximal_only(comps), None, just)


def _analyze(A: Algebra):
    axioms = _require(A)
    D = determinant_form(A)
    fr = ra = None
    if not D.is_zero():
        fr = linear_factors(D)
        ra = analyze_residual(fr.residual)
    notes: list[str] = []
    ideals = None
    full = Subspace.full(A.n, A.tower)
    if not axioms.aa_full:
        z = ZDecomposition(ALL_OF_A, [full], None, [RULE_PRODUCTS])
    elif D.is_zero():
        z = ZDecomposition(ALL_OF_A, [full], None, [RULE_DET_ZERO])
    else:
        if A.n <= MAX_IDEAL_DIM:
            ideals = maximal_left_ideals(A, D, fr)
        if ideals is not None and ideals.complete:
            z = ZDecomposition(SUBSPACE_UNION, list(ideals.ideals), None, [RULE_IDEALS] + ideals.bounds_used)
        else:
            if ideals is not None:
                notes.append("maximal-ideal enumeration incomplete; falling back to the zero set of D")
            z = _variety(fr, ra, notes)
    return axioms, D, fr, ra, ideals, z, notes


def zero_divisor_set(A: Algebra) -> ZDecomposition:
    return _analyze(A)[5]


def _splits(D: MultiPoly, fr: FactorReport | None, ra: ResidualAnalysis | None) -> str:
    if fr is None:
        return "yes"  # D = 0 is divisible by every linear form
    if fr.fully_split:
        return "yes"
    if ra is not None and ra.split is not None:
        return "yes" if ra.split.splits_over_closure else "no"
    return "undetermined"


def tameness_report(A: Algebra) -> TamenessReport:
    axioms, D, fr, ra, ideals, z, notes = _analyze(A)
    if z.kind in (ALL_OF_A, SUBSPACE_UNION):
        tame: bool | None = True
    elif ra is not None and ra.split is not None and ra.split.rank >= 3 and not ra.split.definite:
        tame = False
        notes.append(
            f"residual core has signature {ra.split.signature}: its real zero set is a cone"
        )
    else:
        tame = None
        notes.append("residual of D is not resolved by the implemented factor search")
    if fr is not None and fr.complete != COMPLETE:
        notes.append("linear-factor search was best effort")
    if A.n == 3 and tame is False:
        raise TamenessContradiction(f"{A.name}: 3-dimensional associative algebra reported not tame")
    return TamenessReport(
        name=A.name,
        n=A.n,
        axioms=axioms,
        tame=tame,
        proper=z.kind != ALL_OF_A,
        z=z,
        D=D,
        factor_report=fr,
        residual=ra,
        ideal_list=ideals,
        splits_over_closure=_splits(D, fr, ra),
        notes=notes,
    )


def open_question_row(A: Algebra) -> OpenQuestionRow:
    return tameness_report(A).open_question_row


@dataclass
class CrossCheckReport:
    passed: bool
    inside_checked: int = 0
    ambient_checked: int = 0
    annihilator_checked: int = 0
    violations: list[tuple[str, tuple]] = field(default_factory=list)
    no_solvable_slice: bool = False


def _random_rational(rng: random.Random, spread: int = 20) -> Fraction:
    return Fraction(rng.randint(-spread, spread), rng.randint(1, spread))


def _slice_pieces(D: MultiPoly) -> list[MultiPoly]:
    """Factors of D whose roots along a line together give the roots of D."""
    if D.is_zero() or D.degree > 4:
        return [D]
    fr = linear_factors(D)
    pieces = [f.to_poly() for f, _ in fr.linear_factors]
    if fr.residual.degree > 0:
        pieces.append(fr.residual)
    return pieces


def _slice_roots(pieces: list[MultiPoly], base, direction):
    """Distinct roots of t -> D(base + t*direction), or None if D vanishes on the line."""
    roots = []
    for piece in pieces:
        coeffs = piece.along_line(base, direction)
        if all(not c for c in coeffs):
            return None
        roots += univariate_roots(coeffs, max_degree=max(4, piece.degree)).distinct()
    return list(dict.fromkeys(roots))


def cross_check_sample(
    A: Algebra, z: ZDecomposition, count: int = 100, seed: int = 0, form: MultiPoly | None = None
) -> CrossCheckReport:
    """Sample both directions of the claim Z = union of z.components.

    (a) points drawn from each component have singular R(x);
    (b) points of F^n with D = 0, found by fixing all but one coordinate at
        random and solving for the last, lie in some component;
    (c) for each such point x, a random nonzero y with x*y = 0 (a right zero
        divisor by definition) lies in some component. This reaches
        components of small dimension that random slices almost never meet.
    """
    if z.kind == UNDETERMINED:
        raise PreconditionError("cannot cross-check an undetermined decomposition")
    rng = random.Random(seed)
    report = CrossCheckReport(passed=True)
    for comp in z.components:
        for _ in range(count):
            x = comp.random_point(rng)
            if det(right_mult_matrix(A, x)):
                report.violations.append(("component point is not a zero divisor", x))
            report.inside_checked += 1
    if z.kind == ALL_OF_A:
        report.passed = not report.violations
        return report
    D = determinant_form(A) if form is None else form
    pieces = _slice_pieces(D)
    tower, n = A.tower, A.n
    misses = 0
    while report.ambient_checked < count:
        k = rng.randrange(n)
        base = [tower(_random_rational(rng)) for _ in range(n)]
        base[k] = tower.zero
        direction = [tower(int(i == k)) for i in range(n)]
        ts = _slice_roots(pieces, base, direction)
        if ts is None:
            ts = [tower(_random_rational(rng))]
        if not ts:
            misses += 1
            if misses >= count:
                report.no_solvable_slice = True
                break
            continue
        misses = 0
        t = ts[rng.randrange(len(ts))]
        x = tuple(b + t * d for b, d in zip(base, direction))
        if det(right_mult_matrix(A, x)):
            report.violations.append(("sampled root of D has nonsingular R(x)", x))
        elif not z.contains(x):
            report.violations.append(("zero divisor outside every component", x))
        report.ambient_checked += 1
        if any(x):
            ann = kernel(left_mult_matrix(A, x))
            if ann.dim:
                y = ann.random_point(rng)
                if any(y) and not z.contains(y):
                    report.violations.append(("annihilated element outside every component", y))
                report.annihilator_checked += 1
    report.passed = not report.violations
    return report
