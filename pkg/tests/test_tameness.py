from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zerodiv import tameness
from zerodiv.algebra import change_basis, direct_sum, make_algebra, right_mult_matrix
from zerodiv.catalog import catalog, lookup
from zerodiv.errors import TamenessContradiction, DimensionTooLarge, NotAssociative, PreconditionError
from zerodiv.factor import ResidualAnalysis, quadratic_split
from zerodiv.families import field_algebra, random_invertible, two_dim_algebras
from zerodiv.field import QQ
from zerodiv.linalg import Subspace, det
from zerodiv.poly import MultiPoly
from zerodiv.tameness import (
    ALL_OF_A,
    SUBSPACE_UNION,
    UNDETERMINED,
    ZDecomposition,
    cross_check_sample,
    open_question_row,
    tameness_report,
    zero_divisor_set,
)


@pytest.mark.parametrize("entry", catalog(), ids=lambda e: e.name)
def test_catalog_regression(entry):
    r = tameness_report(entry.algebra)
    ex = entry.expected
    assert r.tame == ex.tame
    assert r.proper == ex.proper
    assert r.splits_over_closure == ex.splits
    if ex.component_dims is not None:
        assert tuple(sorted(W.dim for W in r.z.components)) == ex.component_dims
    if r.z.kind == ALL_OF_A:
        assert not r.proper


@pytest.mark.parametrize("entry", catalog(), ids=lambda e: e.name)
def test_components_pairwise_incomparable(entry):
    z = zero_divisor_set(entry.algebra)
    for i, U in enumerate(z.components):
        for j, V in enumerate(z.components):
            if i != j:
                assert not U <= V


def test_justifications():
    assert "AA != A" in zero_divisor_set(lookup("zero_mult").algebra).justification[0]
    assert "vanishes identically" in zero_divisor_set(lookup("lambda_algebra").algebra).justification[0]
    assert "maximal left ideals" in zero_divisor_set(lookup("poly_x3").algebra).justification[0]


def test_matrix_algebra_is_a_cone():
    z = zero_divisor_set(lookup("m2_real").algebra)
    assert z.kind == UNDETERMINED
    a, b, c, d = MultiPoly.variables(4, QQ)
    assert z.residual == a * d - b * c


def test_open_question_rows():
    assert open_question_row(lookup("paper_example").algebra).splits == "yes"
    row = open_question_row(lookup("m2_real").algebra)
    assert (row.real_tame, row.splits, row.flagged) == (False, "no", False)
    row = open_question_row(lookup("quaternions").algebra)
    assert (row.real_tame, row.splits, row.flagged) == (True, "no", True)


def test_preconditions():
    bad = make_algebra(2, QQ, [[[0, 1], [0, 0]], [[1, 0], [0, 0]]], "bad")
    with pytest.raises(NotAssociative):
        tameness_report(bad)
    five = make_algebra(5, QQ, [[[0] * 5] * 5] * 5)
    with pytest.raises(DimensionTooLarge):
        zero_divisor_set(five)


def test_three_dim_non_tame_is_a_hard_error(monkeypatch):
    A = lookup("split_fff").algebra
    x, y, z = MultiPoly.variables(3, QQ)
    cone = x * x + y * y - z * z
    real = tameness._analyze

    def fake(B):
        axioms, D, fr, _, ideals, _, notes = real(B)
        ra = ResidualAnalysis(1, cone, quadratic_split(cone))
        return axioms, D, fr, ra, ideals, ZDecomposition(UNDETERMINED, [], cone, []), notes

    monkeypatch.setattr(tameness, "_analyze", fake)
    with pytest.raises(TamenessContradiction):
        tameness_report(A)


def _with_zero_summand(rng: random.Random):
    """An associative algebra B + Z0 (Z0 zero multiplication), basis-changed: AA != A."""
    B = rng.choice(two_dim_algebras(QQ, rng) + [field_algebra(QQ)])
    k = rng.randint(1, 4 - B.n) if B.n < 4 else 1
    Z0 = make_algebra(k, QQ, [[[0] * k] * k] * k, "zero")
    S = direct_sum(B, Z0)
    return change_basis(S, random_invertible(rng, S.n, QQ))


@given(st.integers(0, 100_000))
@settings(max_examples=20, deadline=None)
def test_products_span_deficient_means_everything_divides_zero(seed):
    rng = random.Random(seed)
    A = _with_zero_summand(rng)
    z = zero_divisor_set(A)
    assert z.kind == ALL_OF_A
    full = Subspace.full(A.n, QQ)
    for _ in range(10):
        x = full.random_point(rng)
        assert det(right_mult_matrix(A, x)) == 0


@pytest.mark.parametrize("name", ["paper_example", "poly_x3", "split_fff", "upper_triangular", "gaussian_times_q"])
def test_cross_check_passes(name):
    A = lookup(name).algebra
    report = cross_check_sample(A, zero_divisor_set(A), count=60, seed=7)
    assert report.passed and report.ambient_checked == 60


def test_cross_check_catches_a_missing_component():
    A = lookup("paper_example").algebra
    z = zero_divisor_set(A)
    plane = next(W for W in z.components if W.dim == 2)
    line = next(W for W in z.components if W.dim == 1)
    corrupted = ZDecomposition(SUBSPACE_UNION, [plane], None, [])
    report = cross_check_sample(A, corrupted, count=200, seed=1)
    assert not report.passed
    msg, witness = report.violations[0]
    assert "outside" in msg and line.contains(witness)
    assert report.annihilator_checked > 0


def test_cross_check_catches_a_spurious_component():
    A = lookup("split_fff").algebra
    bogus = ZDecomposition(SUBSPACE_UNION, [Subspace.span([(1, 1, 1)], 3, QQ)], None, [])
    assert not cross_check_sample(A, bogus, count=5, seed=0).passed


def test_cross_check_edge_cases():
    z = zero_divisor_set(lookup("zero_mult").algebra)
    assert cross_check_sample(lookup("zero_mult").algebra, z, 20, 0).passed
    Q = lookup("quaternions").algebra
    report = cross_check_sample(Q, zero_divisor_set(Q), 10, 0)
    assert report.passed and report.no_solvable_slice
    with pytest.raises(PreconditionError):
        cross_check_sample(lookup("m2_real").algebra, zero_divisor_set(lookup("m2_real").algebra), 5, 0)
