"""Acceptance checks, each with its own time budget."""

from __future__ import annotations

import io
import random
import time

import pytest

from zerodiv.algebra import change_basis, right_mult_matrix
from zerodiv.catalog import catalog, lookup
from zerodiv.cli import run_command
from zerodiv.factor import SPLITS_OVER_CLOSURE, linear_factors, quadratic_split
from zerodiv.families import fuzz_three_dim, random_invertible
from zerodiv.linalg import Subspace, det
from zerodiv.poly import LinearForm, MultiPoly
from zerodiv.algebra import determinant_form
from zerodiv.tameness import (
    ALL_OF_A,
    SUBSPACE_UNION,
    cross_check_sample,
    tameness_report,
    zero_divisor_set,
)


class Budget:
    def __init__(self, seconds: float):
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.seconds, f"took {self.elapsed:.2f}s, budget {self.seconds}s"


def same_up_to_scalar(p: MultiPoly, q: MultiPoly) -> bool:
    """p = c*q for a nonzero c, checked by cross-multiplying every coefficient."""
    if p.is_zero() or q.is_zero():
        return p.is_zero() and q.is_zero()
    exp, lp = p.leading_term()
    lq = q.coefficient(exp)
    if not lq:
        return False
    keys = set(p.terms) | set(q.terms)
    return all(p.coefficient(e) * lq == q.coefficient(e) * lp for e in keys)


def worked_example_cubic():
    A = lookup("paper_example").algebra
    K = A.tower
    r2, r3, r6 = K.gen(0), K.gen(1), K.gen(0) * K.gen(1)
    a, b, g = MultiPoly.variables(3, K)
    cubic = (
        g ** 3 * (6 * r6)
        + g * g * (b.scale(6 * r2) - a * 12)
        + g * (b * b * (6 * r6) + a * b * (24 * r3))
        - b ** 3 * (10 * r2)
        + a * b * b * 12
        + a ** 3 * 16
    )
    return A, cubic, (a, b, g), (r2, r3, r6)


@pytest.mark.acceptance("worked example: determinant form equals the reference cubic up to scalar (< 1 s)")
def test_worked_example_determinant_form():
    with Budget(1.0):
        A, cubic, _, _ = worked_example_cubic()
        D = determinant_form(A)
        assert same_up_to_scalar(D, cubic)
        assert cubic == D * 16


@pytest.mark.acceptance("worked example: factorization, residual signature, plane plus line (< 5 s)")
def test_worked_example_factorization():
    with Budget(5.0):
        A, cubic, (a, b, g), (r2, r3, r6) = worked_example_cubic()
        lin = g.scale(r6) + a * 2 - b.scale(r2)
        u = a * 2 - b.scale(r2) - g.scale(r6)
        v = a * 2 + b.scale(2 * r2)
        product = lin * (u * u + v * v)
        assert same_up_to_scalar(product, cubic)

        D = determinant_form(A)
        fr = linear_factors(D)
        assert [f for f, _ in fr.linear_factors] == [LinearForm.from_poly(lin)]
        split = quadratic_split(fr.residual)
        assert split.rank == 2 and split.definite and split.kind == SPLITS_OVER_CLOSURE
        assert len(split.real_components) == 1 and split.real_components[0].dim == 1

        z = zero_divisor_set(A)
        assert z.kind == SUBSPACE_UNION
        assert sorted(W.dim for W in z.components) == [1, 2]


@pytest.mark.acceptance("products span deficient: zero algebra has Z = A, 1000 samples singular (< 5 s)")
def test_zero_algebra_everything_divides_zero():
    with Budget(5.0):
        A = lookup("zero_mult").algebra
        z = zero_divisor_set(A)
        assert z.kind == ALL_OF_A
        rng = random.Random(0)
        full = Subspace.full(A.n, A.tower)
        checked = 0
        while checked < 1000:
            x = full.random_point(rng)
            if not any(x):
                continue
            assert det(right_mult_matrix(A, x)) == 0
            checked += 1


@pytest.mark.acceptance("union of maximal left ideals: two-sided sampling, count 1000, seed 42 (< 30 s)")
def test_sampling_cross_check():
    with Budget(30.0):
        for name in ("paper_example", "poly_x3", "split_fff"):
            A = lookup(name).algebra
            report = cross_check_sample(A, zero_divisor_set(A), count=1000, seed=42)
            assert report.passed, (name, report.violations[:3])
            assert report.ambient_checked == 1000


@pytest.mark.acceptance("three-dimensional fuzz set (>= 50 algebras) all tame, ideal counts bounded (< 2 min)")
def test_three_dimensional_algebras_are_tame():
    with Budget(120.0):
        cases = list(fuzz_three_dim(60, seed=2024))
        assert len(cases) >= 50
        families = {c.family for c in cases}
        assert families == {"quotient", "direct_sum", "basis_change"}
        for case in cases:
            r = tameness_report(case.algebra)  # raises on a non-tame verdict
            assert r.tame is True, case.algebra.name
            if r.ideal_list is not None and r.ideal_list.complete:
                ideals = r.ideal_list.ideals
                assert sum(1 for W in ideals if W.codim == 1) <= 3
                assert sum(1 for W in ideals if 2 * W.dim < 3) <= 1
                if any(W.dim == 1 for W in ideals):
                    assert len(ideals) <= 4


@pytest.mark.acceptance("2x2 matrices: not tame, does not split, core signature (2, 2) (< 5 s)")
def test_matrix_algebra_not_tame():
    with Budget(5.0):
        r = tameness_report(lookup("m2_real").algebra)
        assert r.tame is False
        assert r.splits_over_closure == "no"
        assert r.residual.split.signature == (2, 2)
        assert r.residual.split.rank == 4


@pytest.mark.acceptance("basis invariance: 20 random basis changes of the worked example (< 30 s)")
def test_basis_invariance():
    with Budget(30.0):
        A = lookup("paper_example").algebra
        base = tameness_report(A)
        base_components = set(base.z.components)
        rng = random.Random(7)
        for _ in range(20):
            P = random_invertible(rng, 3, A.tower)
            B = change_basis(A, P)
            r = tameness_report(B)
            assert r.tame == base.tame
            assert len(r.z.components) == len(base.z.components)
            assert sorted(W.dim for W in r.z.components) == sorted(W.dim for W in base.z.components)
            # B-coordinates u correspond to A-coordinates P u
            assert {W.image(P) for W in r.z.components} == base_components


@pytest.mark.acceptance("open-question table over the catalog, quaternions included, rows consistent (< 1 min)")
def test_open_question_table():
    with Budget(60.0):
        out = io.StringIO()
        code = run_command(["--format", "machine", "tame"], stdout=out, stderr=io.StringIO())
        assert code == 0
        kv = dict(line.split(" = ", 1) for line in out.getvalue().splitlines())
        rows = {}
        i = 0
        while f"catalog[{i}].name" in kv:
            p = f"catalog[{i}].open_question"
            rows[kv[f"catalog[{i}].name"]] = (kv[f"{p}.real_tame"], kv[f"{p}.splits"], kv[f"{p}.flagged"])
            i += 1
        assert "quaternions" in rows
        assert set(rows) == {e.name for e in catalog()}
        for name, (tame, splits, flagged) in rows.items():
            expect_flag = (tame, splits) in {("true", "no"), ("false", "yes")}
            assert flagged == ("true" if expect_flag else "false"), name
            r = tameness_report(lookup(name).algebra)
            if r.factor_report is not None and r.factor_report.fully_split:
                assert splits == "yes"
            if splits == "no":
                assert r.residual.split.rank >= 3
