from __future__ import annotations

from collections import Counter

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from strategies import K2, K23, nonzero_elements, vectors
from zerodiv.errors import NotHomogeneous, WrongDegree
from zerodiv.factor import (
    IRREDUCIBLE_OVER_CLOSURE,
    SPLITS_OVER_CLOSURE,
    SPLITS_OVER_CLOSURE_ONLY,
    SPLITS_OVER_TOWER,
    analyze_residual,
    linear_factors,
    nonvanishing_point,
    quadratic_split,
)
from zerodiv.field import QQ
from zerodiv.poly import LinearForm, MultiPoly

linear_forms = vectors(K23, 3).filter(any).map(LinearForm)


def xyz(tower=QQ):
    return MultiPoly.variables(3, tower)


@given(st.lists(linear_forms, min_size=1, max_size=3), nonzero_elements(K23))
@settings(max_examples=30, deadline=None)
def test_products_of_linear_forms_split_completely(fs, c):
    p = MultiPoly.constant(c, 3, K23)
    for f in fs:
        p = p * f.to_poly()
    report = linear_factors(p)
    assert report.fully_split
    assert report.expand() == p
    found = Counter({f: m for f, m in report.linear_factors})
    assert found == Counter(fs)


@given(linear_forms, st.sampled_from(["definite", "cone", "closure"]))
@settings(max_examples=20, deadline=None)
def test_linear_times_irreducible_quadratic(f, kind):
    x, y, z = xyz(K23)
    q = {
        "definite": x * x + y * y + z * z,
        "cone": x * x + y * y - z * z.scale(K23(5)),
        "closure": x * x + y * y,
    }[kind]
    report = linear_factors(f.to_poly() * q)
    assert [g for g, _ in report.linear_factors] == [f]
    assert report.residual.degree == 2
    assert report.expand() == f.to_poly() * q


def test_nonvanishing_point():
    x, y, z = xyz()
    p = x * y * z
    v = nonvanishing_point(p)
    assert p(v) != 0


def test_linear_factors_requires_homogeneous():
    x, y, _ = xyz()
    with pytest.raises(NotHomogeneous):
        linear_factors(x * y + x)


def test_quadratic_kinds():
    x, y, z = xyz()
    assert quadratic_split((x + y) * (x + y)).kind == SPLITS_OVER_TOWER
    s = quadratic_split(x * x - y * y)
    assert s.kind == SPLITS_OVER_TOWER and s.signature == (1, 1)
    assert {f for f in s.forms} == {LinearForm([QQ(1), QQ(1), QQ(0)]), LinearForm([QQ(1), QQ(-1), QQ(0)])}

    only = quadratic_split(x * x - y * y * 2)
    assert only.kind == SPLITS_OVER_CLOSURE_ONLY
    assert only.tower_components[0].dim == 1  # the z-axis

    a, b, c = xyz(K2)
    over_k2 = quadratic_split(a * a - b * b * 2)
    assert over_k2.kind == SPLITS_OVER_TOWER
    assert (over_k2.forms[0].to_poly() * over_k2.forms[1].to_poly()).scale(over_k2.scale) == a * a - b * b * 2

    definite = quadratic_split(x * x + y * y)
    assert definite.kind == SPLITS_OVER_CLOSURE and definite.real_components[0].dim == 1

    cone = quadratic_split(x * x + y * y - z * z)
    assert cone.kind == IRREDUCIBLE_OVER_CLOSURE and not cone.definite
    assert cone.real_components is None and not cone.splits_over_closure

    ball = quadratic_split(x * x + y * y + z * z)
    assert ball.definite and ball.real_components[0].dim == 0


def test_quadratic_split_preconditions():
    x, y, _ = xyz()
    with pytest.raises(WrongDegree):
        quadratic_split(x * y * y)
    with pytest.raises(NotHomogeneous):
        quadratic_split(x * y + x)


@given(vectors(K23, 3), vectors(K23, 3))
@settings(max_examples=30, deadline=None)
def test_split_forms_multiply_back(u, v):
    assume(any(u) and any(v))
    q = LinearForm(u).to_poly() * LinearForm(v).to_poly()
    s = quadratic_split(q)
    assert s.kind == SPLITS_OVER_TOWER
    assert (s.forms[0].to_poly() * s.forms[1].to_poly()).scale(s.scale) == q


def test_residual_square_of_quadratic():
    a, b, c, d = MultiPoly.variables(4, QQ)
    q = a * d - b * c
    ra = analyze_residual(q * q * 3)
    assert ra.power == 2
    assert ra.split.signature == (2, 2)
    assert analyze_residual(MultiPoly.constant(5, 4, QQ)).power == 0


def test_documented_factor_examples():
    x, y, z = xyz()
    r = linear_factors(x * y * z)
    assert len(r.linear_factors) == 3 and r.fully_split
    r = linear_factors((x + y) * (x + y) * z)
    assert dict(r.linear_factors) == {
        LinearForm([QQ(1), QQ(1), QQ(0)]): 2,
        LinearForm([QQ(0), QQ(0), QQ(1)]): 1,
    }
    s = quadratic_split(x * x + y * y)
    assert s.real_components[0] == s.gram_kernel
    assert s.gram_kernel.contains((0, 0, 1))
    a, b, c, d = MultiPoly.variables(4, QQ)
    s = quadratic_split(a * d - b * c)
    assert s.kind == IRREDUCIBLE_OVER_CLOSURE and s.signature == (2, 2) and not s.definite


@given(st.sampled_from(["x2+y2", "x2-y2", "cone", "ball", "rank1"]), st.integers(0, 10_000))
@settings(max_examples=30, deadline=None)
def test_classification_invariant_under_linear_change(which, seed):
    import random

    from zerodiv.families import random_invertible

    x, y, z = xyz()
    q = {
        "x2+y2": x * x + y * y,
        "x2-y2": x * x - y * y,
        "cone": x * x + y * y - z * z,
        "ball": x * x + y * y + z * z * 3,
        "rank1": (x - z) * (x - z),
    }[which]
    P = random_invertible(random.Random(seed), 3, QQ)
    a, b = quadratic_split(q), quadratic_split(q.linear_change(P))
    assert (a.kind, a.rank, a.signature) == (b.kind, b.rank, b.signature)
