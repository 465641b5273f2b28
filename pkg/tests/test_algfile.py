from __future__ import annotations

import random
from importlib import resources

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import K23, elements
from zerodiv.algebra import make_algebra, product
from zerodiv.algfile import format_algebra, parse_algebra_file
from zerodiv.catalog import catalog, paper_example
from zerodiv.errors import CoefficientNotInTower, DuplicateProduct, ParseError, UnknownBasisName
from zerodiv.field import QQ


def shipped_paper_example() -> str:
    return resources.files("zerodiv").joinpath("data/paper_example.alg").read_text(encoding="utf-8")


def test_minimal_file():
    A = parse_algebra_file("field Q\ndim 1\nbasis e\ne*e = e")
    assert A.n == 1 and A.tower == QQ and A.table[0][0] == (QQ(1),)


def test_crlf_comments_and_defaults():
    text = "# header\r\nname tiny\r\nfield Q\r\ndim 2\r\nbasis u v  # names\r\nu*u = u\r\n\r\nu*v = 2 v\r\n"
    A = parse_algebra_file(text)
    assert A.name == "tiny" and A.basis_names == ("u", "v")
    assert A.table[0][1] == (QQ(0), QQ(2))
    assert A.table[1][1] == (QQ(0), QQ(0))


def test_coefficient_outside_tower():
    text = "field Q adjoin sqrt 2\ndim 2\nbasis e f\ne*f = 1/3 sqrt(5) e\n"
    with pytest.raises(CoefficientNotInTower) as info:
        parse_algebra_file(text)
    assert info.value.line == 4 and info.value.col == 11


def test_duplicate_product():
    text = "field Q\ndim 1\nbasis e\ne*e = e\ne * e = 0\n"
    with pytest.raises(DuplicateProduct) as info:
        parse_algebra_file(text)
    assert (info.value.line, info.value.col) == (5, 1)


@pytest.mark.parametrize(
    "text, line, col",
    [
        ("field Q\ndim 1\nbasis e\ne*x = e\n", 4, 3),
        ("field Q\ndim 1\nbasis e\ne*e = e + w\n", 4, 11),
    ],
)
def test_unknown_basis_names(text, line, col):
    with pytest.raises(UnknownBasisName) as info:
        parse_algebra_file(text)
    assert (info.value.line, info.value.col) == (line, col)


@pytest.mark.parametrize(
    "text, line",
    [
        ("field R\ndim 1\nbasis e\n", 1),
        ("field Q adjoin sqrt 4\ndim 1\nbasis e\n", 1),
        ("field Q\ndim x\n", 2),
        ("field Q\ndim 2\nbasis e\n", 3),
        ("field Q\ndim 1\nbasis e\ne*e = e +\n", 4),
        ("field Q\ndim 1\nbasis e\ne*e = (e\n", 4),
        ("field Q\ndim 1\nbasis e\nhello\n", 4),
        ("field Q\ndim 1\nbasis e\ne*e = 3\n", 4),
        ("field Q\ndim 1\n", 2),
    ],
)
def test_parse_errors_carry_positions(text, line):
    with pytest.raises(ParseError) as info:
        parse_algebra_file(text)
    assert info.value.line == line


def test_shipped_paper_example_matches_multiplication_rule():
    A = parse_algebra_file(shipped_paper_example())
    assert A.same_structure(paper_example())
    K = A.tower
    r2, r3, r6 = K.gen(0), K.gen(1), K.gen(0) * K.gen(1)
    rng = random.Random(20)

    def rule(x, y):
        a, b, g = x
        d, e, f = y
        return (
            a * d + (g * f - b * e) / 2 - r3 / 2 * (b * f + g * e),
            (a * e + b * d) - r2 / 8 * (5 * g * f - b * e) - r6 / 8 * (b * f + g * e),
            (a * f + g * d) + r6 / 8 * (g * f + 3 * b * e) - r2 / 8 * (b * f + g * e),
        )

    def point():
        return tuple(K(rng.randint(-9, 9)) + K.gen(rng.randrange(2)) * rng.randint(-3, 3) for _ in range(3))

    for _ in range(20):
        x, y = point(), point()
        assert product(A, x, y) == rule(x, y)


@pytest.mark.parametrize("entry", catalog(), ids=lambda e: e.name)
def test_catalog_roundtrip(entry):
    A = entry.algebra
    B = parse_algebra_file(format_algebra(A))
    assert B.same_structure(A) and B.name == A.name and B.basis_names == A.basis_names


@given(st.lists(elements(K23), min_size=8, max_size=8))
@settings(max_examples=30, deadline=None)
def test_random_tables_roundtrip(values):
    it = iter(values)
    table = [[[next(it) for _ in range(2)] for _ in range(2)] for _ in range(2)]
    A = make_algebra(2, K23, table, "random")
    assert parse_algebra_file(format_algebra(A)).same_structure(A)
