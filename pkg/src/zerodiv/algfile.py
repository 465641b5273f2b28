"""Reading and writing the line-oriented ``.alg`` algebra format.

    # comment
    name paper_example
    field Q adjoin sqrt 2 adjoin sqrt 3
    dim 3
    basis a b g
    a*a = a
    b*b = -1/2 a + sqrt(2)/8 b + 3/8 sqrt(6) g

Products that are not listed are zero.
"""

from __future__ import annotations

import re
from pathlib import Path

from .algebra import Algebra, make_algebra
from .errors import DuplicateProduct, ParseError, PreconditionError, UnknownBasisName
from .field import FieldTower, make_tower
from .syntax import parse_combination

_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*\Z")
_PRODUCT = re.compile(r"\s*([A-Za-z_][A-Za-z_0-9]*)\s*\*\s*([A-Za-z_][A-Za-z_0-9]*)\s*=")
_RESERVED = {"sqrt", "name", "field", "dim", "basis", "Q", "adjoin"}


def _words(line: str) -> list[tuple[str, int]]:
    return [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]


def _int(word: str, lineno: int, col: int) -> int:
    if not re.fullmatch(r"-?\d+", word):
        raise ParseError(lineno, col, f"expected an integer, got {word!r}")
    return int(word)


def _parse_field(words, lineno: int) -> FieldTower:
    if len(words) < 2 or words[1][0] != "Q":
        col = words[1][1] if len(words) > 1 else words[0][1] + len(words[0][0])
        raise ParseError(lineno, col, "field must start with Q")
    rest = words[2:]
    radicands = []
    while rest:
        if len(rest) < 3 or rest[0][0] != "adjoin" or rest[1][0] != "sqrt":
            raise ParseError(lineno, rest[0][1], "expected 'adjoin sqrt <int>'")
        radicands.append((_int(rest[2][0], lineno, rest[2][1]), rest[2][1]))
        rest = rest[3:]
    try:
        return make_tower([r for r, _ in radicands])
    except PreconditionError as exc:
        col = radicands[-1][1] if radicands else words[1][1]
        raise ParseError(lineno, col, str(exc)) from exc


def parse_algebra_file(text: str) -> Algebra:
    if text.startswith("﻿"):
        text = text[1:]
    name = "algebra"
    tower: FieldTower | None = None
    dim: int | None = None
    basis: list[str] | None = None
    products: dict[tuple[int, int], tuple] = {}
    last_line = 0
    for lineno, raw in enumerate(text.replace("\r\n", "\n").split("\n"), start=1):
        line = raw.split("#", 1)[0].rstrip()
        words = _words(line)
        if not words:
            continue
        last_line = lineno
        head, col = words[0]
        if head == "name":
            if len(words) != 2:
                raise ParseError(lineno, col, "expected 'name <word>'")
            name = words[1][0]
        elif head == "field":
            if tower is not None:
                raise ParseError(lineno, col, "field declared twice")
            tower = _parse_field(words, lineno)
        elif head == "dim":
            if dim is not None:
                raise ParseError(lineno, col, "dim declared twice")
            if len(words) != 2:
                raise ParseError(lineno, col, "expected 'dim <int>'")
            dim = _int(words[1][0], lineno, words[1][1])
            if dim < 1:
                raise ParseError(lineno, words[1][1], "dim must be positive")
        elif head == "basis":
            if dim is None:
                raise ParseError(lineno, col, "basis before dim")
            if basis is not None:
                raise ParseError(lineno, col, "basis declared twice")
            names = words[1:]
            if len(names) != dim:
                raise ParseError(lineno, col, f"expected {dim} basis names, got {len(names)}")
            seen = set()
            for word, c in names:
                if not _IDENT.match(word) or word in _RESERVED:
                    raise ParseError(lineno, c, f"invalid basis name {word!r}")
                if word in seen:
                    raise ParseError(lineno, c, f"repeated basis name {word!r}")
                seen.add(word)
            basis = [w for w, _ in names]
        else:
            m = _PRODUCT.match(line)
            if m is None:
                raise ParseError(lineno, col, f"unrecognized line starting with {head!r}")
            if tower is None or basis is None:
                raise ParseError(lineno, col, "product line before field and basis")
            idx = []
            for g in (1, 2):
                if m.group(g) not in basis:
                    raise UnknownBasisName(lineno, m.start(g) + 1, f"unknown basis name {m.group(g)!r}")
                idx.append(basis.index(m.group(g)))
            key = (idx[0], idx[1])
            if key in products:
                raise DuplicateProduct(
                    lineno, m.start(1) + 1, f"product {m.group(1)}*{m.group(2)} given twice"
                )
            products[key] = parse_combination(line[m.end():], tower, basis, lineno, m.end() + 1)
    for keyword, value in (("field", tower), ("dim", dim), ("basis", basis)):
        if value is None:
            raise ParseError(max(last_line, 1), 1, f"missing '{keyword}' declaration")
    n = dim
    zero = (tower.zero,) * n
    table = [[products.get((i, j), zero) for j in range(n)] for i in range(n)]
    return make_algebra(n, tower, table, name, basis)


def load_algebra(path: str | Path) -> Algebra:
    return parse_algebra_file(Path(path).read_text(encoding="utf-8"))


def _term(c, name: str) -> tuple[str, str]:
    """(sign, body) for the term c*name."""
    if len(c.terms()) == 1:
        coeff, _ = c.terms()[0]
        sign = "-" if coeff < 0 else "+"
        mag = -c if coeff < 0 else c
        return sign, name if mag == 1 else f"{mag}*{name}"
    return "+", f"({c})*{name}"


def format_combination(coords, names) -> str:
    terms = [_term(c, name) for c, name in zip(coords, names) if c]
    if not terms:
        return "0"
    sign, body = terms[0]
    out = body if sign == "+" else f"-{body}"
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def format_algebra(A: Algebra) -> str:
    """Serialize A so that parse_algebra_file reproduces it exactly."""
    field = "field Q" + "".join(f" adjoin sqrt {r}" for r in A.tower.radicands)
    lines = [f"name {A.name}", field, f"dim {A.n}", "basis " + " ".join(A.basis_names)]
    for i in range(A.n):
        for j in range(A.n):
            if any(A.table[i][j]):
                lhs = f"{A.basis_names[i]}*{A.basis_names[j]}"
                lines.append(f"{lhs} = {format_combination(A.table[i][j], A.basis_names)}")
    return "\n".join(lines) + "\n"
