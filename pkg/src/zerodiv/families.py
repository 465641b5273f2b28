"""Parametrized families of associative algebras for fuzzing."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .algebra import Algebra, change_basis, direct_sum, make_algebra
from .catalog import catalog
from .field import QQ, FieldTower
from .linalg import Matrix, det


def polynomial_quotient(coeffs: Sequence, tower: FieldTower = QQ, name: str | None = None) -> Algebra:
    """F[X]/(f) for monic f = X^n + c_{n-1} X^{n-1} + ... + c_0, basis 1, X, ..., X^{n-1}."""
    n = len(coeffs)
    c = [tower(x) for x in coeffs]
    # X^k reduced mod f, for k < 2n - 1
    powers = [[tower(int(i == k)) for i in range(n)] for k in range(n)]
    for _ in range(n - 1):
        prev = powers[-1]
        top = prev[-1]
        shifted = [tower.zero] + prev[:-1]
        powers.append([s - top * ci for s, ci in zip(shifted, c)])
    table = [[powers[i + j] for j in range(n)] for i in range(n)]
    label = name or "quotient[" + ",".join(str(x) for x in c) + "]"
    return make_algebra(n, tower, table, label, tuple("1" if k == 0 else f"X{k}" for k in range(n)))


def field_algebra(tower: FieldTower = QQ) -> Algebra:
    return make_algebra(1, tower, [[[tower.one]]], "F", ("u",))


def two_dim_algebras(tower: FieldTower = QQ, rng: random.Random | None = None) -> list[Algebra]:
    """Representative associative 2-dim algebras (some with AA != A)."""
    rng = rng or random.Random(0)
    out = [
        polynomial_quotient([0, 0], tower, "dual_numbers"),
        polynomial_quotient([-1, 0], tower, "FxF"),
        polynomial_quotient([1, 0], tower, "complex_like"),
        make_algebra(2, tower, [[[1, 0], [0, 1]], [[0, 0], [0, 0]]], "left_unit"),
        make_algebra(2, tower, [[[1, 0], [0, 0]], [[0, 1], [0, 0]]], "right_unit"),
        make_algebra(2, tower, [[[0, 1], [0, 0]], [[0, 0], [0, 0]]], "nil_square"),
    ]
    for _ in range(3):
        a, b = Fraction(rng.randint(-6, 6)), Fraction(rng.randint(-6, 6))
        out.append(polynomial_quotient([a, b], tower))
    return out


def random_invertible(rng: random.Random, n: int, tower: FieldTower = QQ, spread: int = 3) -> Matrix:
    gens = [tower.gen(i) for i in range(tower.depth)]
    while True:
        rows = []
        for _ in range(n):
            row = []
            for _ in range(n):
                x = tower(Fraction(rng.randint(-spread, spread), rng.randint(1, 2)))
                if gens and rng.random() < 0.3:
                    x = x + rng.choice(gens) * rng.randint(-2, 2)
                row.append(x)
            rows.append(row)
        P = Matrix(rows, tower, n)
        if det(P):
            return P


@dataclass
class FuzzCase:
    family: str
    algebra: Algebra


def fuzz_three_dim(count: int = 60, seed: int = 0) -> Iterator[FuzzCase]:
    """Associative 3-dim algebras from three families, cycled until ``count``."""
    rng = random.Random(seed)
    base3 = [e for e in catalog() if e.algebra.n == 3]
    twos = two_dim_algebras(QQ, rng)
    produced = 0
    k = 0
    while produced < count:
        family = k % 3
        k += 1
        if family == 0:
            coeffs = [Fraction(rng.randint(-4, 4)) for _ in range(3)]
            if rng.random() < 0.5:
                # force a rational root so D has a visible linear factor
                r = Fraction(rng.randint(-3, 3))
                s, t = Fraction(rng.randint(-3, 3)), Fraction(rng.randint(-3, 3))
                coeffs = [-r * t, t - r * s, s - r]  # (X - r)(X^2 + sX + t)
            A = polynomial_quotient(coeffs)
            yield FuzzCase("quotient", A)
        elif family == 1:
            B = rng.choice(twos)
            A = direct_sum(field_algebra(B.tower), B, f"F+{B.name}")
            yield FuzzCase("direct_sum", A)
        else:
            entry = rng.choice(base3)
            A0 = entry.algebra
            P = random_invertible(rng, 3, A0.tower)
            yield FuzzCase("basis_change", change_basis(A0, P, f"{A0.name}_rebased"))
        produced += 1
