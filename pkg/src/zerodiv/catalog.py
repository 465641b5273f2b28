"""Built-in algebras with regression expectations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .algebra import Algebra, make_algebra
from .field import QQ, FieldTower, make_tower


@dataclass(frozen=True)
class Expected:
    tame: bool | None
    proper: bool
    component_dims: tuple[int, ...] | None  # sorted; None when Z is not a subspace union
    splits: str


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    description: str
    build: Callable[[], Algebra]
    expected: Expected | None = None

    @property
    def algebra(self) -> Algebra:
        return self.build()


def _table(n: int, tower: FieldTower, rules: dict) -> list:
    """Structure constants from {(i, j): {k: coeff}} (missing products are 0)."""
    table = [[[tower.zero] * n for _ in range(n)] for _ in range(n)]
    for (i, j), combo in rules.items():
        for k, c in combo.items():
            table[i][j][k] = tower(c)
    return table


def paper_example() -> Algebra:
    """Commutative unital 3-dim algebra over Q(sqrt 2, sqrt 3), identity (1,0,0).

    (a,b,g)*(d,e,f) has coordinates
      a d + (g f - b e)/2 - sqrt(3)/2 (b f + g e)
      (a e + b d) - sqrt(2)/8 (5 g f - b e) - sqrt(6)/8 (b f + g e)
      (a f + g d) + sqrt(6)/8 (g f + 3 b e) - sqrt(2)/8 (b f + g e)
    """
    K = make_tower([2, 3])
    r2, r3, r6 = K.gen(0), K.gen(1), K.gen(0) * K.gen(1)
    b2b3 = {0: -r3 / 2, 1: -r6 / 8, 2: -r2 / 8}
    rules = {
        (0, 0): {0: 1}, (0, 1): {1: 1}, (0, 2): {2: 1},
        (1, 0): {1: 1}, (2, 0): {2: 1},
        (1, 1): {0: K(-1) / 2, 1: r2 / 8, 2: r6 * 3 / 8},
        (1, 2): b2b3, (2, 1): b2b3,
        (2, 2): {0: K(1) / 2, 1: r2 * -5 / 8, 2: r6 / 8},
    }
    return make_algebra(3, K, _table(3, K, rules), "paper_example", ("a", "b", "g"))


def m2_real() -> Algebra:
    """2x2 matrices, basis E11, E12, E21, E22."""
    units = [(0, 0), (0, 1), (1, 0), (1, 1)]
    rules = {}
    for i, (a, b) in enumerate(units):
        for j, (c, d) in enumerate(units):
            if b == c:
                rules[(i, j)] = {units.index((a, d)): 1}
    return make_algebra(4, QQ, _table(4, QQ, rules), "m2_real", ("E11", "E12", "E21", "E22"))


def poly_x3() -> Algebra:
    """F[X]/(X^3), basis 1, X, X^2."""
    rules = {(i, j): {i + j: 1} for i in range(3) for j in range(3) if i + j < 3}
    return make_algebra(3, QQ, _table(3, QQ, rules), "poly_x3", ("one", "X", "X2"))


def split_fff() -> Algebra:
    """F x F x F with componentwise product."""
    rules = {(i, i): {i: 1} for i in range(3)}
    return make_algebra(3, QQ, _table(3, QQ, rules), "split_fff")


def zero_mult(n: int = 3) -> Algebra:
    return make_algebra(n, QQ, _table(n, QQ, {}), "zero_mult")


def lambda_algebra(n: int = 3) -> Algebra:
    """x*y = x_1 y: associative, AA = A, every R(x) has rank <= 1."""
    rules = {(0, j): {j: 1} for j in range(n)}
    return make_algebra(n, QQ, _table(n, QQ, rules), "lambda_algebra")


def quaternions() -> Algebra:
    """Hamilton quaternions over Q, a 4-dim division algebra."""
    # basis 1, i, j, k
    mult = {
        (1, 1): (0, -1), (2, 2): (0, -1), (3, 3): (0, -1),
        (1, 2): (3, 1), (2, 1): (3, -1),
        (2, 3): (1, 1), (3, 2): (1, -1),
        (3, 1): (2, 1), (1, 3): (2, -1),
    }
    rules = {}
    for a in range(4):
        rules[(0, a)] = {a: 1}
        rules[(a, 0)] = {a: 1}
    for (a, b), (k, s) in mult.items():
        rules[(a, b)] = {k: s}
    return make_algebra(4, QQ, _table(4, QQ, rules), "quaternions", ("one", "i", "j", "k"))


def upper_triangular() -> Algebra:
    """Upper-triangular 2x2 matrices, basis E11, E12, E22 (non-commutative)."""
    rules = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 2): {1: 1}, (2, 2): {2: 1}}
    return make_algebra(3, QQ, _table(3, QQ, rules), "upper_triangular", ("E11", "E12", "E22"))


def gaussian_times_q() -> Algebra:
    """Q x Q(i): a rational analogue of the worked example (plane plus line)."""
    rules = {(0, 0): {0: 1}, (1, 1): {1: 1}, (1, 2): {2: 1}, (2, 1): {2: 1}, (2, 2): {1: -1}}
    return make_algebra(3, QQ, _table(3, QQ, rules), "gaussian_times_q")


ENTRIES = [
    CatalogEntry("paper_example", "3-dim commutative unital algebra over Q(sqrt 2, sqrt 3); Z is a plane and a line",
                 paper_example, Expected(True, True, (1, 2), "yes")),
    CatalogEntry("m2_real", "2x2 matrices: associative, non-commutative, not tame",
                 m2_real, Expected(False, True, None, "no")),
    CatalogEntry("poly_x3", "F[X]/(X^3): local, one maximal ideal (X, X^2)",
                 poly_x3, Expected(True, True, (2,), "yes")),
    CatalogEntry("split_fff", "F x F x F: three coordinate planes",
                 split_fff, Expected(True, True, (2, 2, 2), "yes")),
    CatalogEntry("zero_mult", "zero multiplication: AA = 0, so Z = A",
                 zero_mult, Expected(True, False, (3,), "yes")),
    CatalogEntry("lambda_algebra", "x*y = x_1 y: AA = A but D = 0, so Z = A",
                 lambda_algebra, Expected(True, False, (3,), "yes")),
    CatalogEntry("quaternions", "Hamilton quaternions over Q: division algebra, Z = {0}, D = (norm)^2",
                 quaternions, Expected(True, True, (0,), "no")),
    CatalogEntry("upper_triangular", "upper-triangular 2x2 matrices: two maximal left ideals",
                 upper_triangular, Expected(True, True, (2, 2), "yes")),
    CatalogEntry("gaussian_times_q", "Q x Q(i): plane plus line over Q",
                 gaussian_times_q, Expected(True, True, (1, 2), "yes")),
]


def catalog() -> list[CatalogEntry]:
    return list(ENTRIES)


def lookup(name: str) -> CatalogEntry:
    for entry in ENTRIES:
        if entry.name == name:
            return entry
    raise KeyError(name)
