"""Exact arithmetic in towers Q(sqrt d1)(sqrt d2)... of real quadratic extensions.

An element of a tower with radicands ``d1..dt`` is stored densely as ``2**t``
rationals, one per product ``prod(sqrt(di) for i in S)`` over subsets ``S``
encoded as bitmasks (bit ``i`` <-> radicand ``i``). Every real embedding used
here takes the positive square roots.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt, prod
from numbers import Rational
from typing import Iterable, Sequence

import mpmath

from .errors import (
    DivisionByZero,
    NegativeRadicand,
    NotSquareFree,
    PreconditionError,
    RedundantRadicand,
    TowerMismatch,
    TowerTooDeep,
)

#: depth up to which root finding is guaranteed complete
SUPPORTED_DEPTH = 2
#: hard cap; depths in (SUPPORTED_DEPTH, MAX_DEPTH] are best effort
MAX_DEPTH = 4

_INTERVAL_BITS = (64, 256)


def is_square_free(d: int) -> bool:
    if d < 1:
        return False
    p = 2
    while p * p <= d:
        if d % (p * p) == 0:
            return False
        p += 1
    return True


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


class FieldTower:
    """Q adjoined the square roots of ``radicands``, in order.

    Construct validated towers with :func:`make_tower`; the bare constructor
    trusts its input.
    """

    __slots__ = ("radicands", "depth", "degree", "_values", "_zero", "_one")

    def __init__(self, radicands: Iterable[int] = ()):
        self.radicands = tuple(int(d) for d in radicands)
        self.depth = len(self.radicands)
        self.degree = 1 << self.depth
        self._values = tuple(
            prod(d for i, d in enumerate(self.radicands) if mask >> i & 1)
            for mask in range(self.degree)
        )
        self._zero = FieldElement(self, (Fraction(0),) * self.degree)
        self._one = FieldElement(self, (Fraction(1),) + (Fraction(0),) * (self.degree - 1))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldTower) and self.radicands == other.radicands

    def __hash__(self) -> int:
        return hash(("FieldTower", self.radicands))

    def __repr__(self) -> str:
        return f"make_tower({list(self.radicands)})"

    def __str__(self) -> str:
        if not self.radicands:
            return "Q"
        return "Q(" + ", ".join(f"sqrt({d})" for d in self.radicands) + ")"

    def basis_value(self, mask: int) -> int:
        """The integer whose positive square root is basis element ``mask``."""
        return self._values[mask]

    def basis_label(self, mask: int) -> str:
        return "1" if mask == 0 else f"sqrt({self._values[mask]})"

    @property
    def zero(self) -> FieldElement:
        return self._zero

    @property
    def one(self) -> FieldElement:
        return self._one

    def is_subtower_of(self, other: FieldTower) -> bool:
        return other.radicands[: self.depth] == self.radicands

    def lower(self) -> FieldTower:
        return FieldTower(self.radicands[:-1])

    def element(self, coords: Sequence) -> FieldElement:
        if len(coords) != self.degree:
            raise PreconditionError(f"expected {self.degree} coordinates, got {len(coords)}")
        return FieldElement(self, tuple(Fraction(c) for c in coords))

    def __call__(self, value) -> FieldElement:
        """Coerce an int, Fraction, string or subtower element into this tower."""
        if isinstance(value, FieldElement):
            return value.lift_to(self)
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, (int, Rational)):
            return FieldElement(self, (Fraction(value),) + (Fraction(0),) * (self.degree - 1))
        raise TypeError(f"cannot coerce {type(value).__name__} into {self}")

    def gen(self, i: int) -> FieldElement:
        """sqrt(radicands[i])."""
        coords = [Fraction(0)] * self.degree
        coords[1 << i] = Fraction(1)
        return FieldElement(self, tuple(coords))

    def sqrt(self, value) -> FieldElement:
        """Square root of ``value`` in this tower; raises if it does not exist."""
        root = self(value).try_sqrt()
        if root is None:
            raise PreconditionError(f"sqrt({value}) is not in {self}")
        return root

    def parse(self, text: str) -> FieldElement:
        from .syntax import parse_scalar

        return parse_scalar(text, self)


def make_tower(radicands: Iterable[int] = ()) -> FieldTower:
    """Validated tower constructor.

    >>> str(make_tower([2, 3]))
    'Q(sqrt(2), sqrt(3))'
    """
    radicands = [int(d) for d in radicands]
    if len(radicands) > MAX_DEPTH:
        raise TowerTooDeep(f"depth {len(radicands)} exceeds the maximum {MAX_DEPTH}")
    tower = FieldTower(())
    for d in radicands:
        if d < 2:
            raise PreconditionError(f"radicand {d} must be >= 2")
        if not is_square_free(d):
            raise NotSquareFree(f"radicand {d} is not square-free")
        if tower(d).try_sqrt() is not None:
            raise RedundantRadicand(f"sqrt({d}) already lies in {tower}")
        tower = FieldTower(tower.radicands + (d,))
    return tower


class FieldElement:
    """Immutable exact element of a :class:`FieldTower`."""

    __slots__ = ("tower", "coords")

    def __init__(self, tower: FieldTower, coords: tuple[Fraction, ...]):
        self.tower = tower
        self.coords = coords

    # -- coercion -----------------------------------------------------------
    def lift_to(self, tower: FieldTower) -> FieldElement:
        if tower == self.tower:
            return self
        if not self.tower.is_subtower_of(tower):
            raise TowerMismatch(f"{self.tower} is not a subfield of {tower}")
        pad = (Fraction(0),) * (tower.degree - self.tower.degree)
        return FieldElement(tower, self.coords + pad)

    def _pair(self, other) -> tuple[FieldElement, FieldElement]:
        if isinstance(other, FieldElement):
            if other.tower == self.tower:
                return self, other
            if other.tower.is_subtower_of(self.tower):
                return self, other.lift_to(self.tower)
            if self.tower.is_subtower_of(other.tower):
                return self.lift_to(other.tower), other
            raise TowerMismatch(f"{self.tower} vs {other.tower}")
        if isinstance(other, (int, Rational)):
            return self, self.tower(other)
        return NotImplemented  # type: ignore[return-value]

    # -- predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise PreconditionError(f"{self} is not rational")
        return self.coords[0]

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            if other.tower == self.tower:
                return self.coords == other.coords
        elif not isinstance(other, (int, Rational)):
            return NotImplemented
        try:
            a, b = self._pair(other)
        except TowerMismatch:
            return False
        return a.coords == b.coords

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coords[0])
        coords = list(self.coords)
        while not coords[-1]:
            coords.pop()
        return hash(tuple(coords))

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        pair = self._pair(other)
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        return FieldElement(a.tower, tuple(x + y for x, y in zip(a.coords, b.coords)))

    __radd__ = __add__

    def __neg__(self) -> FieldElement:
        return FieldElement(self.tower, tuple(-x for x in self.coords))

    def __sub__(self, other):
        pair = self._pair(other)
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        return FieldElement(a.tower, tuple(x - y for x, y in zip(a.coords, b.coords)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            c = Fraction(other)
            return FieldElement(self.tower, tuple(x * c for x in self.coords))
        pair = self._pair(other)
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        tower = a.tower
        if tower.depth == 0:
            return FieldElement(tower, (a.coords[0] * b.coords[0],))
        out = [Fraction(0)] * tower.degree
        values = tower._values
        for s, x in enumerate(a.coords):
            if not x:
                continue
            for t, y in enumerate(b.coords):
                if y:
                    out[s ^ t] += x * y * values[s & t]
        return FieldElement(tower, tuple(out))

    __rmul__ = __mul__

    def conjugate(self, i: int) -> FieldElement:
        """Apply sqrt(d_i) -> -sqrt(d_i)."""
        bit = 1 << i
        return FieldElement(
            self.tower, tuple(-x if m & bit else x for m, x in enumerate(self.coords))
        )

    def embed_signs(self, signs: Sequence[int]) -> FieldElement:
        """Apply the automorphism sqrt(d_i) -> signs[i] * sqrt(d_i)."""
        out = []
        for m, x in enumerate(self.coords):
            flip = 1
            for i, s in enumerate(signs):
                if m >> i & 1 and s < 0:
                    flip = -flip
            out.append(x if flip > 0 else -x)
        return FieldElement(self.tower, tuple(out))

    def inverse(self) -> FieldElement:
        if self.is_zero():
            raise DivisionByZero("division by zero in " + str(self.tower))
        num = self.tower.one
        a = self
        for i in reversed(range(self.tower.depth)):
            c = a.conjugate(i)
            num = num * c
            a = a * c
        return num * (1 / a.coords[0])

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            if other == 0:
                raise DivisionByZero("division by zero")
            c = Fraction(other)
            return FieldElement(self.tower, tuple(x / c for x in self.coords))
        pair = self._pair(other)
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int) -> FieldElement:
        if k < 0:
            return self.inverse() ** (-k)
        result = self.tower.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- ordering -----------------------------------------------------------
    def sign(self) -> int:
        """Sign under the positive-root real embedding (exact)."""
        if self.is_zero():
            return 0
        if self.tower.depth == 0:
            return 1 if self.coords[0] > 0 else -1
        for bits in _INTERVAL_BITS:
            lo, hi = self._interval(bits)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
        return self._exact_sign()

    def _interval(self, bits: int) -> tuple[Fraction, Fraction]:
        lo = hi = Fraction(0)
        scale = 1 << bits
        for mask, c in enumerate(self.coords):
            if not c:
                continue
            v = self.tower.basis_value(mask)
            r = isqrt(v * scale * scale)
            if r * r == v * scale * scale:
                a = b = Fraction(r, scale)
            else:
                a, b = Fraction(r, scale), Fraction(r + 1, scale)
            if c > 0:
                lo += c * a
                hi += c * b
            else:
                lo += c * b
                hi += c * a
        return lo, hi

    def _exact_sign(self) -> int:
        u, v = self.split()
        su, sv = u.sign(), v.sign()
        if sv == 0 or su == sv:
            return su
        if su == 0:
            return sv
        d = self.tower.radicands[-1]
        return su * (u * u - v * v * d).sign()

    def __lt__(self, other) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other) -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other) -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other) -> bool:
        return (self - other).sign() >= 0

    def __abs__(self) -> FieldElement:
        return -self if self.sign() < 0 else self

    # -- square roots -------------------------------------------------------
    def split(self) -> tuple[FieldElement, FieldElement]:
        """Write self = u + v*sqrt(top radicand) with u, v in the lower tower."""
        lower = self.tower.lower()
        half = lower.degree
        return FieldElement(lower, self.coords[:half]), FieldElement(lower, self.coords[half:])

    def try_sqrt(self) -> FieldElement | None:
        """The non-negative square root if it lies in the tower, else None."""
        if self.sign() < 0:
            raise NegativeRadicand(f"{self} is negative")
        return _sqrt(self)

    # -- numerics -----------------------------------------------------------
    def approx(self, dps: int = 30) -> mpmath.mpf:
        with mpmath.workdps(dps):
            total = mpmath.mpf(0)
            for mask, c in enumerate(self.coords):
                if c:
                    term = mpmath.mpf(c.numerator) / c.denominator
                    if mask:
                        term *= mpmath.sqrt(self.tower.basis_value(mask))
                    total += term
            return +total

    def __float__(self) -> float:
        return float(self.approx(20))

    # -- printing -----------------------------------------------------------
    def terms(self) -> list[tuple[Fraction, int]]:
        return [(c, m) for m, c in enumerate(self.coords) if c]

    def __str__(self) -> str:
        parts = []
        for c, mask in self.terms():
            mag = abs(c)
            if mask == 0:
                body = str(mag)
            elif mag == 1:
                body = self.tower.basis_label(mask)
            else:
                body = f"{mag}*{self.tower.basis_label(mask)}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"FieldElement({str(self)!r} in {self.tower})"


QQ = FieldTower(())


def _sqrt(a: FieldElement) -> FieldElement | None:
    if a.is_zero():
        return a
    if a.sign() < 0:
        return None
    tower = a.tower
    if tower.depth == 0:
        r = _rational_sqrt(a.coords[0])
        return None if r is None else tower(r)
    u, v = a.split()
    d = tower.radicands[-1]
    root_d = tower.gen(tower.depth - 1)
    if v.is_zero():
        r = _sqrt(u)
        if r is not None:
            return r.lift_to(tower)
        w = _sqrt(u / d)
        return None if w is None else w.lift_to(tower) * root_d
    s = _sqrt(u * u - v * v * d)
    if s is None:
        return None
    for half in ((u + s) / 2, (u - s) / 2):
        x = _sqrt(half)
        if x is None or x.is_zero():
            continue
        y = v / (x * 2)
        r = x.lift_to(tower) + y.lift_to(tower) * root_d
        if r * r == a:
            return r if r.sign() >= 0 else -r
    return None
