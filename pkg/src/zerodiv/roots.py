"""Univariate polynomials over a tower and their roots inside the tower.

Coefficient lists are stored constant term first. Roots of degree <= 2
polynomials come from the quadratic formula. For higher degrees every root
``r`` of a monic, square-free ``s`` is recovered from its real conjugates:
after scaling so that ``u = L*r`` is an algebraic integer, the trace
``Tr(u*sqrt(S))`` is an integer for every basis element ``sqrt(S)``, so the
coordinates of ``u`` are pinned down by rounding numerically evaluated
traces. Each candidate is then verified exactly, so numerics can only cost
completeness, never soundness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Sequence

import mpmath

from .errors import DegreeTooHigh, ZeroPolynomial
from .field import FieldElement, FieldTower

MAX_DEGREE = 4


def utrim(p: Sequence[FieldElement]) -> list[FieldElement]:
    p = list(p)
    while len(p) > 1 and not p[-1]:
        p.pop()
    return p


def udeg(p: Sequence[FieldElement]) -> int:
    p = utrim(p)
    return -1 if len(p) == 1 and not p[0] else len(p) - 1


def umul(a: Sequence[FieldElement], b: Sequence[FieldElement]) -> list[FieldElement]:
    zero = (a[0] if a else b[0]).tower.zero
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
    return out


def usub(a: Sequence[FieldElement], b: Sequence[FieldElement]) -> list[FieldElement]:
    zero = a[0].tower.zero
    n = max(len(a), len(b))
    a = list(a) + [zero] * (n - len(a))
    b = list(b) + [zero] * (n - len(b))
    return utrim([x - y for x, y in zip(a, b)])


def udivmod(a: Sequence[FieldElement], b: Sequence[FieldElement]) -> tuple[list, list]:
    a, b = utrim(a), utrim(b)
    db = udeg(b)
    if db < 0:
        raise ZeroPolynomial("division by the zero polynomial")
    zero = b[0].tower.zero
    inv = b[db].inverse()
    rem = list(a)
    quot = [zero] * max(len(a) - db, 1)
    for k in range(len(a) - 1 - db, -1, -1):
        c = rem[k + db] * inv
        quot[k] = c
        if c:
            for j in range(db + 1):
                rem[k + j] = rem[k + j] - c * b[j]
    return utrim(quot), utrim(rem[:db] if db > 0 else [zero])


def umonic(p: Sequence[FieldElement]) -> list[FieldElement]:
    p = utrim(p)
    inv = p[-1].inverse()
    return [c * inv for c in p]


def ugcd(a: Sequence[FieldElement], b: Sequence[FieldElement]) -> list[FieldElement]:
    a, b = utrim(a), utrim(b)
    while udeg(b) >= 0:
        a, b = b, udivmod(a, b)[1]
    return umonic(a)


def uderiv(p: Sequence[FieldElement]) -> list[FieldElement]:
    if len(p) == 1:
        return [p[0].tower.zero]
    return [c * k for k, c in enumerate(p) if k]


def ueval(p: Sequence[FieldElement], x: FieldElement) -> FieldElement:
    acc = p[-1].tower.zero
    for c in reversed(p):
        acc = acc * x + c
    return acc


@dataclass
class RootReport:
    """Roots lying in the tower, repeated by multiplicity, in increasing order.

    ``complete`` is False only when a numerical isolation step failed to
    converge, in which case roots may be missing.
    """

    roots: list[FieldElement] = field(default_factory=list)
    complete: bool = True

    def distinct(self) -> list[FieldElement]:
        out: list[FieldElement] = []
        for r in self.roots:
            if not out or out[-1] != r:
                out.append(r)
        return out


def univariate_roots(p, max_degree: int = MAX_DEGREE) -> RootReport:
    """All roots in the tower of a univariate polynomial.

    ``p`` is either a one-variable MultiPoly or a coefficient list
    (constant term first).
    """
    coeffs = p.univariate_coeffs() if hasattr(p, "univariate_coeffs") else list(p)
    coeffs = utrim(coeffs)
    if udeg(coeffs) < 0:
        raise ZeroPolynomial("the zero polynomial has every element as a root")
    if udeg(coeffs) > max_degree:
        raise DegreeTooHigh(f"degree {udeg(coeffs)} exceeds {max_degree}")
    tower = coeffs[0].tower
    roots: list[FieldElement] = []
    k = next(i for i, c in enumerate(coeffs) if c)
    roots.extend([tower.zero] * k)
    coeffs = coeffs[k:]
    if len(coeffs) == 1:
        return RootReport(roots, True)
    square_free = udivmod(coeffs, ugcd(coeffs, uderiv(coeffs)))[0]
    distinct, complete = _distinct_roots(square_free)
    for r in distinct:
        lin = [-r, tower.one]
        while True:
            q, rem = udivmod(coeffs, lin)
            if udeg(rem) >= 0:
                break
            roots.append(r)
            coeffs = q
    roots.sort(key=lambda x: x.approx(30))
    return RootReport(roots, complete)


def _distinct_roots(s: list[FieldElement]) -> tuple[list[FieldElement], bool]:
    d = udeg(s)
    if d == 1:
        return [-s[0] / s[1]], True
    if d == 2:
        c, b, a = s
        disc = b * b - a * c * 4
        if disc.sign() < 0:
            return [], True
        root = disc.try_sqrt()
        if root is None:
            return [], True
        return [(-b + root) / (a * 2), (-b - root) / (a * 2)], True
    return _tower_roots(s)


def _chi(e: int, mask: int) -> int:
    return -1 if bin(e & mask).count("1") % 2 else 1


def _real_roots(coeffs: list[mpmath.mpf], dps: int) -> list[mpmath.mpf] | None:
    for attempt in range(3):
        with mpmath.workdps(dps * (attempt + 1)):
            try:
                found = mpmath.polyroots(
                    list(reversed(coeffs)), maxsteps=100 * (attempt + 1), extraprec=2 * dps
                )
            except mpmath.libmp.NoConvergence:
                continue
            tol = mpmath.mpf(10) ** (-(dps // 2))
            return [mpmath.re(r) for r in found if abs(mpmath.im(r)) <= tol * (1 + abs(r))]
    return None


def _tower_roots(s: list[FieldElement]) -> tuple[list[FieldElement], bool]:
    tower: FieldTower = s[0].tower
    s = umonic(s)
    m = len(s) - 1
    L = 1
    for c in s:
        for x in c.coords:
            L = lcm(L, x.denominator)
    # q(u) = L^m s(u/L) is monic with integral coefficients
    q = [c * (L ** (m - i)) for i, c in enumerate(s)]
    digits = max(len(str(abs(x.numerator))) for c in q for x in c.coords)
    dps = 30 + 2 * digits
    t = tower.depth
    n_emb = 1 << t
    conj_roots = []
    complete = True
    for e in range(n_emb):
        signs = [-1 if e >> i & 1 else 1 for i in range(t)]
        with mpmath.workdps(dps):
            approx = [c.embed_signs(signs).approx(dps) for c in q]
        found = _real_roots(approx, dps)
        if found is None:
            return [], False
        conj_roots.append(found)
    tol = mpmath.mpf(10) ** (-(dps // 3))
    out: list[FieldElement] = []
    with mpmath.workdps(dps):
        roots_d = [mpmath.sqrt(tower.basis_value(mask)) for mask in range(n_emb)]
        for combo in itertools.product(*conj_roots):
            coords = []
            for mask in range(n_emb):
                z = roots_d[mask] * mpmath.fsum(_chi(e, mask) * combo[e] for e in range(n_emb))
                zi = int(mpmath.nint(z))
                if abs(z - zi) > tol:
                    break
                coords.append(Fraction(zi, n_emb * tower.basis_value(mask) * L))
            else:
                r = FieldElement(tower, tuple(coords))
                if r not in out and ueval(s, r).is_zero():
                    out.append(r)
    return out, complete
