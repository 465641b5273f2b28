"""Sparse exact multivariate polynomials over a FieldTower.

Terms are kept in a dict from exponent tuples to nonzero coefficients.
Printing and "leading term" use graded-lex order with x1 > x2 > ... .
"""

from __future__ import annotations

from math import comb
from numbers import Rational
from typing import Mapping, Sequence

from .errors import ArityMismatch, NonSquare, NotHomogeneous, PreconditionError
from .field import FieldElement, FieldTower
from .linalg import Matrix, Subspace, kernel

Exponent = tuple  # tuple[int, ...]


def grlex_key(exp: Exponent) -> tuple:
    return (sum(exp), exp)


def default_names(n: int) -> list[str]:
    return [f"x{i + 1}" for i in range(n)]


class MultiPoly:
    __slots__ = ("nvars", "tower", "terms")

    def __init__(self, nvars: int, tower: FieldTower, terms: Mapping[Exponent, FieldElement] = ()):
        self.nvars = nvars
        self.tower = tower
        clean = {}
        for exp, c in dict(terms).items():
            if len(exp) != nvars:
                raise ArityMismatch(f"exponent {exp} in {nvars} variables")
            c = tower(c)
            if c:
                clean[tuple(exp)] = c
        self.terms = clean

    # -- constructors ---------------------------------------------------------
    @classmethod
    def zero(cls, nvars: int, tower: FieldTower) -> MultiPoly:
        return cls(nvars, tower)

    @classmethod
    def constant(cls, c, nvars: int, tower: FieldTower) -> MultiPoly:
        return cls(nvars, tower, {(0,) * nvars: c})

    @classmethod
    def var(cls, i: int, nvars: int, tower: FieldTower) -> MultiPoly:
        exp = [0] * nvars
        exp[i] = 1
        return cls(nvars, tower, {tuple(exp): tower.one})

    @classmethod
    def variables(cls, nvars: int, tower: FieldTower) -> list[MultiPoly]:
        return [cls.var(i, nvars, tower) for i in range(nvars)]

    @classmethod
    def linear(cls, coeffs: Sequence, tower: FieldTower) -> MultiPoly:
        n = len(coeffs)
        return cls(n, tower, {tuple(int(i == j) for j in range(n)): c for i, c in enumerate(coeffs)})

    @classmethod
    def _raw(cls, nvars: int, tower: FieldTower, terms: dict) -> MultiPoly:
        p = cls.__new__(cls)
        p.nvars, p.tower, p.terms = nvars, tower, terms
        return p

    # -- predicates -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def coefficient(self, exp: Exponent) -> FieldElement:
        return self.terms.get(tuple(exp), self.tower.zero)

    def sorted_terms(self) -> list[tuple[Exponent, FieldElement]]:
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def leading_term(self) -> tuple[Exponent, FieldElement]:
        if not self.terms:
            raise PreconditionError("zero polynomial has no leading term")
        exp = max(self.terms, key=grlex_key)
        return exp, self.terms[exp]

    # -- arithmetic -------------------------------------------------------------
    def _check(self, other: MultiPoly) -> None:
        if other.nvars != self.nvars:
            raise ArityMismatch(f"{self.nvars} vs {other.nvars} variables")

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Rational, FieldElement)):
            other = MultiPoly.constant(other, self.nvars, self.tower)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def _coerce(self, other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        return MultiPoly.constant(other, self.nvars, self.tower)

    def __add__(self, other) -> MultiPoly:
        other = self._coerce(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e)
            s = c if s is None else s + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return MultiPoly._raw(self.nvars, self.tower, terms)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly._raw(self.nvars, self.tower, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> MultiPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> MultiPoly:
        return (-self) + other

    def scale(self, c) -> MultiPoly:
        c = self.tower(c)
        if not c:
            return MultiPoly.zero(self.nvars, self.tower)
        return MultiPoly._raw(self.nvars, self.tower, {e: x * c for e, x in self.terms.items()})

    def __mul__(self, other) -> MultiPoly:
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        self._check(other)
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e)
                terms[e] = c1 * c2 if s is None else s + c1 * c2
        return MultiPoly._raw(self.nvars, self.tower, {e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, c) -> MultiPoly:
        return self.scale(self.tower(c).inverse())

    def __pow__(self, k: int) -> MultiPoly:
        result = MultiPoly.constant(1, self.nvars, self.tower)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- evaluation and substitution --------------------------------------------
    def evaluate(self, point: Sequence) -> FieldElement:
        if len(point) != self.nvars:
            raise ArityMismatch(f"point of length {len(point)} for {self.nvars} variables")
        point = [self.tower(x) for x in point]
        powers = [[self.tower.one] for _ in point]
        total = self.tower.zero
        for exp, c in self.terms.items():
            term = c
            for i, k in enumerate(exp):
                if k:
                    pw = powers[i]
                    while len(pw) <= k:
                        pw.append(pw[-1] * point[i])
                    term = term * pw[k]
            total = total + term
        return total

    __call__ = evaluate

    def compose(self, subs: Sequence[MultiPoly]) -> MultiPoly:
        """Substitute ``subs[i]`` for variable i (all subs share an arity)."""
        if len(subs) != self.nvars:
            raise ArityMismatch(f"{len(subs)} substitutions for {self.nvars} variables")
        m = subs[0].nvars if subs else 0
        one = MultiPoly.constant(1, m, self.tower)
        powers = [[one] for _ in subs]
        total = MultiPoly.zero(m, self.tower)
        for exp, c in self.terms.items():
            term = MultiPoly.constant(c, m, self.tower)
            for i, k in enumerate(exp):
                if k:
                    pw = powers[i]
                    while len(pw) <= k:
                        pw.append(pw[-1] * subs[i])
                    term = term * pw[k]
            total = total + term
        return total

    def linear_change(self, P: Matrix) -> MultiPoly:
        """The polynomial y -> p(P y)."""
        ys = MultiPoly.variables(P.ncols, self.tower)
        subs = []
        for row in P.rows:
            s = MultiPoly.zero(P.ncols, self.tower)
            for c, y in zip(row, ys):
                if c:
                    s = s + y.scale(c)
            subs.append(s)
        return self.compose(subs)

    def along_line(self, base: Sequence, direction: Sequence) -> list[FieldElement]:
        """Coefficients (constant first) of t -> p(base + t*direction)."""
        from .roots import umul, utrim

        zero = self.tower.zero
        lines = [[self.tower(b), self.tower(d)] for b, d in zip(base, direction)]
        powers = [[[self.tower.one]] for _ in lines]
        total = [zero]
        for exp, c in self.terms.items():
            term = [c]
            for i, k in enumerate(exp):
                if k:
                    pw = powers[i]
                    while len(pw) <= k:
                        pw.append(umul(pw[-1], lines[i]))
                    term = umul(term, pw[k])
            if len(term) > len(total):
                total = total + [zero] * (len(term) - len(total))
            for j, x in enumerate(term):
                total[j] = total[j] + x
        return utrim(total)

    def univariate_coeffs(self) -> list[FieldElement]:
        """Coefficients (constant first) of a polynomial in one variable."""
        if self.nvars != 1:
            raise ArityMismatch("expected a univariate polynomial")
        out = [self.tower.zero] * (self.degree + 1)
        for (k,), c in self.terms.items():
            out[k] = c
        return out

    @classmethod
    def from_univariate(cls, coeffs: Sequence, tower: FieldTower) -> MultiPoly:
        return cls(1, tower, {(k,): c for k, c in enumerate(coeffs)})

    # -- printing -------------------------------------------------------------
    def format(self, names: Sequence[str] | None = None) -> str:
        names = list(names) if names else default_names(self.nvars)
        parts = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(exp) if k
            )
            if c.is_rational() or len(c.terms()) == 1:
                text = str(c)
                neg = text.startswith("-")
                mag = text[1:] if neg else text
            else:
                neg, mag = False, f"({c})"
            if mono:
                body = mono if mag == "1" else f"{mag}*{mono}"
            else:
                body = mag
            if not parts:
                parts.append("-" + body if neg else body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts) if parts else "0"

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"MultiPoly({self.format()!r})"


class LinearForm:
    """Nonzero linear form normalized so its first nonzero coefficient is 1."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[FieldElement]):
        coeffs = tuple(coeffs)
        lead = next((c for c in coeffs if c), None)
        if lead is None:
            raise PreconditionError("linear form must be nonzero")
        inv = lead.inverse()
        self.coeffs = tuple(c * inv for c in coeffs)

    @classmethod
    def from_poly(cls, p: MultiPoly) -> LinearForm:
        if p.degree != 1 or not p.is_homogeneous():
            raise PreconditionError(f"{p} is not a linear form")
        n = p.nvars
        return cls([p.coefficient(tuple(int(i == j) for j in range(n))) for i in range(n)])

    @property
    def tower(self) -> FieldTower:
        return self.coeffs[0].tower

    @property
    def nvars(self) -> int:
        return len(self.coeffs)

    @property
    def pivot(self) -> int:
        return next(i for i, c in enumerate(self.coeffs) if c)

    def to_poly(self) -> MultiPoly:
        return MultiPoly.linear(self.coeffs, self.tower)

    def evaluate(self, v: Sequence) -> FieldElement:
        total = self.tower.zero
        for c, x in zip(self.coeffs, v):
            if c:
                total = total + c * x
        return total

    def kernel(self) -> Subspace:
        return kernel(Matrix([self.coeffs], self.tower, self.nvars))

    def sort_key(self) -> tuple:
        """Graded-lex style key: pivot position, then coefficient values."""
        return (self.pivot, tuple(tuple(c.coords) for c in self.coeffs))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LinearForm) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def format(self, names: Sequence[str] | None = None) -> str:
        return self.to_poly().format(names)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"LinearForm({self.format()!r})"


def det_poly_matrix(M: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """Determinant of a square matrix of polynomials by memoized cofactor expansion."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise NonSquare("polynomial matrix must be square")
    if n == 0:
        raise NonSquare("empty matrix")
    nvars, tower = M[0][0].nvars, M[0][0].tower
    memo: dict[tuple[int, int], MultiPoly] = {}

    def minor(row: int, cols: int) -> MultiPoly:
        # determinant of rows row.. with the column set `cols` (bitmask)
        if row == n:
            return MultiPoly.constant(1, nvars, tower)
        key = (row, cols)
        if key in memo:
            return memo[key]
        total = MultiPoly.zero(nvars, tower)
        sign = 1
        for j in range(n):
            if cols >> j & 1:
                entry = M[row][j]
                if entry:
                    sub = minor(row + 1, cols & ~(1 << j))
                    if sub:
                        term = entry * sub
                        total = total + term if sign > 0 else total - term
                sign = -sign
        memo[key] = total
        return total

    return minor(0, (1 << n) - 1)


def _pivot_substitution(f: LinearForm, nvars: int) -> list[MultiPoly]:
    xs = MultiPoly.variables(nvars, f.tower)
    p = f.pivot
    repl = MultiPoly.zero(nvars, f.tower)
    for j, c in enumerate(f.coeffs):
        if j != p and c:
            repl = repl - xs[j].scale(c)
    xs[p] = repl
    return xs


def divides_linear(f: LinearForm, q: MultiPoly) -> bool:
    """Does f divide q? Decided by restricting q to the hyperplane f = 0."""
    if f.nvars != q.nvars:
        raise ArityMismatch(f"{f.nvars} vs {q.nvars} variables")
    return q.compose(_pivot_substitution(f, q.nvars)).is_zero()


def divide_linear(q: MultiPoly, f: LinearForm) -> tuple[MultiPoly, MultiPoly]:
    """Division with remainder by f, eliminating f's pivot variable.

    The remainder does not involve the pivot variable; it is zero iff f | q.
    """
    if f.nvars != q.nvars:
        raise ArityMismatch(f"{f.nvars} vs {q.nvars} variables")
    p = f.pivot
    rest = [(j, c) for j, c in enumerate(f.coeffs) if j != p and c]
    work = dict(q.terms)
    quot: dict = {}
    while True:
        cands = [e for e in work if e[p] > 0]
        if not cands:
            break
        exp = max(cands, key=lambda e: (e[p], grlex_key(e)))
        c = work.pop(exp)
        down = exp[:p] + (exp[p] - 1,) + exp[p + 1:]
        s = quot.get(down)
        quot[down] = c if s is None else s + c
        for j, a in rest:
            e = list(down)
            e[j] += 1
            e = tuple(e)
            v = work.get(e)
            v = -(c * a) if v is None else v - c * a
            if v:
                work[e] = v
            else:
                work.pop(e, None)
    quotient = MultiPoly(q.nvars, q.tower, quot)
    return quotient, MultiPoly._raw(q.nvars, q.tower, work)


def square_root_up_to_scalar(p: MultiPoly) -> tuple[FieldElement, MultiPoly] | None:
    """Find (c, q) with p = c*q^2 and q's leading coefficient 1, if possible."""
    if p.is_zero() or not p.is_homogeneous() or p.degree % 2:
        return None
    exp, lc = p.leading_term()
    if any(k % 2 for k in exp):
        return None
    r = p / lc
    half = tuple(k // 2 for k in exp)
    two = p.tower(2)
    q = MultiPoly(p.nvars, p.tower, {half: p.tower.one})
    limit = comb(p.degree // 2 + p.nvars - 1, p.nvars - 1)
    for _ in range(limit + 1):
        rem = r - q * q
        if rem.is_zero():
            return lc, q
        e, c = rem.leading_term()
        new = tuple(a - b for a, b in zip(e, half))
        if min(new) < 0 or grlex_key(new) >= grlex_key(half):
            return None
        q = q + MultiPoly(p.nvars, p.tower, {new: c / two})
    return None


def require_homogeneous(p: MultiPoly) -> None:
    if not p.is_homogeneous():
        raise NotHomogeneous(f"{p} is not homogeneous")
