"""Exact arithmetic in the ring of integer Laurent polynomials Z[t, 1/t].

Polynomials are sparse maps from integer exponents to arbitrary-precision
integer coefficients; no floats or rationals appear anywhere.  Matrices
over the ring are thin immutable grids used for Alexander-type matrices,
with determinants computed by signed subset expansion (exact, no division).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Iterable, Mapping, Sequence


class LaurentPoly:
    """A Laurent polynomial with integer coefficients.

    Immutable.  Zero coefficients are never stored; the zero polynomial
    has an empty coefficient map.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        clean: dict[int, int] = {}
        if coeffs:
            for exp, c in coeffs.items():
                if c:
                    clean[int(exp)] = int(c)
        object.__setattr__(self, "_coeffs", clean)

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def term(cls, coeff: int, exp: int = 0) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def t(cls, exp: int = 1) -> "LaurentPoly":
        return cls({exp: 1})

    # -- structure ---------------------------------------------------

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def terms(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs in ascending exponent order."""
        return sorted(self._coeffs.items())

    def coeff(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def min_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no degree bounds")
        return min(self._coeffs)

    @property
    def max_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no degree bounds")
        return max(self._coeffs)

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers are not defined for polynomials")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shifted(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    def scaled(self, c: int) -> "LaurentPoly":
        return LaurentPoly({e: c * v for e, v in self._coeffs.items()})

    def evaluate(self, v: int) -> int:
        """Value at t = v, only for v in {1, -1} (so 1/t stays integral)."""
        if v == 1:
            return sum(self._coeffs.values())
        if v == -1:
            return sum(c if e % 2 == 0 else -c for e, c in self._coeffs.items())
        raise ValueError("Laurent polynomials are integer-valued only at t = 1 or t = -1")

    # -- comparisons ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __repr__(self) -> str:
        return f"LaurentPoly({poly_str(self)!r})"

    def __str__(self) -> str:
        return poly_str(self)


def eval_at(f: LaurentPoly, v: int) -> int:
    return f.evaluate(v)


def poly_str(f: LaurentPoly) -> str:
    """Render with terms in ascending exponent, e.g. ``1 - t + t^2``.

    Negative exponents print as ``t^-2``.
    """
    if f.is_zero:
        return "0"
    parts: list[str] = []
    for e, c in f.terms():
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            var = "t" if e == 1 else f"t^{e}"
            body = var if mag == 1 else f"{mag}*{var}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def normalize_unit(f: LaurentPoly) -> LaurentPoly:
    """Canonical representative of f up to units (signs and powers of t).

    Shifts the lowest exponent to 0 and makes the lowest-degree
    coefficient positive.
    """
    if f.is_zero:
        raise ValueError("the zero polynomial has no unit normalization")
    shift = -f.min_exp
    g = f.shifted(shift)
    if g.coeff(0) < 0:
        g = -g
    return g


# -- dense Z[t] helpers (internal to gcd/division) ------------------------


def _dense(f: LaurentPoly) -> tuple[int, list[int]]:
    """(offset, coefficients) with coefficients[0] the t^offset term."""
    if f.is_zero:
        return 0, []
    lo, hi = f.min_exp, f.max_exp
    return lo, [f.coeff(e) for e in range(lo, hi + 1)]


def _from_dense(offset: int, cs: Sequence[int]) -> LaurentPoly:
    return LaurentPoly({offset + i: c for i, c in enumerate(cs) if c})


def _trim(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _content(cs: Sequence[int]) -> int:
    g = 0
    for c in cs:
        g = gcd(g, c)
    return g


def _primitive(cs: Sequence[int]) -> list[int]:
    g = _content(cs)
    if g <= 1:
        return _trim(list(cs))
    return _trim([c // g for c in cs])


def _prem(f: Sequence[int], g: Sequence[int]) -> list[int]:
    """Pseudo-remainder of f by g over Z[t]: a power of lc(g) times f, mod g.

    Only used up to content, so the extra unit-content factors are harmless.
    """
    r = list(f)
    dg = len(g) - 1
    lg = g[-1]
    while len(r) - 1 >= dg and r:
        lr = r[-1]
        shift = len(r) - 1 - dg
        r = [lg * c for c in r]
        for i, gc in enumerate(g):
            r[shift + i] -= lr * gc
        _trim(r)
    return r


def exact_div(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Exact quotient f / g in the Laurent ring; raises if not divisible."""
    if g.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero:
        return LaurentPoly.zero()
    fo, fc = _dense(f)
    go, gc = _dense(g)
    if len(fc) < len(gc):
        raise ValueError("non-exact polynomial division")
    q = [0] * (len(fc) - len(gc) + 1)
    r = list(fc)
    while len(_trim(r)) >= len(gc) and r:
        lr, lg = r[-1], gc[-1]
        if lr % lg != 0:
            raise ValueError("non-exact polynomial division")
        k = len(r) - len(gc)
        q[k] = lr // lg
        for i, c in enumerate(gc):
            r[k + i] -= q[k] * c
        _trim(r)
    if _trim(r):
        raise ValueError("non-exact polynomial division")
    return _from_dense(fo - go, q)


def poly_gcd(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """gcd in Z[t, 1/t] up to unit, returned in unit-normal form.

    Both arguments are first shifted into Z[t] (units are absorbed), then
    reduced by content/primitive-part splitting with pseudo-remainders.
    gcd(0, 0) = 0.
    """
    if f.is_zero and g.is_zero:
        return LaurentPoly.zero()
    if f.is_zero:
        return normalize_unit(g)
    if g.is_zero:
        return normalize_unit(f)
    _, fc = _dense(f)
    _, gc = _dense(g)
    c = gcd(_content(fc), _content(gc))
    a, b = _primitive(fc), _primitive(gc)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, _primitive(r)
    return normalize_unit(_from_dense(0, [c * x for x in a]))


# -- matrices over the Laurent ring ---------------------------------------


@dataclass(frozen=True)
class LaurentMatrix:
    """A rectangular matrix over Z[t, 1/t].  Rows and columns are explicit
    so that empty matrices (0 x m) keep their shape."""

    rows: int
    cols: int
    entries: tuple[tuple[LaurentPoly, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows:
            raise ValueError("row count mismatch")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("matrix is not rectangular")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[LaurentPoly]], cols: int | None = None) -> "LaurentMatrix":
        grid = tuple(tuple(row) for row in rows)
        if cols is None:
            if not grid:
                raise ValueError("column count required for an empty matrix")
            cols = len(grid[0])
        return cls(len(grid), cols, grid)

    @classmethod
    def identity(cls, n: int) -> "LaurentMatrix":
        one, zero = LaurentPoly.one(), LaurentPoly.zero()
        return cls(n, n, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    def entry(self, i: int, j: int) -> LaurentPoly:
        return self.entries[i][j]

    def __matmul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        grid = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = LaurentPoly.zero()
                for k in range(self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            grid.append(tuple(row))
        return LaurentMatrix(self.rows, other.cols, tuple(grid))

    def __sub__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in matrix difference")
        return LaurentMatrix(
            self.rows,
            self.cols,
            tuple(
                tuple(self.entries[i][j] - other.entries[i][j] for j in range(self.cols))
                for i in range(self.rows)
            ),
        )

    def evaluate(self, v: int) -> list[list[int]]:
        """Integer matrix of values at t = v, for v in {1, -1}."""
        return [[p.evaluate(v) for p in row] for row in self.entries]

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "LaurentMatrix":
        grid = tuple(tuple(self.entries[i][j] for j in col_idx) for i in row_idx)
        return LaurentMatrix(len(row_idx), len(col_idx), grid)


def laurent_det(m: LaurentMatrix) -> LaurentPoly:
    """Determinant by signed column-subset expansion (division-free)."""
    if m.rows != m.cols:
        raise ValueError("determinant requires a square matrix")
    n = m.rows
    if n == 0:
        return LaurentPoly.one()
    states: dict[int, LaurentPoly] = {0: LaurentPoly.one()}
    for i in range(n):
        nxt: dict[int, LaurentPoly] = {}
        for mask, acc in states.items():
            for j in range(n):
                bit = 1 << j
                if mask & bit:
                    continue
                entry = m.entries[i][j]
                if entry.is_zero:
                    continue
                # parity of inversions introduced by picking column j now
                higher = bin(mask >> (j + 1)).count("1")
                contrib = acc * entry
                if higher % 2:
                    contrib = -contrib
                key = mask | bit
                nxt[key] = nxt.get(key, LaurentPoly.zero()) + contrib
        states = nxt
        if not states:
            return LaurentPoly.zero()
    return states.get((1 << n) - 1, LaurentPoly.zero())


def laurent_minor_gcd(m: LaurentMatrix, size: int) -> LaurentPoly:
    """Normalized gcd of all size x size minors; 0 if all vanish, 1 for size 0.

    Stops early once the running gcd is a unit.
    """
    if size == 0:
        return LaurentPoly.one()
    if size > m.rows or size > m.cols:
        return LaurentPoly.zero()
    one = LaurentPoly.one()
    g = LaurentPoly.zero()
    for rsel in combinations(range(m.rows), size):
        for csel in combinations(range(m.cols), size):
            d = laurent_det(m.submatrix(rsel, csel))
            if d.is_zero:
                continue
            g = poly_gcd(g, d)
            if g == one:
                return g
    return g
