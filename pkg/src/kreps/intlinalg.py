"""Exact integer matrix algebra.

Smith normal form with unimodular transforms, determinantal divisors, and
counting/enumeration of solutions of homogeneous systems modulo an
arbitrary integer r >= 2.  Plain Python integers throughout, so nothing
ever overflows.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations, product
from math import gcd, prod
from typing import Iterable, Sequence

DEFAULT_ENUM_CAP = 10**6
ENUM_CAP_ENV = "KREPS_ENUM_CAP"


class EnumerationCapExceeded(RuntimeError):
    """Raised when a solution enumeration would exceed the configured cap."""


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows:
            raise ValueError("row count mismatch")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("matrix is not rectangular")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], cols: int | None = None) -> "IntMatrix":
        grid = tuple(tuple(int(x) for x in row) for row in rows)
        if cols is None:
            if not grid:
                raise ValueError("column count required for an empty matrix")
            cols = len(grid[0])
        return cls(len(grid), cols, grid)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    def entry(self, i: int, j: int) -> int:
        return self.entries[i][j]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        grid = tuple(
            tuple(
                sum(self.entries[i][k] * other.entries[k][j] for k in range(self.cols))
                for j in range(other.cols)
            )
            for i in range(self.rows)
        )
        return IntMatrix(self.rows, other.cols, grid)

    def column_deleted(self, j: int) -> "IntMatrix":
        grid = tuple(row[:j] + row[j + 1 :] for row in self.entries)
        return IntMatrix(self.rows, self.cols - 1, grid)

    def apply(self, vec: Sequence[int]) -> list[int]:
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return [sum(row[j] * vec[j] for j in range(self.cols)) for row in self.entries]


def int_det(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant requires a square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [list(row) for row in m.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SNFResult:
    """Diagonal form P @ A @ Q = diag(divisors), with P, Q unimodular and
    divisors positive, each dividing the next."""

    divisors: tuple[int, ...]
    P: IntMatrix
    Q: IntMatrix

    @property
    def rank(self) -> int:
        return len(self.divisors)


def _min_abs_nonzero(m: list[list[int]], k: int, rows: int, cols: int) -> tuple[int, int] | None:
    best: tuple[int, int] | None = None
    best_val = 0
    for i in range(k, rows):
        for j in range(k, cols):
            v = m[i][j]
            if v and (best is None or abs(v) < best_val):
                best = (i, j)
                best_val = abs(v)
                if best_val == 1:
                    return best
    return best


def smith_normal_form(a: IntMatrix) -> SNFResult:
    """Smith normal form with transforms.

    Pivots are chosen as the nonzero entry of minimal absolute value in
    the remaining block, which keeps intermediate entries small.  The
    output is deterministic for a fixed input.
    """
    rows, cols = a.rows, a.cols
    m = [list(row) for row in a.entries]
    p = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    q = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def row_sub(i: int, k: int, f: int) -> None:
        mi, mk = m[i], m[k]
        for j in range(cols):
            mi[j] -= f * mk[j]
        pi, pk = p[i], p[k]
        for j in range(rows):
            pi[j] -= f * pk[j]

    def col_sub(j: int, k: int, f: int) -> None:
        for i in range(rows):
            m[i][j] -= f * m[i][k]
        for i in range(cols):
            q[i][j] -= f * q[i][k]

    k = 0
    limit = min(rows, cols)
    while k < limit:
        placed = _min_abs_nonzero(m, k, rows, cols)
        if placed is None:
            break
        while True:
            pos = _min_abs_nonzero(m, k, rows, cols)
            i0, j0 = pos  # block is nonzero here by construction
            if i0 != k:
                m[k], m[i0] = m[i0], m[k]
                p[k], p[i0] = p[i0], p[k]
            if j0 != k:
                for row in m:
                    row[k], row[j0] = row[j0], row[k]
                for row in q:
                    row[k], row[j0] = row[j0], row[k]
            if m[k][k] < 0:
                m[k] = [-x for x in m[k]]
                p[k] = [-x for x in p[k]]
            piv = m[k][k]
            dirty = False
            for i in range(k + 1, rows):
                if m[i][k]:
                    row_sub(i, k, m[i][k] // piv)
                    if m[i][k]:
                        dirty = True
            for j in range(k + 1, cols):
                if m[k][j]:
                    col_sub(j, k, m[k][j] // piv)
                    if m[k][j]:
                        dirty = True
            if dirty:
                continue
            # pivot must divide the rest of the block for the divisor chain
            bad = None
            for i in range(k + 1, rows):
                for j in range(k + 1, cols):
                    if m[i][j] % piv:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_sub(k, bad, -1)  # pull the offending row into row k
        k += 1

    divisors = tuple(m[i][i] for i in range(k))
    return SNFResult(
        divisors=divisors,
        P=IntMatrix.from_rows(p, cols=rows),
        Q=IntMatrix.from_rows(q, cols=cols),
    )


def determinantal_divisor(a: IntMatrix, k: int) -> int:
    """gcd of all k x k minors: 1 for k = 0, 0 if every k-minor vanishes.

    Computed as the product of the first k invariant factors.
    """
    if k < 0 or k > min(a.rows, a.cols):
        raise ValueError("minor size out of range")
    if k == 0:
        return 1
    snf = smith_normal_form(a)
    if k > snf.rank:
        return 0
    return prod(snf.divisors[:k])


def minor_gcd(a: IntMatrix, k: int) -> int:
    """Determinantal divisor by direct minor enumeration (independent of
    the Smith normal form route; intended for cross-checking)."""
    if k < 0 or k > min(a.rows, a.cols):
        raise ValueError("minor size out of range")
    if k == 0:
        return 1
    g = 0
    for rsel in combinations(range(a.rows), k):
        for csel in combinations(range(a.cols), k):
            sub = IntMatrix.from_rows(
                [[a.entries[i][j] for j in csel] for i in rsel], cols=k
            )
            g = gcd(g, int_det(sub))
            if g == 1:
                return 1
    return g


def solution_count_mod(a: IntMatrix, r: int) -> int:
    """Number of x in (Z/r)^cols with A x == 0 (mod r)."""
    if r < 2:
        raise ValueError("modulus must be at least 2")
    snf = smith_normal_form(a)
    count = r ** (a.cols - snf.rank)
    for d in snf.divisors:
        count *= gcd(d, r)
    return count


def _enum_cap(cap: int | None) -> int:
    if cap is not None:
        return cap
    return int(os.environ.get(ENUM_CAP_ENV, DEFAULT_ENUM_CAP))


def enumerate_solutions_mod(a: IntMatrix, r: int, cap: int | None = None) -> list[tuple[int, ...]]:
    """All x in (Z/r)^cols with A x == 0 (mod r), without duplicates.

    Solutions are Q x' where the pivot coordinates of x' run over the
    multiples of r/gcd(d_i, r) and the free coordinates run over all
    residues.  Raises EnumerationCapExceeded if the solution count
    exceeds the cap (default 10**6, overridable via KREPS_ENUM_CAP).
    """
    if r < 2:
        raise ValueError("modulus must be at least 2")
    total = solution_count_mod(a, r)
    limit = _enum_cap(cap)
    if total > limit:
        raise EnumerationCapExceeded(f"{total} solutions exceed the cap of {limit}")
    snf = smith_normal_form(a)
    ranges: list[range] = []
    for d in snf.divisors:
        g = gcd(d, r)
        ranges.append(range(0, r, r // g))
    for _ in range(a.cols - snf.rank):
        ranges.append(range(r))
    qm = snf.Q.entries
    out: list[tuple[int, ...]] = []
    for xprime in product(*ranges):
        x = tuple(
            sum(qm[i][j] * xprime[j] for j in range(a.cols)) % r for i in range(a.cols)
        )
        out.append(x)
    return out
