"""Fox colorings of braid closures and of torus-covering surface knots.

A coloring modulo r assigns residues to arcs (diagram picture) or to the
braid-top meridians (presentation picture) so that every crossing
satisfies 2*over - in - out == 0 (mod r).  Three independent routes
compute the same censuses:

* solution counting on the evaluated matrix (Smith normal form),
* fixed points of pushing colors through the braid crossing by crossing,
* exhaustive enumeration of arc colors on the closure diagram.

Constant colorings always satisfy the constraints, so census totals are
a multiple of r, and fixing the base (last) arc or generator to color 0
kills exactly that translation symmetry.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd
from typing import Iterable, Sequence

from .braids import BraidWord, braids_commute
from .intlinalg import (
    EnumerationCapExceeded,
    IntMatrix,
    enumerate_solutions_mod,
    solution_count_mod,
    _enum_cap,
)
from .laurent import LaurentMatrix
from .presentations import (
    ClosureDiagram,
    Crossing,
    alexander_matrix,
    torus_covering_presentation,
)


@dataclass(frozen=True)
class Coloring:
    """Residues modulo r assigned to arcs or generators."""

    modulus: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise ValueError("modulus must be at least 2")
        object.__setattr__(
            self, "values", tuple(int(v) % self.modulus for v in self.values)
        )

    @property
    def is_trivial(self) -> bool:
        return len(set(self.values)) <= 1

    def satisfies(self, m: LaurentMatrix) -> bool:
        """Whether every row of M(-1) annihilates the values modulo r."""
        if m.cols != len(self.values):
            raise ValueError("length mismatch between coloring and matrix")
        a = IntMatrix.from_rows(m.evaluate(-1), cols=m.cols)
        return all(v % self.modulus == 0 for v in a.apply(list(self.values)))

    def generated_divisor(self) -> int:
        return generated_subgroup(self.values, self.modulus)


@dataclass(frozen=True)
class ColoringCensus:
    """Counting summary of the colorings of one object modulo r.

    ``condition_o`` counts colorings with the base arc or generator
    colored 0; it is total / r whenever the constraints are homogeneous.
    """

    modulus: int
    total: int
    nontrivial: int
    nondegenerate: bool
    condition_o: int


def dihedral_op(x: int, y: int, p: int) -> int:
    """The dihedral quandle operation x * y = 2y - x on Z/p."""
    if p < 2:
        raise ValueError("modulus must be at least 2")
    return (2 * y - x) % p


def generated_subgroup(colors: Iterable[int], p: int) -> int:
    """The divisor d of p such that the colors generate the index-d
    subgroup of Z/p under the quandle operation (after translating one
    color to 0).  d == 1 means the colors generate everything.
    """
    colors = list(colors)
    if not colors:
        raise ValueError("at least one color is required")
    base = colors[0]
    g = p
    for c in colors[1:]:
        g = gcd(g, c - base)
    return gcd(g, p) if g else p


def _condition_o_solutions(
    a: IntMatrix, r: int, base: int, cap: int | None = None
) -> list[tuple[int, ...]]:
    """Solutions of A x == 0 (mod r) with x[base] == 0, as full vectors."""
    reduced = a.column_deleted(base)
    out = []
    for sol in enumerate_solutions_mod(reduced, r, cap=cap):
        full = sol[:base] + (0,) + sol[base:]
        out.append(full)
    return out


def coloring_census(m: LaurentMatrix, r: int, cap: int | None = None) -> ColoringCensus:
    """Census of the solutions of M(-1) x == 0 modulo r.

    The base for condition O is the last column.  Non-degeneracy is
    decided by scanning the condition-O solutions only, which is enough
    because translating a coloring preserves what its colors generate.
    """
    if r < 2:
        raise ValueError("modulus must be at least 2")
    if m.cols < 1:
        raise ValueError("the matrix needs at least one column")
    a = IntMatrix.from_rows(m.evaluate(-1), cols=m.cols)
    total = solution_count_mod(a, r)
    base = m.cols - 1
    if m.cols == 1:
        cond_solutions: list[tuple[int, ...]] = [(0,)]
    else:
        cond_solutions = _condition_o_solutions(a, r, base, cap=cap)
    nondeg = any(generated_subgroup(sol, r) == 1 for sol in cond_solutions)
    return ColoringCensus(
        modulus=r,
        total=total,
        nontrivial=total - r,
        nondegenerate=nondeg,
        condition_o=len(cond_solutions),
    )


def is_p_colorable(m: LaurentMatrix, p: int) -> bool:
    """Whether some coloring modulo p generates all of Z/p."""
    return coloring_census(m, p).nondegenerate


def dihedral_transport(a: BraidWord, colors: Sequence[int], r: int) -> tuple[int, ...]:
    """Push strand-top colors down through the braid, crossing by crossing.

    A coloring of the closure corresponds exactly to a fixed point of
    this map.
    """
    if len(colors) != a.strands:
        raise ValueError("one color per strand is required")
    if r < 2:
        raise ValueError("modulus must be at least 2")
    state = [c % r for c in colors]
    for letter in a.letters:
        i = abs(letter) - 1
        if letter > 0:
            over, under = state[i], state[i + 1]
            state[i], state[i + 1] = (2 * over - under) % r, over
        else:
            over, under = state[i + 1], state[i]
            state[i], state[i + 1] = over, (2 * over - under) % r
    return tuple(state)


def surface_coloring_census(
    a: BraidWord, b: BraidWord, r: int, cap: int | None = None
) -> ColoringCensus:
    """Census of colorings of the surface knot spanned by (a, b): tuples
    fixed by the transport of both basis braids, found by exhaustive
    search over (Z/r)^n.
    """
    if not braids_commute(a, b):
        raise ValueError("basis braids must commute")
    if r < 2:
        raise ValueError("modulus must be at least 2")
    n = a.strands
    if r**n > _enum_cap(cap):
        raise EnumerationCapExceeded(f"{r**n} candidate colorings exceed the cap")
    total = 0
    cond = 0
    nondeg = False
    for colors in product(range(r), repeat=n):
        if dihedral_transport(a, colors, r) != colors:
            continue
        if dihedral_transport(b, colors, r) != colors:
            continue
        total += 1
        if colors[-1] == 0:
            cond += 1
            if not nondeg and generated_subgroup(colors, r) == 1:
                nondeg = True
    return ColoringCensus(
        modulus=r,
        total=total,
        nontrivial=total - r,
        nondegenerate=nondeg,
        condition_o=cond,
    )


def colorability_profile(a: BraidWord, b: BraidWord, r_max: int) -> list[tuple[int, int]]:
    """Condition-O coloring counts of the surface knot for r = 2..r_max.

    Computed from the presentation matrix, which agrees with the
    transport census (a separately tested invariant); only-p-colorable
    objects have profile values in {1, count at p}.
    """
    if r_max < 2:
        raise ValueError("r_max must be at least 2")
    pres = torus_covering_presentation(a, b)
    m = alexander_matrix(pres)
    a_int = IntMatrix.from_rows(m.evaluate(-1), cols=m.cols)
    if m.cols == 1:
        return [(r, 1) for r in range(2, r_max + 1)]
    reduced = a_int.column_deleted(m.cols - 1)
    return [(r, solution_count_mod(reduced, r)) for r in range(2, r_max + 1)]


def diagram_census_brute(
    d: ClosureDiagram, r: int, cap: int | None = None
) -> ColoringCensus:
    """Exhaustive census of arc colorings of a closure diagram.

    Walks arcs in order, checking each crossing as soon as all three of
    its arcs are colored; branches that already violate a crossing are
    abandoned.  Intended as the naive oracle against the algebraic
    routes.
    """
    if r < 2:
        raise ValueError("modulus must be at least 2")
    m = d.arc_count
    checks_at: list[list[Crossing]] = [[] for _ in range(m + 1)]
    for c in d.crossings:
        depth = max(c.over, c.under_in, c.under_out)
        checks_at[depth].append(c)

    total = 0
    cond = 0
    nondeg = False
    colors = [0] * (m + 1)  # 1-based

    def recurse(arc: int) -> None:
        nonlocal total, cond, nondeg
        if arc > m:
            total += 1
            if colors[m] == 0:
                cond += 1
                if not nondeg and generated_subgroup(colors[1:], r) == 1:
                    nondeg = True
            return
        for value in range(r):
            colors[arc] = value
            ok = True
            for c in checks_at[arc]:
                if (2 * colors[c.over] - colors[c.under_in] - colors[c.under_out]) % r:
                    ok = False
                    break
            if ok:
                recurse(arc + 1)

    recurse(1)
    return ColoringCensus(
        modulus=r,
        total=total,
        nontrivial=total - r,
        nondegenerate=nondeg,
        condition_o=cond,
    )
