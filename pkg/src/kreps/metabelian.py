"""Irreducible metabelian SU(2) representations, realized exactly in the
binary dihedral subgroup.

With z = exp(i*pi/m) for odd m, the binary dihedral group of order 4m
consists of the SU(2) matrices

    D(k) = [[z^k, 0], [0, z^-k]]      (diagonal rotations)
    R(k) = [[0, z^k], [-z^-k, 0]]     (antidiagonal reflections)

with k taken modulo 2m.  The multiplication table closes over the angle
bookkeeping alone, so no complex numbers are ever needed:

    D(a) D(b) = D(a+b)      D(a) R(b) = R(a+b)
    R(a) D(b) = R(a-b)      R(a) R(b) = D(a-b+m)

In particular R(k)^2 = D(m) = -I, R(k)^-1 = R(k+m), and conjugation acts
by the dihedral rule R(a) R(b) R(a)^-1 = R(2a - b).

A coloring c modulo m of a presentation (all generators meridians of
weight t) lifts to the representation sending generator i to R(k_i),
where k_i is the even representative of c_i modulo 2m.  Every relator
has zero exponent sum, which forces the residual sign D(0)/D(m) to be
trivial, so the lifted assignment satisfies all relators exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .braids import is_odd_prime
from .intlinalg import IntMatrix, determinantal_divisor, enumerate_solutions_mod
from .presentations import Presentation, alexander_matrix


@dataclass(frozen=True)
class BinaryDihedralElt:
    """D(angle) or R(angle) in the binary dihedral group of order 2*modulus.

    ``modulus`` is 2m for the odd parameter m >= 3; ``kind`` is "D" for
    diagonal and "R" for antidiagonal elements.
    """

    modulus: int
    kind: str
    angle: int

    def __post_init__(self) -> None:
        if self.modulus < 6 or self.modulus % 2 or (self.modulus // 2) % 2 == 0:
            raise ValueError("modulus must be 2m for an odd m >= 3")
        if self.kind not in ("D", "R"):
            raise ValueError("kind must be 'D' or 'R'")
        object.__setattr__(self, "angle", self.angle % self.modulus)

    @classmethod
    def d(cls, m: int, k: int) -> "BinaryDihedralElt":
        return cls(2 * m, "D", k)

    @classmethod
    def r(cls, m: int, k: int) -> "BinaryDihedralElt":
        return cls(2 * m, "R", k)

    @classmethod
    def identity(cls, m: int) -> "BinaryDihedralElt":
        return cls(2 * m, "D", 0)

    @property
    def is_identity(self) -> bool:
        return self.kind == "D" and self.angle == 0

    def __str__(self) -> str:
        return f"{self.kind}({self.angle}) mod {self.modulus}"


def bd_mul(x: BinaryDihedralElt, y: BinaryDihedralElt) -> BinaryDihedralElt:
    if x.modulus != y.modulus:
        raise ValueError("modulus mismatch")
    n = x.modulus
    m = n // 2
    if x.kind == "D" and y.kind == "D":
        return BinaryDihedralElt(n, "D", x.angle + y.angle)
    if x.kind == "D" and y.kind == "R":
        return BinaryDihedralElt(n, "R", x.angle + y.angle)
    if x.kind == "R" and y.kind == "D":
        return BinaryDihedralElt(n, "R", x.angle - y.angle)
    return BinaryDihedralElt(n, "D", x.angle - y.angle + m)


def bd_inv(x: BinaryDihedralElt) -> BinaryDihedralElt:
    if x.kind == "D":
        return BinaryDihedralElt(x.modulus, "D", -x.angle)
    return BinaryDihedralElt(x.modulus, "R", x.angle + x.modulus // 2)


def count_irreducible_metabelian(det: int) -> int:
    """(det - 1) / 2: the class count as a function of the determinant."""
    if det < 1 or det % 2 == 0:
        raise ValueError(
            "determinant must be a positive odd integer; an even value "
            "signals an upstream bug"
        )
    return (det - 1) // 2


def count_from_colorings(col_p: int, p: int) -> int:
    """(|colorings| - p) / (2p): the class count for only-p-colorable
    objects, from the size of the mod-p coloring space."""
    if not is_odd_prime(p):
        raise ValueError("p must be an odd prime")
    if col_p % p:
        raise ValueError("the coloring count must be divisible by p")
    if (col_p - p) % (2 * p):
        raise ValueError("coloring count is incompatible with the pairing")
    return (col_p - p) // (2 * p)


def _even_lift(c: int, m: int) -> int:
    c %= m
    return c if c % 2 == 0 else c + m


def build_representation(
    p: Presentation, coloring: Sequence[int], m: int
) -> tuple[BinaryDihedralElt, ...]:
    """Assignment generator i -> R(k_i) from a coloring modulo odd m.

    k_i is the even lift of the color, which settles the sign ambiguity:
    with even angles the conjugation rule reproduces the coloring
    constraints modulo 2m, not just modulo m.
    """
    if m < 3 or m % 2 == 0:
        raise ValueError("the modulus must be an odd integer >= 3")
    if len(coloring) != p.generators:
        raise ValueError("one color per generator is required")
    a = IntMatrix.from_rows(alexander_matrix(p).evaluate(-1), cols=p.generators)
    residual = a.apply([c % m for c in coloring])
    if any(v % m for v in residual):
        raise ValueError("the vector is not a coloring of this presentation")
    return tuple(BinaryDihedralElt.r(m, _even_lift(c, m)) for c in coloring)


def _evaluate_relator(
    relator, assignment: Sequence[BinaryDihedralElt], m: int
) -> BinaryDihedralElt:
    acc = BinaryDihedralElt.identity(m)
    for letter in relator.letters:
        img = assignment[abs(letter) - 1]
        acc = bd_mul(acc, img if letter > 0 else bd_inv(img))
    return acc


def verify_representation(
    p: Presentation, assignment: Sequence[BinaryDihedralElt]
) -> bool:
    """True iff every relator evaluates to the identity, exactly."""
    if len(assignment) != p.generators:
        raise ValueError("one image per generator is required")
    moduli = {elt.modulus for elt in assignment}
    if len(moduli) > 1:
        raise ValueError("mixed moduli in the assignment")
    m = (moduli.pop() if moduli else 6) // 2
    return all(_evaluate_relator(rel, assignment, m).is_identity for rel in p.relators)


def is_irreducible(assignment: Sequence[BinaryDihedralElt]) -> bool:
    """True iff two reflection angles differ modulo m.

    R(a) and R(b) share an eigenvector exactly when a == b (mod m), so an
    all-reflection image is reducible only when every angle agrees there.
    """
    if not assignment:
        raise ValueError("empty assignment")
    if any(elt.kind != "R" for elt in assignment):
        raise ValueError("irreducibility test expects antidiagonal images only")
    m = assignment[0].modulus // 2
    first = assignment[0].angle % m
    return any(elt.angle % m != first for elt in assignment[1:])


@dataclass(frozen=True)
class RepClass:
    """One conjugacy class: the defining coloring (base generator pinned
    to 0) and the exact binary dihedral assignment."""

    modulus: int
    coloring: tuple[int, ...]
    assignment: tuple[BinaryDihedralElt, ...]


def enumerate_rep_classes(p: Presentation, cap: int | None = None) -> list[RepClass]:
    """All conjugacy classes of irreducible metabelian SU(2) representations.

    Colorings modulo the determinant with the last generator pinned to 0
    are enumerated through the Smith normal form; the zero solution is
    reducible and dropped, and c, -c give conjugate representations, so
    representatives keep the lexicographically smaller of the pair.  The
    result has (det - 1) / 2 classes.
    """
    matrix = alexander_matrix(p)
    a = IntMatrix.from_rows(matrix.evaluate(-1), cols=p.generators)
    if p.generators == 1:
        det = 1
    else:
        det = determinantal_divisor(a, p.generators - 1)
    if det < 1 or det % 2 == 0:
        raise ValueError("expected a positive odd determinant")
    if det == 1:
        return []
    base = p.generators - 1
    reduced = a.column_deleted(base)
    solutions = []
    for sol in enumerate_solutions_mod(reduced, det, cap=cap):
        solutions.append(sol[:base] + (0,) + sol[base:])
    if len(solutions) != det:
        raise RuntimeError(
            f"expected {det} base-pinned colorings, found {len(solutions)}"
        )
    chosen = set()
    for sol in solutions:
        if all(v == 0 for v in sol):
            continue
        negated = tuple((-v) % det for v in sol)
        chosen.add(min(sol, negated))
    classes = []
    for coloring in sorted(chosen):
        assignment = build_representation(p, coloring, det)
        classes.append(RepClass(modulus=det, coloring=coloring, assignment=assignment))
    return classes
