"""Command-line interface.

Commands:

* ``knot``     invariants of the closure of one braid word
* ``surface``  invariants of the surface knot spanned by a commuting pair
* ``family``   the prime-power family with full-twist second braid, with
               built-in count assertions
* ``verify``   seeded randomized sweep of all cross-oracle checks

Exit codes: 0 ok, 1 parse or usage error, 2 closure is not a knot,
3 basis braids do not commute, 4 family assertion failed, 5 verify sweep
found a mismatch.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Any, Sequence

from .braids import (
    BraidWord,
    braids_commute,
    closure_component_count,
    full_twist,
    parse_braid,
    prime_twist_family,
)
from .colorings import (
    coloring_census,
    colorability_profile,
    diagram_census_brute,
    is_p_colorable,
    surface_coloring_census,
)
from .intlinalg import (
    EnumerationCapExceeded,
    IntMatrix,
    determinantal_divisor,
    enumerate_solutions_mod,
    minor_gcd,
    smith_normal_form,
    solution_count_mod,
)
from .laurent import poly_str
from .metabelian import count_irreducible_metabelian, enumerate_rep_classes
from .presentations import (
    alexander_matrix,
    burau_alexander,
    closure_diagram,
    closure_presentation,
    coloring_matrix,
    elementary_ideal_data,
    torus_covering_presentation,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NOT_A_KNOT = 2
EXIT_NOT_COMMUTING = 3
EXIT_FAMILY_ASSERTION = 4
EXIT_VERIFY_MISMATCH = 5


class PipelineError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _classes_payload(classes) -> list[dict[str, Any]]:
    return [
        {
            "modulus": rc.modulus,
            "coloring": list(rc.coloring),
            "angles": [elt.angle for elt in rc.assignment],
        }
        for rc in classes
    ]


def _profile_payload(profile: list[tuple[int, int]]) -> list[dict[str, int]]:
    return [{"r": r, "total": r * cond, "condition_o": cond} for r, cond in profile]


def _odd_prime_factors(n: int) -> list[int]:
    out = []
    d = 3
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 2
    if n > 2:
        out.append(n)
    return out


def knot_report(a: BraidWord, rmax: int | None) -> dict[str, Any]:
    if closure_component_count(a) != 1:
        raise PipelineError("the closure of the braid is not a knot", EXIT_NOT_A_KNOT)
    pres = closure_presentation(a)
    matrix = alexander_matrix(pres)
    poly, det = elementary_ideal_data(matrix)
    oracle = burau_alexander(a)
    fox_normal = poly_str(poly)
    checks = {
        "burau_matches_fox": fox_normal == poly_str(oracle),
        "determinant_matches_poly": det == abs(poly.evaluate(-1)),
    }
    classes = enumerate_rep_classes(pres)
    rep_count = count_irreducible_metabelian(det)
    checks["class_count_matches_determinant"] = rep_count == len(classes)
    report: dict[str, Any] = {
        "input": {"kind": "knot", "braid": str(a), "strands": a.strands},
        "determinant": str(det),
        "alexander_poly": fox_normal,
        "rep_count": rep_count,
        "classes": _classes_payload(classes),
        "colorings": [],
        "checks": checks,
    }
    if rmax is not None:
        profile = colorability_profile(a, BraidWord.identity(a.strands), rmax)
        report["colorings"] = _profile_payload(profile)
    return report


def surface_report(a: BraidWord, b: BraidWord, rmax: int | None) -> dict[str, Any]:
    if not braids_commute(a, b):
        raise PipelineError("basis braids do not commute", EXIT_NOT_COMMUTING)
    if closure_component_count(a) != 1:
        raise PipelineError("the closure of the first braid is not a knot", EXIT_NOT_A_KNOT)
    pres = torus_covering_presentation(a, b)
    matrix = alexander_matrix(pres)
    poly, det = elementary_ideal_data(matrix)
    classes = enumerate_rep_classes(pres)
    rep_count = count_irreducible_metabelian(det)
    checks: dict[str, Any] = {
        "determinant_odd": det % 2 == 1,
        "class_count_matches_determinant": rep_count == len(classes),
    }

    # classical data of the first braid's closure, for the counting cross-checks
    base_pres = closure_presentation(a)
    _, base_det = elementary_ideal_data(alexander_matrix(base_pres))
    checks["base_knot_determinant"] = str(base_det)
    if base_det >= 2 and is_p_colorable(matrix, base_det):
        checks["det_colorable_count_rule"] = rep_count == (base_det - 1) // 2

    censuses = []
    for prime in _odd_prime_factors(det):
        census = surface_coloring_census(a, b, prime)
        algebraic = coloring_census(matrix, prime)
        censuses.append(
            {
                "r": prime,
                "total": census.total,
                "condition_o": census.condition_o,
                "nondegenerate": census.nondegenerate,
            }
        )
        checks[f"census_consistent_mod_{prime}"] = (
            census.total == algebraic.total
            and census.condition_o == algebraic.condition_o
        )
    report: dict[str, Any] = {
        "input": {
            "kind": "surface",
            "braid_a": str(a),
            "braid_b": str(b),
            "strands": a.strands,
        },
        "determinant": str(det),
        "alexander_poly": poly_str(poly) if not poly.is_zero else "0",
        "rep_count": rep_count,
        "classes": _classes_payload(classes),
        "colorings": [],
        "censuses": censuses,
        "checks": checks,
    }
    if rmax is not None:
        profile = colorability_profile(a, b, rmax)
        report["colorings"] = _profile_payload(profile)
        # when the profile certifies only-p-colorability, the coloring
        # count determines the class count as (total - p) / (2p)
        for prime in _odd_prime_factors(det):
            if rmax < 2 * prime:
                continue
            counts = {cond for _, cond in profile}
            base = dict(profile).get(prime)
            if base is None or counts != {1, base}:
                continue
            census = surface_coloring_census(a, b, prime)
            checks[f"only_{prime}_count_rule"] = (
                census.total == prime * base
                and (census.total - prime) // (2 * prime) == rep_count
            )
    return report


def family_report(
    n: int, p: int, m: int, signs: Sequence[int] | None, perm: Sequence[int] | None
) -> dict[str, Any]:
    sign_list = tuple(signs) if signs is not None else (1,) * (n - 1)
    c, b = prime_twist_family(n, p, sign_list, perm, m)
    report = surface_report(c, b, rmax=4 * p)
    expected_count = (p ** (n - 1) - 1) // 2
    col_census = surface_coloring_census(c, b, p)
    expected_colorings = p**n
    passed = (
        report["rep_count"] == expected_count
        and col_census.total == expected_colorings
    )
    report["input"] = {
        "kind": "family",
        "n": n,
        "p": p,
        "m": m,
        "signs": list(sign_list),
        "perm": list(perm) if perm is not None else list(range(1, n)),
        "braid_a": str(c),
        "braid_b": str(b),
    }
    report["family"] = {
        "expected_rep_count": expected_count,
        "expected_colorings_mod_p": expected_colorings,
        "colorings_mod_p": col_census.total,
        "passed": passed,
    }
    if not passed:
        raise PipelineError(
            f"family counts diverged: reps {report['rep_count']} vs {expected_count}, "
            f"colorings {col_census.total} vs {expected_colorings}",
            EXIT_FAMILY_ASSERTION,
        )
    return report


# -- randomized oracle sweep ------------------------------------------------


def _random_knot_braid(rng: random.Random, max_strands: int, max_len: int) -> BraidWord:
    while True:
        n = rng.randint(2, max_strands)
        length = rng.randint(1, max_len)
        letters = tuple(
            rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)
        )
        a = BraidWord(n, letters)
        if closure_component_count(a) == 1:
            return a


def _braid_mismatch(a: BraidWord) -> str | None:
    """All per-braid cross-checks; returns a description of the first
    failure, or None."""
    pres = closure_presentation(a)
    matrix = alexander_matrix(pres)
    poly, det = elementary_ideal_data(matrix)
    oracle = burau_alexander(a)
    if poly_str(poly) != poly_str(oracle):
        return f"fox {poly_str(poly)} != burau {poly_str(oracle)}"
    if det != abs(poly.evaluate(-1)):
        return f"determinant {det} != |poly(-1)|"
    diagram = closure_diagram(a)
    cmatrix = coloring_matrix(diagram)
    a_int = IntMatrix.from_rows(matrix.evaluate(-1), cols=matrix.cols)
    c_int = IntMatrix.from_rows(cmatrix.evaluate(-1), cols=cmatrix.cols)
    for back in range(1, min(matrix.cols, cmatrix.cols) + 1):
        lhs = determinantal_divisor(a_int, matrix.cols - back)
        rhs = determinantal_divisor(c_int, cmatrix.cols - back)
        if lhs != rhs:
            return f"divisor mismatch at depth {back}: {lhs} != {rhs}"
    for r in range(2, 8):
        algebraic = coloring_census(matrix, r)
        transported = surface_coloring_census(a, BraidWord.identity(a.strands), r)
        brute = diagram_census_brute(diagram, r)
        if not (
            algebraic.total == transported.total == brute.total
            and algebraic.condition_o == transported.condition_o == brute.condition_o
        ):
            return (
                f"census mismatch at r={r}: matrix {algebraic.total}/{algebraic.condition_o}, "
                f"transport {transported.total}/{transported.condition_o}, "
                f"diagram {brute.total}/{brute.condition_o}"
            )
    return None


def _minimize_braid(a: BraidWord) -> BraidWord:
    """Greedily drop letters while the mismatch persists."""
    current = a
    improved = True
    while improved and len(current.letters) > 1:
        improved = False
        for i in range(len(current.letters)):
            candidate = BraidWord(
                current.strands, current.letters[:i] + current.letters[i + 1 :]
            )
            if closure_component_count(candidate) != 1 or not candidate.letters:
                continue
            if _braid_mismatch(candidate) is not None:
                current = candidate
                improved = True
                break
    return current


def _random_int_matrix(rng: random.Random) -> IntMatrix:
    rows = rng.randint(1, 4)
    cols = rng.randint(1, 4)
    return IntMatrix.from_rows(
        [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)], cols=cols
    )


def _matrix_mismatch(a: IntMatrix, rng: random.Random) -> str | None:
    snf = smith_normal_form(a)
    product = snf.P @ a @ snf.Q
    for i in range(product.rows):
        for j in range(product.cols):
            expected = snf.divisors[i] if i == j and i < snf.rank else 0
            if product.entries[i][j] != expected:
                return "reconstruction P A Q is not the diagonal form"
    for i in range(snf.rank - 1):
        if snf.divisors[i + 1] % snf.divisors[i]:
            return "divisor chain broken"
    for k in range(min(a.rows, a.cols) + 1):
        if determinantal_divisor(a, k) != minor_gcd(a, k):
            return f"divisor {k} disagrees with brute-force minors"
    r = rng.randint(2, 12)
    count = solution_count_mod(a, r)
    if count <= 20736:
        from itertools import product as iproduct

        brute = [
            x
            for x in iproduct(range(r), repeat=a.cols)
            if all(v % r == 0 for v in a.apply(list(x)))
        ]
        if count != len(brute):
            return f"solution count mod {r}: {count} != brute {len(brute)}"
        enumerated = sorted(enumerate_solutions_mod(a, r))
        if enumerated != sorted(brute):
            return f"solution enumeration mod {r} differs from brute force"
    return None


def verify_report(
    seed: int, trials: int, max_strands: int, max_len: int
) -> tuple[dict[str, Any], str | None]:
    rng = random.Random(seed)
    failure: str | None = None
    braids_checked = 0
    for _ in range(trials):
        a = _random_knot_braid(rng, max_strands, max_len)
        mismatch = _braid_mismatch(a)
        if mismatch is not None:
            small = _minimize_braid(a)
            failure = f"braid {small} on {small.strands} strands: {_braid_mismatch(small)}"
            break
        braids_checked += 1

    matrices_checked = 0
    if failure is None:
        for _ in range(max(trials * 5, 100)):
            m = _random_int_matrix(rng)
            mismatch = _matrix_mismatch(m, rng)
            if mismatch is not None:
                failure = f"matrix {m.entries}: {mismatch}"
                break
            matrices_checked += 1

    pairs_checked = 0
    if failure is None:
        for _ in range(max(trials // 2, 25)):
            a = _random_knot_braid(rng, max_strands, max_len)
            b = full_twist(a.strands) ** rng.randint(0, 2)
            pres = torus_covering_presentation(a, b)
            _, det = elementary_ideal_data(alexander_matrix(pres))
            if det % 2 == 0:
                failure = f"even surface determinant {det} for a={a}, twist power"
                break
            pairs_checked += 1

    report = {
        "input": {
            "kind": "verify",
            "seed": seed,
            "trials": trials,
            "max_strands": max_strands,
            "max_len": max_len,
        },
        "braids_checked": braids_checked,
        "matrices_checked": matrices_checked,
        "commuting_pairs_checked": pairs_checked,
        "failure": failure,
        "passed": failure is None,
    }
    return report, failure


# -- rendering ---------------------------------------------------------------


def _print_table(report: dict[str, Any], stream) -> None:
    def line(key: str, value: Any) -> None:
        print(f"{key:24s} {value}", file=stream)

    for key, value in report.get("input", {}).items():
        line(f"input.{key}", value)
    for key in ("determinant", "alexander_poly", "rep_count"):
        if key in report:
            line(key, report[key])
    for rc in report.get("classes", []):
        line(
            "class",
            f"mod {rc['modulus']}  coloring {rc['coloring']}  angles {rc['angles']}",
        )
    for entry in report.get("colorings", []):
        line("colorings", f"r={entry['r']}  total={entry['total']}  condition_o={entry['condition_o']}")
    for entry in report.get("censuses", []):
        line(
            "census",
            f"r={entry['r']}  total={entry['total']}  condition_o={entry['condition_o']}"
            f"  nondegenerate={entry['nondegenerate']}",
        )
    for key, value in report.get("checks", {}).items():
        line(f"check.{key}", value)
    if "family" in report:
        for key, value in report["family"].items():
            line(f"family.{key}", value)
    for key in ("braids_checked", "matrices_checked", "commuting_pairs_checked", "failure", "passed"):
        if key in report:
            line(key, report[key])


def _emit(report: dict[str, Any], as_json: bool, stream=None) -> None:
    stream = stream or sys.stdout
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True), file=stream)
    else:
        _print_table(report, stream)


def _parse_signs(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    cleaned = text.replace(",", "")
    signs = []
    for ch in cleaned:
        if ch == "+":
            signs.append(1)
        elif ch == "-":
            signs.append(-1)
        else:
            raise ValueError(f"signs must be '+' or '-' characters, got {ch!r}")
    return tuple(signs)


def _parse_perm(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    return tuple(int(x) for x in text.replace(",", " ").split())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kreps",
        description=(
            "Exact invariants of braid-closure knots and of the surface knots "
            "spanned by commuting braid pairs: determinants, Alexander "
            "polynomials, Fox coloring censuses, and irreducible metabelian "
            "SU(2) representation classes."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    knot = sub.add_parser("knot", help="invariants of a braid closure")
    knot.add_argument("braid", help="braid word, e.g. '1^3' or '1 -2 1 -2'")
    knot.add_argument("-n", "--strands", type=int, required=True)
    knot.add_argument("--rmax", type=int, default=None, help="coloring profile bound")
    knot.add_argument("--json", action="store_true")
    knot.add_argument("--table", action="store_true")

    surface = sub.add_parser("surface", help="invariants of a commuting-pair surface knot")
    surface.add_argument("braid_a")
    surface.add_argument("braid_b", nargs="?", default="")
    surface.add_argument("-n", "--strands", type=int, required=True)
    surface.add_argument(
        "--fulltwist",
        type=int,
        default=None,
        metavar="K",
        help="use the full twist to the power K as the second braid",
    )
    surface.add_argument("--rmax", type=int, default=None)
    surface.add_argument("--json", action="store_true")
    surface.add_argument("--table", action="store_true")

    family = sub.add_parser("family", help="prime-power family with count assertions")
    family.add_argument("n", type=int)
    family.add_argument("p", type=int)
    family.add_argument("m", type=int)
    family.add_argument("--signs", default=None, help="e.g. '+-+' or '+,-,+'")
    family.add_argument("--perm", default=None, help="e.g. '2,1'")
    family.add_argument("--json", action="store_true")
    family.add_argument("--table", action="store_true")

    verify = sub.add_parser("verify", help="seeded randomized oracle sweep")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--trials", type=int, default=100)
    verify.add_argument("--max-strands", type=int, default=4)
    verify.add_argument("--max-len", type=int, default=8)
    verify.add_argument("--json", action="store_true")
    verify.add_argument("--table", action="store_true")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    try:
        if args.command == "knot":
            a = parse_braid(args.braid, args.strands)
            report = knot_report(a, args.rmax)
        elif args.command == "surface":
            a = parse_braid(args.braid_a, args.strands)
            if args.fulltwist is not None:
                if args.braid_b:
                    raise ValueError("give either a second braid or --fulltwist, not both")
                b = full_twist(args.strands) ** args.fulltwist
            else:
                b = parse_braid(args.braid_b, args.strands)
            report = surface_report(a, b, args.rmax)
        elif args.command == "family":
            signs = _parse_signs(args.signs)
            perm = _parse_perm(args.perm)
            report = family_report(args.n, args.p, args.m, signs, perm)
        else:
            report, failure = verify_report(
                args.seed, args.trials, args.max_strands, args.max_len
            )
            _emit(report, args.json)
            return EXIT_VERIFY_MISMATCH if failure else EXIT_OK
    except PipelineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except EnumerationCapExceeded as exc:
        print(f"error: {exc} (raise KREPS_ENUM_CAP to override)", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    _emit(report, args.json)
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
