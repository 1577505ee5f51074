import random

import pytest

from kreps.braids import BraidWord, FreeWord, full_twist, parse_braid
from kreps.intlinalg import IntMatrix, determinantal_divisor
from kreps.laurent import LaurentMatrix, LaurentPoly, laurent_minor_gcd, normalize_unit
from kreps.presentations import (
    ClosureDiagram,
    Crossing,
    Presentation,
    alexander_matrix,
    burau_alexander,
    closure_diagram,
    closure_presentation,
    coloring_matrix,
    elementary_ideal_data,
    fox_derivative_abelianized,
    torus_covering_presentation,
)

TREFOIL = parse_braid("1^3", 2)
FIGURE_EIGHT = parse_braid("1 -2 1 -2", 3)
CINQUEFOIL = parse_braid("1^5", 2)
GRANNY = parse_braid("1^3 2^3", 3)

TREFOIL_POLY = LaurentPoly({0: 1, 1: -1, 2: 1})
FIGURE_EIGHT_POLY = LaurentPoly({0: 1, 1: -3, 2: 1})


def random_knot_braid(rng, max_strands=4, max_len=8):
    from kreps.braids import closure_component_count

    while True:
        n = rng.randint(2, max_strands)
        length = rng.randint(1, max_len)
        letters = tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length))
        a = BraidWord(n, letters)
        if closure_component_count(a) == 1:
            return a


# -- presentations -----------------------------------------------------------


def test_trivial_braid_presentation_has_no_relators():
    pres = closure_presentation(BraidWord.identity(1))
    assert pres.generators == 1
    assert pres.relators == ()


def test_single_crossing_relators():
    pres = closure_presentation(parse_braid("1", 2))
    words = {rel.letters for rel in pres.relators}
    assert words == {(1, 1, -2, -1), (2, -1)}


def test_trefoil_relator_words():
    pres = closure_presentation(TREFOIL)
    words = {rel.letters for rel in pres.relators}
    # t1 * image(t1)^-1 with image t1 t2 t1 t2 t1^-1 t2^-1 t1^-1
    assert (1, 1, 2, 1, -2, -1, -2, -1) in words


def test_relators_have_zero_weighted_sum():
    rng = random.Random(31)
    for _ in range(25):
        a = random_knot_braid(rng)
        pres = closure_presentation(a)
        for rel in pres.relators:
            assert rel.weighted_exponent_sum(pres.weights) == 0


def test_presentation_validates_weights():
    bad = FreeWord(2, (1,))
    with pytest.raises(ValueError):
        Presentation(2, (bad,), (1, 1))


def test_torus_presentation_requires_commuting():
    with pytest.raises(ValueError):
        torus_covering_presentation(parse_braid("1 2", 3), parse_braid("1", 3))


def test_torus_presentation_requires_knot():
    with pytest.raises(ValueError):
        torus_covering_presentation(parse_braid("1^2", 2), BraidWord.identity(2))


def test_torus_presentation_with_identity_matches_closure():
    rng = random.Random(32)
    for _ in range(15):
        a = random_knot_braid(rng)
        closure = closure_presentation(a)
        spun = torus_covering_presentation(a, BraidWord.identity(a.strands))
        _, det_closure = elementary_ideal_data(alexander_matrix(closure))
        _, det_spun = elementary_ideal_data(alexander_matrix(spun))
        assert det_closure == det_spun


# -- free differentiation -----------------------------------------------------


def test_fox_derivative_commutator():
    r = FreeWord(2, (1, 2, -1, -2))
    assert fox_derivative_abelianized(r, 1, (1, 1)) == LaurentPoly({0: 1, 1: -1})


def test_fox_derivative_power():
    r = FreeWord(1, (1, 1, 1))
    assert fox_derivative_abelianized(r, 1, (1,)) == LaurentPoly({0: 1, 1: 1, 2: 1})


def test_fox_derivative_other_generator():
    r = FreeWord(2, (2,))
    assert fox_derivative_abelianized(r, 1, (1, 1)) == LaurentPoly.zero()
    with pytest.raises(ValueError):
        fox_derivative_abelianized(r, 3, (1, 1))


def test_fox_derivative_inverse_letter():
    # d(x^-1)/dx = -x^-1 abelianizes to -1/t; the second occurrence of t1
    # sits after the prefix t1^-1 t2 of weight 0
    word = FreeWord(2, (-1, 2, 1))
    assert fox_derivative_abelianized(word, 1, (1, 1)) == LaurentPoly({-1: -1, 0: 1})


# -- Alexander matrices --------------------------------------------------------


def test_unknot_matrix_is_empty():
    matrix = alexander_matrix(closure_presentation(BraidWord.identity(1)))
    assert matrix.rows == 0 and matrix.cols == 1
    assert elementary_ideal_data(matrix) == (LaurentPoly.one(), 1)


def test_trefoil_ideal_data():
    matrix = alexander_matrix(closure_presentation(TREFOIL))
    poly, det = elementary_ideal_data(matrix)
    assert poly == TREFOIL_POLY
    assert det == 3
    assert matrix.evaluate(-1) == [[-3, 3], [-3, 3]]


def test_matrix_rows_sum_to_zero():
    rng = random.Random(33)
    for _ in range(20):
        a = random_knot_braid(rng)
        matrix = alexander_matrix(closure_presentation(a))
        for row in matrix.entries:
            total = LaurentPoly.zero()
            for entry in row:
                total = total + entry
            assert total.is_zero


def test_ideal_data_edge_cases():
    zero = LaurentPoly.zero()
    too_few = LaurentMatrix.from_rows([[LaurentPoly.one(), zero, zero]], cols=3)
    assert elementary_ideal_data(too_few) == (zero, 0)
    single = LaurentMatrix(0, 1, ())
    assert elementary_ideal_data(single) == (LaurentPoly.one(), 1)


# -- closure diagrams ----------------------------------------------------------


def test_trefoil_diagram_shape():
    d = closure_diagram(TREFOIL)
    assert d.arc_count == 3
    assert len(d.crossings) == 3


def test_one_crossing_unknot_diagram():
    d = closure_diagram(parse_braid("1", 2))
    assert d.arc_count == 1
    assert len(d.crossings) == 1
    c = d.crossings[0]
    assert c.over == c.under_in == c.under_out == 1


def test_figure_eight_diagram_shape():
    d = closure_diagram(FIGURE_EIGHT)
    assert d.arc_count == 4
    assert len(d.crossings) == 4


def test_diagram_needs_a_crossing():
    with pytest.raises(ValueError):
        closure_diagram(BraidWord.identity(2))


def test_knot_diagram_underpass_incidence():
    rng = random.Random(34)
    for _ in range(25):
        a = random_knot_braid(rng)
        d = closure_diagram(a)
        incoming = sorted(c.under_in for c in d.crossings)
        outgoing = sorted(c.under_out for c in d.crossings)
        assert incoming == list(range(1, d.arc_count + 1))
        assert outgoing == list(range(1, d.arc_count + 1))


# -- coloring matrices -----------------------------------------------------------


def test_coloring_matrix_degenerate_rows():
    one = LaurentPoly.one()
    # over arc equals incoming under arc
    d = ClosureDiagram(2, (Crossing(over=1, under_in=1, under_out=2, sign=1),))
    row = coloring_matrix(d).entries[0]
    assert row == (one, -one)
    # fully degenerate crossing gives the zero row
    d = ClosureDiagram(1, (Crossing(over=1, under_in=1, under_out=1, sign=1),))
    assert coloring_matrix(d).entries[0] == (LaurentPoly.zero(),)


def test_trefoil_coloring_matrix_divisor():
    d = closure_diagram(TREFOIL)
    matrix = coloring_matrix(d)
    at = IntMatrix.from_rows(matrix.evaluate(-1), cols=matrix.cols)
    assert determinantal_divisor(at, matrix.cols - 1) == 3


def test_coloring_matrix_ideal_matches_alexander_polynomial():
    # ideal-level equivalence with the presentation route, not just at t = -1
    for braid, expected in ((TREFOIL, TREFOIL_POLY), (FIGURE_EIGHT, FIGURE_EIGHT_POLY)):
        matrix = coloring_matrix(closure_diagram(braid))
        gcd_poly = laurent_minor_gcd(matrix, matrix.cols - 1)
        assert gcd_poly == expected


# -- reduced Burau oracle ----------------------------------------------------------


def test_burau_closed_forms():
    assert burau_alexander(TREFOIL) == TREFOIL_POLY
    assert burau_alexander(parse_braid("1", 2)) == LaurentPoly.one()
    assert burau_alexander(FIGURE_EIGHT) == FIGURE_EIGHT_POLY
    assert burau_alexander(CINQUEFOIL) == LaurentPoly({0: 1, 1: -1, 2: 1, 3: -1, 4: 1})


def test_torus_knot_closed_forms():
    # (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)) evaluated by hand
    t34 = parse_braid("1 2 1 2 1 2 1 2", 3)
    expected = LaurentPoly({0: 1, 1: -1, 3: 1, 5: -1, 6: 1})
    assert burau_alexander(t34) == expected
    poly, det = elementary_ideal_data(alexander_matrix(closure_presentation(t34)))
    assert poly == expected
    assert det == 3

    t27 = parse_braid("1^7", 2)
    assert burau_alexander(t27) == LaurentPoly(
        {0: 1, 1: -1, 2: 1, 3: -1, 4: 1, 5: -1, 6: 1}
    )


def test_burau_rejects_links():
    with pytest.raises(ValueError):
        burau_alexander(parse_braid("1^2", 2))


def test_burau_matches_fox_route():
    rng = random.Random(35)
    for _ in range(40):
        a = random_knot_braid(rng)
        matrix = alexander_matrix(closure_presentation(a))
        poly, det = elementary_ideal_data(matrix)
        oracle = burau_alexander(a)
        assert normalize_unit(poly) == oracle, f"braid {a}"
        assert det == abs(oracle.evaluate(-1))


# -- headline determinants ----------------------------------------------------------


def test_classical_determinants():
    for braid, expected_det in (
        (TREFOIL, 3),
        (FIGURE_EIGHT, 5),
        (CINQUEFOIL, 5),
        (GRANNY, 9),
    ):
        _, det = elementary_ideal_data(alexander_matrix(closure_presentation(braid)))
        assert det == expected_det


def test_surface_determinants():
    a, b = TREFOIL, parse_braid("1^6", 2)
    _, det = elementary_ideal_data(alexander_matrix(torus_covering_presentation(a, b)))
    assert det == 3

    c, tau2 = GRANNY, full_twist(3) ** 2
    _, det9 = elementary_ideal_data(alexander_matrix(torus_covering_presentation(c, tau2)))
    assert det9 == 9


def test_surface_determinant_is_odd():
    rng = random.Random(36)
    for _ in range(20):
        a = random_knot_braid(rng)
        b = full_twist(a.strands) ** rng.randint(0, 2)
        _, det = elementary_ideal_data(alexander_matrix(torus_covering_presentation(a, b)))
        assert det % 2 == 1


def test_diagram_vs_presentation_divisors():
    rng = random.Random(37)
    for _ in range(30):
        a = random_knot_braid(rng)
        pres_matrix = alexander_matrix(closure_presentation(a))
        diag_matrix = coloring_matrix(closure_diagram(a))
        pres_int = IntMatrix.from_rows(pres_matrix.evaluate(-1), cols=pres_matrix.cols)
        diag_int = IntMatrix.from_rows(diag_matrix.evaluate(-1), cols=diag_matrix.cols)
        for back in range(1, min(pres_matrix.cols, diag_matrix.cols) + 1):
            assert determinantal_divisor(
                pres_int, pres_matrix.cols - back
            ) == determinantal_divisor(diag_int, diag_matrix.cols - back)
