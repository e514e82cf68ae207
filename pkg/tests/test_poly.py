"""Polynomial types, parsing, formatting, and the degree-raising shift."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import gridnull as g
from support import F7, F9, Q, make_rng, random_multipoly


def test_minus_infinity_ordering():
    mi = g.MINUS_INFINITY
    assert mi < 0 and mi < -100 and mi <= mi
    assert not (mi > 5) and not (mi >= 0)
    assert mi + 7 is mi and 7 + mi is mi
    assert repr(mi) == "-inf"


def test_unipoly_basics():
    f = g.UniPoly(Q, [0, -1, 0, 1])  # X^3 - X
    assert f.degree == 3
    assert f(2) == 6
    assert f.derivative().coeffs == (Q.element(-1), Q.zero, Q.element(3))
    zero = g.UniPoly(Q, [])
    assert zero.degree is g.MINUS_INFINITY
    assert (f - f).degree is g.MINUS_INFINITY
    assert str(f) == "X^3 - X"


def test_unipoly_from_roots_matches_char_poly():
    A = g.FiniteSet(F7, [1, 2, 4])
    assert str(A.char_poly) == "X^3 + 6"
    B = g.FiniteSet(Q, [-1, 0, 1])
    assert [str(c) for c in B.char_poly.coeffs] == ["0", "-1", "0", "1"]
    for a in B:
        assert B.char_poly(a).is_zero


def test_char_poly_rejects_duplicates_and_empty():
    with pytest.raises(ValueError):
        g.char_poly([Q.element(1), Q.element(1)])
    with pytest.raises(g.EmptySet):
        g.char_poly([])


def test_multipoly_arithmetic_and_pow():
    x1 = g.MultiPoly.variable(Q, 2, 1)
    x2 = g.MultiPoly.variable(Q, 2, 2)
    f = (x1 + x2) ** 2
    assert f.coefficient((2, 0)) == 1
    assert f.coefficient((1, 1)) == 2
    assert f.coefficient((0, 2)) == 1
    assert f.total_degree == 2
    assert ((x1 - x1) * x2).total_degree is g.MINUS_INFINITY
    assert (f - f) == g.MultiPoly.zero(Q, 2)


def test_multipoly_evaluate_zero_to_the_zero():
    f = g.parse_poly("x1^2 + 1", 2, F7)
    assert f.evaluate((F7.zero, F7.zero)) == 1
    c = g.MultiPoly.constant(F7, 2, 4)
    assert c.evaluate((F7.zero, F7.zero)) == 4
    assert g.multi_eval(f, (0, 0)) == 1


def test_multipoly_var_degrees_and_dimension_checks():
    f = g.parse_poly("x1^3*x2 + x2^2", 2, Q)
    assert f.var_degrees() == (3, 2)
    assert f.total_degree == 4
    with pytest.raises(g.DimensionMismatch):
        f.evaluate((Q.one,))
    with pytest.raises(g.DimensionMismatch):
        f.coefficient((1,))


def test_parse_poly_grammar_and_errors():
    f = g.parse_poly("-x1^3 + x1*x2", 2, Q)
    assert f.coefficient((3, 0)) == -1
    assert f.coefficient((1, 1)) == 1
    half = g.parse_poly("1/2*x1 - 3/2", 1, Q)
    assert half.coefficient((1,)) == Fraction(1, 2)
    assert half.coefficient((0,)) == Fraction(-3, 2)
    tpoly = g.parse_poly("(t+1)*x1 + t^2", 1, F9)
    assert str(tpoly.coefficient((1,))) == "t+1"
    assert tpoly.coefficient((0,)) == F9.generator ** 2

    with pytest.raises(g.UnknownVariable):
        g.parse_poly("x3", 2, Q)
    with pytest.raises(g.UnknownVariable):
        g.parse_poly("t", 1, Q)
    with pytest.raises(g.ParseError):
        g.parse_poly("1/2", 1, F7)
    with pytest.raises(g.ParseError):
        g.parse_poly("1/0", 1, Q)
    with pytest.raises(g.ParseError):
        g.parse_poly("x1 +", 1, Q)
    with pytest.raises(g.ParseError):
        g.parse_poly("(x1", 1, Q)
    with pytest.raises(g.ParseError):
        g.parse_poly("x1 $ 2", 1, Q)


def test_parse_error_reports_position():
    try:
        g.parse_poly("x1 $ 2", 1, Q)
    except g.ParseError as exc:
        assert exc.position == 3
        assert "position 3" in str(exc)
    else:
        raise AssertionError("expected a parse error")


def test_parse_element_uses_poly_grammar():
    assert g.parse_element("2^3", F7) == 1
    assert g.parse_element("-1/3", Q) == Fraction(-1, 3)
    assert str(g.parse_element("t*(t+1)", F9)) == str(F9.generator ** 2 + F9.generator)


def test_format_poly_ordering_and_signs():
    f = g.parse_poly("x1*x2 - x1^3", 2, Q)
    assert str(f) == "-x1^3 + x1*x2"
    assert str(g.MultiPoly.zero(Q, 2)) == "0"
    assert str(g.parse_poly("x1^2 + x1*x2", 2, Q)) == "x1^2 + x1*x2"
    wrapped = g.parse_poly("(2*t+1)*x1^2", 1, F9)
    assert str(wrapped) == "(2*t+1)*x1^2"


def test_raise_degree_shifts_onto_top_monomial():
    f = g.parse_poly("2*x1*x2 + 3", 2, F7)
    lifted = g.raise_degree(f, (3, 3), (1, 1))
    assert lifted.coefficient((2, 2)) == 2
    assert lifted.coefficient((1, 1)) == 3
    grid = g.grid_make([g.FiniteSet(F7, [0, 1, 2]), g.FiniteSet(F7, [0, 1, 2])])
    assert g.raise_degree(f, grid, (1, 1)) == lifted
    with pytest.raises(g.ExponentOutOfRange):
        g.raise_degree(f, (3, 3), (3, 0))


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_parse_format_round_trip(seed):
    rng = make_rng(seed)
    ctx = rng.choice([Q, F7, F9])
    n = rng.randint(1, 3)
    f = random_multipoly(rng, ctx, n, total_bound=5, max_terms=5)
    assert g.parse_poly(str(f), n, ctx) == f


def test_coefficient_helper_matches_method():
    f = g.parse_poly("x1^2*x2 + 4", 2, F7)
    assert g.coefficient(f, (2, 1)) == f.coefficient((2, 1))
    assert g.coefficient(f, (5, 5)) == 0
