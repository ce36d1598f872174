"""Exact polynomial arithmetic, canonical form, parsing, monomial orders."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from singlab.errors import VariableMismatch
from singlab.poly import (GREVLEX, LEX, Polynomial, infer_variables,
                          parse_polynomial)

VARS = ("z", "w")


def P(text, names=VARS):
    return parse_polynomial(text, names)


@st.composite
def polynomials(draw, names=VARS, max_terms=6, max_exp=4):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        e = tuple(draw(st.integers(0, max_exp)) for _ in names)
        c = Fraction(draw(st.integers(-9, 9)), draw(st.integers(1, 9)))
        if c:
            terms[e] = terms.get(e, Fraction(0)) + c
    return Polynomial(names, {e: c for e, c in terms.items() if c})


class TestArithmetic:
    def test_add_sub_roundtrip_is_identity(self):
        p, q = P("z^2 + 3*w"), P("w^3 - 1/2*z")
        assert (p + q) - q == p

    def test_product_expands(self):
        assert P("z + w") * P("z - w") == P("z^2 - w^2")

    def test_zero_coefficients_are_dropped(self):
        p = P("z^2 + w") - P("z^2")
        assert p.terms == {(0, 1): Fraction(1)}

    def test_diff_power_rule(self):
        assert P("z^3*w").diff("z") == P("3*z^2*w")
        assert P("5").diff("z").is_zero()

    def test_evaluate_exact(self):
        p = P("z^2*w - 1/3")
        assert p.evaluate({"z": Fraction(2), "w": Fraction(1, 4)}) == \
            Fraction(2, 3)

    def test_substitute_drops_variable(self):
        p = P("z^2 + w")
        q = p.substitute({"w": Fraction(5)})
        assert q.variables == ("z",)
        assert q == parse_polynomial("z^2 + 5", ("z",))

    def test_mismatched_rings_rejected(self):
        with pytest.raises(VariableMismatch):
            P("z") + parse_polynomial("u", ("u",))

    @given(polynomials(), polynomials(), polynomials())
    @settings(max_examples=60, deadline=None)
    def test_distributive_law(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(polynomials(), polynomials())
    @settings(max_examples=60, deadline=None)
    def test_commutativity(self, a, b):
        assert a * b == b * a
        assert a + b == b + a


class TestParsing:
    def test_rational_coefficients(self):
        assert P("1/2*z^2 - w") == Polynomial(
            VARS, {(2, 0): Fraction(1, 2), (0, 1): Fraction(-1)})

    def test_parentheses_and_unary_minus(self):
        assert P("-(z - w)^2") == P("-z^2 + 2*z*w - w^2")

    def test_infer_variables(self):
        # order of first appearance, not alphabetical
        assert infer_variables("4*t1^3 + 27*lambda^2") == ("t1", "lambda")

    @given(polynomials())
    @settings(max_examples=60, deadline=None)
    def test_str_parse_roundtrip(self, p):
        assert parse_polynomial(str(p), VARS) == p


class TestMonomialOrders:
    def test_grevlex_grades_by_total_degree_first(self):
        assert GREVLEX.key((3, 0)) < GREVLEX.key((2, 2))

    def test_grevlex_ties_break_by_last_variable(self):
        # z^2*w < z*w^2 in grevlex (smaller power of the last variable wins)
        assert GREVLEX.key((1, 2)) < GREVLEX.key((2, 1))

    def test_lex_ignores_total_degree(self):
        assert LEX.key((0, 5)) < LEX.key((1, 0))

    def test_leading_term(self):
        p = P("z^2*w + z*w^2 + z^4")
        assert p.leading(GREVLEX)[0] == (4, 0)
        assert p.leading(LEX)[0] == (4, 0)
