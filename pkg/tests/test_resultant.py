"""Sylvester resultants and fraction-free determinants vs sympy."""

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from singlab.errors import DegreeError
from singlab.poly import Polynomial, parse_polynomial
from singlab.resultant import poly_determinant, resultant


def P(text, names):
    return parse_polynomial(text, names)


def _to_sympy(p, symbols):
    expr = sympy.Integer(0)
    for e, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, k in zip(symbols, e):
            term *= s ** k
        expr += term
    return expr


class TestResultant:
    def test_quadratic_minus_parameter(self):
        # the eliminated variable is dropped from the result's ring
        r = resultant(P("z^2 - a", ("z", "a")), P("z", ("z", "a")), "z")
        assert r == P("-a", ("a",)) or r == P("a", ("a",))

    def test_cusp_discriminant(self):
        names = ("z", "t", "l")
        r = resultant(P("z^3 + t*z - l", names),
                      P("3*z^2 + t", names), "z")
        target = P("4*t^3 + 27*l^2", ("t", "l"))
        # defined up to a nonzero rational unit
        assert r.primitive() == target or r.primitive() == -target

    def test_common_root_gives_zero(self):
        names = ("z",)
        assert resultant(P("z - 1", names), P("z - 1", names), "z").is_zero()

    def test_degree_zero_rejected(self):
        names = ("z",)
        with pytest.raises(DegreeError):
            resultant(P("3", names), P("z", names), "z")

    @pytest.mark.parametrize("f,g", [
        ("z^4 - 3*z + 1", "2*z^2 + z - 5"),
        ("z^5 + z^2*w + w^3", "z^2 - w"),
        ("z^3*w^2 - z + 1", "z^2*w + 3*w - 2"),
    ])
    def test_agrees_with_sympy(self, f, g):
        names = ("z", "w")
        symbols = sympy.symbols(names)
        ours = resultant(P(f, names), P(g, names), "z")
        theirs = sympy.expand(sympy.resultant(
            _to_sympy(P(f, names), symbols), _to_sympy(P(g, names), symbols),
            symbols[0]))
        ours_expr = _to_sympy(ours, sympy.symbols(ours.variables))
        assert sympy.expand(ours_expr - theirs) == 0

    @given(st.lists(st.integers(-4, 4), min_size=3, max_size=5),
           st.lists(st.integers(-4, 4), min_size=2, max_size=4))
    @settings(max_examples=50, deadline=None)
    def test_zero_iff_common_factor(self, fc, gc):
        # nonzero resultant exactly when gcd is trivial (univariate case)
        z = sympy.Symbol("z")
        f_s = sum(c * z ** i for i, c in enumerate(fc))
        g_s = sum(c * z ** i for i, c in enumerate(gc))
        if sympy.degree(f_s, z) < 1 or sympy.degree(g_s, z) < 1:
            return
        names = ("z",)
        f = Polynomial(names, {(i,): Fraction(c)
                               for i, c in enumerate(fc) if c})
        g = Polynomial(names, {(i,): Fraction(c)
                               for i, c in enumerate(gc) if c})
        r = resultant(f, g, "z")
        assert r.is_zero() == (sympy.degree(sympy.gcd(f_s, g_s), z) >= 1)


class TestDeterminant:
    def test_two_by_two(self):
        names = ("z",)
        m = [[P("z", names), P("1", names)],
             [P("1", names), P("z", names)]]
        assert poly_determinant(m) == P("z^2 - 1", names)

    def test_singular_matrix(self):
        names = ("z",)
        row = [P("z", names), P("2*z", names)]
        assert poly_determinant([row, row]).is_zero()

    def test_matches_cofactor_expansion_3x3(self):
        names = ("z", "w")
        m = [[P(t, names) for t in row] for row in
             [["z", "w", "1"], ["1", "z", "w"], ["w", "1", "z"]]]
        expected = P("z^3 + w^3 - 3*z*w + 1", names)
        assert poly_determinant(m) == expected
