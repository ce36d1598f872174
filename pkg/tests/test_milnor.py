"""Milnor numbers, cobases, and miniversal unfoldings.

The oracle recomputes mu independently: sympy Groebner basis of the
Jacobian ideal, then brute-force counting of staircase monomials.
"""

import itertools

import pytest
import sympy

from singlab.errors import NotCritical, NotIsolated
from singlab.milnor import analyze_germ, miniversal_unfolding, unfold_germ
from singlab.poly import parse_polynomial


def P(text, names):
    return parse_polynomial(text, names)


def oracle_mu(expr_text, names):
    symbols = sympy.symbols(names)
    f = sympy.sympify(expr_text.replace("^", "**"))
    partials = [sympy.diff(f, s) for s in symbols]
    gb = sympy.groebner(partials, *symbols, order="grevlex")
    leads = [sympy.Poly(e, *symbols).monoms(order="grevlex")[0]
             for e in gb.exprs]
    cap = 1 + max((max(l) for l in leads), default=0)
    count = 0
    for e in itertools.product(range(cap * len(names) + 1),
                               repeat=len(names)):
        if not any(all(le <= ee for le, ee in zip(l, e)) for l in leads):
            count += 1
            if count > 10_000:
                return None  # not zero-dimensional
    return count


CORPUS_1D = [(f"z^{k + 1}", k) for k in range(1, 8)]
CORPUS_2D = [(f"z^{a} + w^{b}", (a - 1) * (b - 1))
             for a in range(2, 6) for b in range(2, 6)]


class TestMilnorNumber:
    @pytest.mark.parametrize("germ,mu", CORPUS_1D)
    def test_one_variable_chain(self, germ, mu):
        assert analyze_germ(P(germ, ("z",))).mu == mu

    @pytest.mark.parametrize("germ,mu", CORPUS_2D)
    def test_two_variable_sums(self, germ, mu):
        assert analyze_germ(P(germ, ("z", "w"))).mu == mu

    @pytest.mark.parametrize("germ,names", [
        ("z^3", ("z",)), ("z^5", ("z",)), ("z^3 + w^3", ("z", "w")),
        ("z^3 + w^4", ("z", "w")), ("z^2*w + w^4", ("z", "w")),
    ])
    def test_matches_staircase_oracle(self, germ, names):
        assert analyze_germ(P(germ, names)).mu == oracle_mu(germ, names)

    def test_d5_germ(self):
        assert analyze_germ(P("z^2*w + w^4", ("z", "w"))).mu == 5


class TestValidation:
    def test_noncritical_origin_rejected(self):
        with pytest.raises(NotCritical):
            analyze_germ(P("z + z^2", ("z",)))

    def test_nonisolated_rejected(self):
        with pytest.raises(NotIsolated):
            analyze_germ(P("z^2*w", ("z", "w")))

    def test_morse_point_accepted(self):
        a = analyze_germ(P("z^2 - w^2", ("z", "w")))
        assert a.mu == 1
        assert a.signature == (1, 1)
        assert [str(g) for g in a.cobasis] == ["1"]

    def test_cubic_signature_vanishes(self):
        assert analyze_germ(P("z^3 + w^3", ("z", "w"))).signature == (0, 0)


class TestCobasis:
    def test_a2_cobasis(self):
        a = analyze_germ(P("z^3", ("z",)))
        assert [str(g) for g in a.cobasis] == ["1", "z"]

    def test_cubic_surface_cobasis(self):
        a = analyze_germ(P("z^3 + w^3", ("z", "w")))
        assert [str(g) for g in a.cobasis] == ["1", "z", "w", "z*w"]

    def test_linear_monomials_present_when_order_three(self):
        a = analyze_germ(P("z^3 + w^4", ("z", "w")))
        names = [str(g) for g in a.cobasis]
        assert "z" in names and "w" in names and names[0] == "1"


class TestUnfolding:
    def test_a2(self):
        u = unfold_germ(P("z^3", ("z",)))
        assert str(u.F) == "z^3 + z*t1"
        assert u.parameter_names == ("t1",)

    def test_a3(self):
        u = unfold_germ(P("z^4", ("z",)))
        assert u.parameter_names == ("t1", "t2")
        assert [str(g) for g in u.deformation_monomials] == ["z", "z^2"]

    def test_cubic_surface(self):
        u = unfold_germ(P("z^3 + w^3", ("z", "w")))
        assert [str(g) for g in u.deformation_monomials] == ["z", "w", "z*w"]

    def test_specialize_is_exact(self):
        from fractions import Fraction
        u = unfold_germ(P("z^3", ("z",)))
        Ft = u.specialize((Fraction(-3),))
        assert Ft == P("z^3 - 3*z", ("z",))

    def test_morse_germ_unfolds_without_parameters(self):
        u = miniversal_unfolding(analyze_germ(P("z^2", ("z",))))
        assert u.parameter_names == ()
        assert u.F == P("z^2", ("z",))
