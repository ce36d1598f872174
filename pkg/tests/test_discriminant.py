"""Exact discriminants, Cerf traces, Maxwell scans, equal-level probe."""

from fractions import Fraction

import pytest

from singlab.discriminant import (cerf_trace, equal_level_search,
                                  exact_discriminant_1d, maxwell_refine,
                                  maxwell_scan, slice_sample)
from singlab.errors import PathOutsideBox, UnsupportedDimension
from singlab.milnor import unfold_germ
from singlab.morselab import ParameterPoint
from singlab.poly import parse_polynomial
from singlab.realroots import count_distinct_roots


def U(text, names):
    return unfold_germ(parse_polynomial(text, names))


def T(*xs):
    return ParameterPoint(tuple(Fraction(x) for x in xs))


class TestExactDiscriminant:
    def test_a2_cusp(self):
        curve = exact_discriminant_1d(U("z^3", ("z",)))
        assert str(curve) == "4*t1^3 + 27*lambda^2"

    def test_a3_swallowtail_shape(self):
        curve = exact_discriminant_1d(U("z^4", ("z",)))
        poly = curve.poly
        assert set(poly.variables) == {"lambda", "t1", "t2"}
        assert poly.degree_in("lambda") == 3

    def test_morse_germ_gives_lambda_axis(self):
        curve = exact_discriminant_1d(U("z^2", ("z",)))
        assert str(curve) == "lambda"

    def test_vanishes_exactly_on_multiple_root_locus(self):
        # points (z0, t1) with t1 = -3 z0^2, lambda = -2 z0^3 lie on the curve
        curve = exact_discriminant_1d(U("z^3", ("z",)))
        for num in range(-20, 21):
            z0 = Fraction(num, 7)
            value = curve.poly.evaluate(
                {"t1": -3 * z0 ** 2, "lambda": -2 * z0 ** 3})
            assert value == 0

    def test_2d_unsupported(self):
        with pytest.raises(UnsupportedDimension):
            exact_discriminant_1d(U("z^3 + w^3", ("z", "w")))


class TestCerfTrace:
    def test_a2_single_death(self):
        trace = cerf_trace(U("z^3", ("z",)), [T(Fraction(-1, 2)),
                                              T(Fraction(1, 2))], steps=40)
        deaths = [e for e in trace.events if e.kind == "death"]
        assert len(deaths) == 1
        assert deaths[0].data["hessian_witness"] < 1e-6
        assert not [e for e in trace.events if e.kind == "unresolved"]

    def test_a3_death_along_t2(self):
        # at fixed t1 = 1/4, two of three critical points merge as t2 rises
        trace = cerf_trace(U("z^4", ("z",)),
                           [T(Fraction(1, 4), -1), T(Fraction(1, 4), 1)],
                           steps=40)
        kinds = [e.kind for e in trace.events]
        assert kinds.count("death") == 1

    def test_constant_path_no_events(self):
        trace = cerf_trace(U("z^3", ("z",)), [T(-1), T(-1)], steps=10)
        assert trace.events == []

    def test_counts_constant_between_events(self):
        trace = cerf_trace(U("z^3", ("z",)), [T(Fraction(-1, 2)),
                                              T(Fraction(1, 2))], steps=40)
        counts = [len(r.points) for r in trace.samples if r is not None]
        assert set(counts) == {0, 2}

    def test_path_outside_box_rejected(self):
        with pytest.raises(PathOutsideBox):
            cerf_trace(U("z^3", ("z",)), [T(0), T(5)], steps=10)


class TestMaxwell:
    def test_a3_symmetric_maxwell_point(self):
        pts = maxwell_scan(U("z^4", ("z",)),
                           segments=[(T(-1, -2), T(1, -2))])
        assert len(pts) == 1
        assert abs(pts[0].t.t[0]) < Fraction(1, 10 ** 8)
        assert pts[0].gap < 1e-8

    def test_a2_never_two_minima(self):
        assert maxwell_scan(U("z^3", ("z",)), samples=30, seed=3) == []

    def test_refine_needs_basin_switch(self):
        # both endpoints in the same basin: no crossing to find
        u = U("z^4", ("z",))
        assert maxwell_refine(u, T(Fraction(1, 2), -2),
                              T(Fraction(3, 4), -2)) is None


class TestEqualLevel:
    def test_a3_minima_witness(self):
        w = equal_level_search(U("z^4", ("z",)), index=0, budget=60, seed=2)
        assert w is not None and w.flag == "witness"
        assert abs(w.t.t[0]) < 1e-6  # symmetry stratum t1 = 0
        assert w.gap < 1e-8

    def test_a2_singleton(self):
        w = equal_level_search(U("z^3", ("z",)), index=0, budget=40, seed=2)
        assert w is not None and w.flag == "singleton"


class TestSliceSample:
    def test_counts_match_direct_root_isolation(self):
        u = U("z^3", ("z",))
        grid = slice_sample(u, "t1", (Fraction(-2), Fraction(2)),
                            (Fraction(-2), Fraction(2)), {}, grid=4)
        # recompute one cell directly
        lam = Fraction(-2) + Fraction(4) * Fraction(3, 8)  # row 1 center
        t1 = Fraction(-2) + Fraction(4) * Fraction(5, 8)   # col 2 center
        Ft = u.specialize((t1,))
        expected = count_distinct_roots(Ft - lam, Fraction(-4), Fraction(4))
        assert grid.root_counts[1][2] == expected

    def test_disc_signs_follow_exact_discriminant(self):
        u = U("z^3", ("z",))
        grid = slice_sample(u, "t1", (Fraction(-2), Fraction(2)),
                            (Fraction(-2), Fraction(2)), {}, grid=6)
        curve = exact_discriminant_1d(u).poly
        for i in range(6):
            lam = Fraction(-2) + Fraction(4) * Fraction(2 * i + 1, 12)
            for j in range(6):
                t1 = Fraction(-2) + Fraction(4) * Fraction(2 * j + 1, 12)
                val = curve.evaluate({"lambda": lam, "t1": t1})
                sign = 0 if val == 0 else (1 if val > 0 else -1)
                assert grid.disc_signs[i][j] == sign

    def test_single_cell_grid(self):
        grid = slice_sample(U("z^3", ("z",)), "t1",
                            (Fraction(-1), Fraction(1)),
                            (Fraction(-1), Fraction(1)), {}, grid=1)
        assert len(grid.root_counts) == 1 and len(grid.root_counts[0]) == 1
