"""Critical-locus structure and the exact jacobian/hessian identities."""

from fractions import Fraction

import pytest

from singlab.critmap import (critical_system, hessian, sign_relation_check,
                             verify_jacobian_identity)
from singlab.errors import DegeneratePoint
from singlab.milnor import unfold_germ
from singlab.poly import parse_polynomial


def U(text, names):
    return unfold_germ(parse_polynomial(text, names))


CORPUS = [
    ("z^3", ("z",)), ("z^4", ("z",)), ("z^5", ("z",)), ("z^6", ("z",)),
    ("z^7", ("z",)), ("z^3 + w^3", ("z", "w")), ("z^3 + w^4", ("z", "w")),
    ("z^2*w + w^4", ("z", "w")),
]


class TestCriticalSystem:
    def test_a2(self):
        s = critical_system(U("z^3", ("z",)))
        assert [str(e) for e in s.equations] == ["3*z^2 + t1"]
        assert [str(c) for c in s.chart_map] == ["-3*z^2"]
        assert s.chart_variables == ("z",)

    def test_a3(self):
        s = critical_system(U("z^4", ("z",)))
        assert [str(e) for e in s.equations] == ["4*z^3 + 2*z*t2 + t1"]
        assert [str(c) for c in s.chart_map] == ["-4*z^3 - 2*z*t2", "t2"]

    def test_cubic_surface(self):
        s = critical_system(U("z^3 + w^3", ("z", "w")))
        assert [str(e) for e in s.equations] == \
            ["3*z^2 + w*t3 + t1", "3*w^2 + z*t3 + t2"]
        assert [str(c) for c in s.chart_map] == \
            ["-3*z^2 - w*t3", "-3*w^2 - z*t3", "t3"]
        assert s.chart_variables == ("z", "w", "t3")


class TestJacobianIdentity:
    @pytest.mark.parametrize("germ,names", CORPUS)
    def test_identity_holds_exactly(self, germ, names):
        report = verify_jacobian_identity(U(germ, names))
        assert report.ok
        assert report.jacobian == report.signed_hessian

    def test_a2_values(self):
        report = verify_jacobian_identity(U("z^3", ("z",)))
        assert str(report.jacobian) == "-6*z"

    def test_cubic_surface_values(self):
        report = verify_jacobian_identity(U("z^3 + w^3", ("z", "w")))
        # (-1)^2 det [[6z, t3], [t3, 6w]] = 36 z w - t3^2
        assert str(report.jacobian) == "36*z*w - t3^2"


class TestHessian:
    def test_a3_hessian_determinant(self):
        h = hessian(U("z^4", ("z",)))
        assert str(h.determinant) == "12*z^2 + 2*t2"

    def test_2d_matrix_shape(self):
        h = hessian(U("z^3 + w^3", ("z", "w")))
        assert len(h.matrix) == 2 and len(h.matrix[0]) == 2


class TestSignRelation:
    def test_minimum(self):
        assert sign_relation_check(Fraction(6), 0, 1)

    def test_maximum(self):
        assert sign_relation_check(Fraction(-6), 1, 1)

    def test_inconsistent_saddle_flagged(self):
        # a 2D saddle must have negative hessian determinant
        assert not sign_relation_check(Fraction(1), 1, 2)

    def test_degenerate_rejected(self):
        with pytest.raises(DegeneratePoint):
            sign_relation_check(Fraction(0), 0, 1)
