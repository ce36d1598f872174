"""Critical-locus equations, the chart form of the parameter map, and the
exact jacobian/hessian identities.

On the critical locus the parameter map has coordinates
(z_1..z_n, t_{n+1}..t_{mu-1}); its jacobian determinant is computed from
the block structure (upper-left minus the z-hessian, lower-right
identity) and must equal (-1)^n times the hessian determinant of F.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegeneratePoint, IdentityViolation, OrderTooLow
from .milnor import Unfolding
from .poly import Polynomial
from .resultant import poly_determinant


@dataclass(frozen=True)
class CriticalSystem:
    """Equations of the critical locus and the chart form of p o nu."""

    equations: tuple[Polynomial, ...]
    chart_map: tuple[Polynomial, ...]
    chart_variables: tuple[str, ...]


@dataclass(frozen=True)
class HessianData:
    """z-hessian matrix of F and its exact determinant."""

    matrix: tuple[tuple[Polynomial, ...], ...]
    determinant: Polynomial


@dataclass(frozen=True)
class IdentityReport:
    """Both sides of jac(p o nu) = (-1)^n h_z(F), with the verdict."""

    ok: bool
    jacobian: Polynomial
    signed_hessian: Polynomial
    n: int


def critical_system(u: Unfolding) -> CriticalSystem:
    """dF/dz_i = 0 together with the chart components of p o nu.

    Asserts the structural form dF/dz_i = df/dz_i + t_i + sum_{k>n} ...,
    which is what makes the critical locus a graph over the chart.
    """
    z = u.z_names
    n = u.n
    t = u.parameter_names
    if len(t) < n:
        raise OrderTooLow(
            "unfolding has fewer parameters than z variables; the chart "
            "coordinates require order >= 3")
    equations = tuple(u.F.diff(v) for v in z)
    ring = u.F.variables
    for i, eq in enumerate(equations):
        for j, tj in enumerate(t[:n]):
            expected = 1 if j == i else 0
            linear = eq.diff(tj)
            if linear != Polynomial.constant(expected, ring):
                raise IdentityViolation(
                    f"equation {i} is not linear-unit in {tj}")
    chart_vars = z + t[n:]
    components = []
    for j in range(n):
        # -(df/dz_j + sum_{k>n} t_k dg_k/dz_j): drop the lone t_j term
        comp = -(equations[j] - Polynomial.variable(t[j], ring))
        components.append(comp.project(chart_vars))
    for tj in t[n:]:
        components.append(Polynomial.variable(tj, chart_vars))
    return CriticalSystem(equations=equations,
                          chart_map=tuple(components),
                          chart_variables=chart_vars)


def hessian(u: Unfolding) -> HessianData:
    """Second-derivative matrix of F in the z variables, with determinant."""
    z = u.z_names
    rows = tuple(tuple(u.F.diff(a).diff(b) for b in z) for a in z)
    det = poly_determinant([list(r) for r in rows])
    return HessianData(matrix=rows, determinant=det)


def verify_jacobian_identity(u: Unfolding) -> IdentityReport:
    """Exact polynomial check of jac(p o nu) = (-1)^n h_z(F)."""
    system = critical_system(u)
    n = u.n
    chart_vars = system.chart_variables
    block = [[system.chart_map[j].diff(zi) for zi in u.z_names]
             for j in range(n)]
    jac = poly_determinant(block)
    h = hessian(u).determinant.project(chart_vars)
    rhs = h if n % 2 == 0 else -h
    return IdentityReport(ok=(jac == rhs), jacobian=jac,
                          signed_hessian=rhs, n=n)


def sign_relation_check(h_value: Fraction, morse_index: int, n: int) -> bool:
    """sign(jac(p o nu)) = (-1)^n (-1)^index, i.e. sign(h) = (-1)^index."""
    if h_value == 0:
        raise DegeneratePoint("hessian determinant vanishes")
    sign = 1 if h_value > 0 else -1
    return sign == (-1) ** morse_index
