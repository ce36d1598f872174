"""Classical resultants via the Sylvester matrix.

The determinant is computed by Bareiss fraction-free elimination over the
polynomial ring in the remaining variables; every division performed is
exact, so the result is the exact resultant.
"""

from __future__ import annotations

from .errors import DegreeError
from .poly import Polynomial


def sylvester_matrix(p: Polynomial, q: Polynomial,
                     var: str) -> list[list[Polynomial]]:
    """Sylvester matrix of p, q w.r.t. var over the remaining variables."""
    pc = p.coeffs_in(var)
    qc = q.coeffs_in(var)
    m = len(pc) - 1
    n = len(qc) - 1
    if m <= 0 or n <= 0:
        raise DegreeError(f"both inputs need positive degree in {var}")
    rest = pc[0].variables
    zero = Polynomial.zero(rest)
    size = m + n
    rows = []
    for i in range(n):
        row = [zero] * size
        for j, c in enumerate(reversed(pc)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(qc)):
            row[i + j] = c
        rows.append(row)
    return rows


def poly_determinant(matrix: list[list[Polynomial]]) -> Polynomial:
    """Exact determinant of a square polynomial matrix (Bareiss)."""
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    variables = matrix[0][0].variables
    one = Polynomial.constant(1, variables)
    m = [row[:] for row in matrix]
    sign = 1
    prev = one
    for k in range(n - 1):
        if m[k][k].is_zero():
            for r in range(k + 1, n):
                if not m[r][k].is_zero():
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return Polynomial.zero(variables)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev)
            m[i][k] = Polynomial.zero(variables)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def resultant(p: Polynomial, q: Polynomial, var: str) -> Polynomial:
    """Resultant of p and q with respect to var, exactly."""
    return poly_determinant(sylvester_matrix(p, q, var))
