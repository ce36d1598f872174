"""Numerical semigroups, toric ideals of monomial curves, unimodular fan
resolution, and strict-transform / overweight-deformation checking.

The resolution pipeline is purely combinatorial: stellar subdivision of
the positive orthant at the generator vector, then repeated subdivision
at a minimal lattice point of each non-unimodular cone's fundamental
parallelepiped until every cone is unimodular.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import (DimensionTooLarge, GcdNotOne, NonBinomialElement,
                     NotABranch, OrderMismatch, RegularizationBudget,
                     TruncationInsufficient)
from .groebner import eliminate
from .poly import Polynomial

Vector = tuple[int, ...]


# -- numerical semigroups ---------------------------------------------------

@dataclass(frozen=True)
class NumericalSemigroup:
    """Cofinite additive sub-semigroup of N, with gcd-1 generators."""

    minimal_generators: tuple[int, ...]
    conductor: int
    apery: tuple[int, ...]
    gaps: tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        return self.minimal_generators[0]

    @property
    def g(self) -> int:
        """Number of minimal generators minus one (the genus-style index)."""
        return len(self.minimal_generators) - 1

    def contains(self, x: int) -> bool:
        if x < 0:
            return False
        if x >= self.conductor:
            return True
        return x not in set(self.gaps)


def _achievable(gens: list[int], bound: int) -> list[bool]:
    table = [False] * (bound + 1)
    table[0] = True
    for x in range(1, bound + 1):
        for g in gens:
            if g <= x and table[x - g]:
                table[x] = True
                break
    return table


def semigroup_from_generators(gens: list[int]) -> NumericalSemigroup:
    """Semigroup data via dynamic programming up to the conductor."""
    gens = sorted(set(int(g) for g in gens))
    if not gens or gens[0] <= 0:
        raise ValueError("generators must be positive integers")
    if math.gcd(*gens) != 1:
        raise GcdNotOne(f"gcd of {gens} is not 1")
    m = gens[0]
    bound = max(m * gens[-1], m + 1)
    while True:
        table = _achievable(gens, bound)
        run = 0
        conductor = None
        for x in range(bound + 1):
            run = run + 1 if table[x] else 0
            if run >= m:
                conductor = x - m + 1
                break
        if conductor is not None:
            break
        bound *= 2
    gaps = tuple(x for x in range(conductor) if not table[x])
    # Apery set: smallest member in each residue class mod m
    apery = []
    for r in range(m):
        x = r
        while x <= conductor + m and not (table[x] if x <= bound else True):
            x += m
        apery.append(x)
    # minimal generators: members not a sum of two nonzero members
    members = [x for x in range(1, conductor + m + 1)
               if (table[x] if x <= bound else True)]
    member_set = set(members)
    minimal = []
    for x in members:
        if x > max(apery) and x > m:
            break
        if not any((x - y) in member_set for y in members if 0 < y < x):
            minimal.append(x)
    return NumericalSemigroup(
        minimal_generators=tuple(minimal),
        conductor=conductor,
        apery=tuple(apery),
        gaps=gaps,
    )


# -- plane branches ---------------------------------------------------------

@dataclass(frozen=True)
class PlaneBranch:
    """Parametrization x = t^beta0, y = sum of c_j t^j (finite)."""

    x_exponent: int
    y_terms: tuple[tuple[int, Fraction], ...]  # (exponent, coefficient)

    def y_exponents(self) -> list[int]:
        return sorted(e for e, c in self.y_terms if c != 0)


def characteristic_exponents(b: PlaneBranch) -> list[int]:
    """Exponents where the gcd chain drops, starting from beta0."""
    chain = [b.x_exponent]
    e = b.x_exponent
    for j in b.y_exponents():
        g = math.gcd(e, j)
        if g < e:
            chain.append(j)
            e = g
    if e != 1:
        raise NotABranch(f"gcd chain stalls at {e}; not a branch "
                         "parametrization")
    return chain


def branch_semigroup(b: PlaneBranch) -> NumericalSemigroup:
    """Value semigroup via the classical generator recursion."""
    if b.x_exponent <= 0:
        raise NotABranch("x exponent must be positive")
    if b.x_exponent == 1:
        return semigroup_from_generators([1])
    chain = characteristic_exponents(b)
    beta0 = chain[0]
    gens = [beta0]
    if len(chain) == 1:
        return semigroup_from_generators(gens)
    e = [beta0]
    for bi in chain[1:]:
        e.append(math.gcd(e[-1], bi))
    bars = [beta0, chain[1]]
    for i in range(1, len(chain) - 1):
        n_i = e[i - 1] // e[i]
        bars.append(n_i * bars[i] + chain[i + 1] - chain[i])
    return semigroup_from_generators(bars)


# -- toric ideal ------------------------------------------------------------

@dataclass(frozen=True)
class ToricIdeal:
    """Binomial generators of the kernel of U_i -> T^{gamma_i}."""

    binomials: tuple[Polynomial, ...]
    weights: tuple[int, ...]
    variables: tuple[str, ...]


def _weight_of_exps(exps, weights) -> int:
    return sum(e * w for e, w in zip(exps, weights))


def toric_ideal(gamma: NumericalSemigroup, budget: int | None = None
                ) -> ToricIdeal:
    """Eliminate T from {U_i - T^{gamma_i}}; certify the result binomial."""
    gens = gamma.minimal_generators
    if len(gens) < 2:
        raise ValueError("toric ideal needs at least two generators (g >= 1)")
    unames = tuple(f"U{i}" for i in range(len(gens)))
    ring = ("T",) + unames
    T = Polynomial.variable("T", ring)
    ideal = [Polynomial.variable(u, ring) - T ** g
             for u, g in zip(unames, gens)]
    kernel = eliminate(ideal, ["T"], budget=budget)
    for p in kernel:
        if len(p.terms) != 2:
            raise NonBinomialElement(f"{p} is not a binomial")
        (e1, c1), (e2, c2) = sorted(p.terms.items())
        if {c1, c2} != {Fraction(1), Fraction(-1)}:
            raise NonBinomialElement(f"{p} has non-unit coefficients")
        if _weight_of_exps(e1, gens) != _weight_of_exps(e2, gens):
            raise NonBinomialElement(f"{p} is not weight-homogeneous")
    return ToricIdeal(binomials=tuple(kernel), weights=gens,
                      variables=unames)


# -- cones and fans ---------------------------------------------------------

@dataclass(frozen=True)
class Cone:
    """Simplicial cone spanned by primitive integer ray vectors."""

    rays: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.rays)

    def matrix(self) -> list[list[int]]:
        """Rays as columns."""
        d = len(self.rays)
        return [[self.rays[j][i] for j in range(d)] for i in range(d)]

    def determinant(self) -> int:
        return _int_det(self.matrix())

    def is_unimodular(self) -> bool:
        return abs(self.determinant()) == 1

    def coefficients(self, v) -> tuple[Fraction, ...] | None:
        """Barycentric coefficients of v, or None if v is outside."""
        sol = _solve(self.matrix(), list(v))
        if sol is None or any(c < 0 for c in sol):
            return None
        return tuple(sol)

    def contains(self, v) -> bool:
        return self.coefficients(v) is not None


@dataclass(frozen=True)
class Fan:
    cones: tuple[Cone, ...]

    def containing(self, v) -> list[Cone]:
        return [c for c in self.cones if c.contains(v)]


def _int_det(m: list[list[int | Fraction]]):
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if n == 3:
        return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
    raise DimensionTooLarge("determinants implemented up to 3x3")


def _solve(m: list[list[int]], v: list[int]) -> list[Fraction] | None:
    """Exact solve of m x = v by Cramer; None for singular m."""
    det = _int_det(m)
    if det == 0:
        return None
    n = len(m)
    out = []
    for j in range(n):
        mj = [[(v[i] if k == j else m[i][k]) for k in range(n)]
              for i in range(n)]
        out.append(Fraction(_int_det(mj), det))
    return out


def _primitive(v: Vector) -> Vector:
    g = math.gcd(*[abs(x) for x in v])
    return tuple(x // g for x in v)


def _stellar(fan: list[Cone], v: Vector) -> list[Cone]:
    v = _primitive(v)
    out = []
    for cone in fan:
        coeffs = cone.coefficients(v)
        if coeffs is None or v in cone.rays:
            out.append(cone)
            continue
        for i, c in enumerate(coeffs):
            if c > 0:
                rays = tuple(v if j == i else r
                             for j, r in enumerate(cone.rays))
                out.append(Cone(rays=rays))
    return out


def _parallelepiped_point(cone: Cone) -> Vector:
    """Minimal nonzero lattice point of the fundamental parallelepiped.

    Minimality is (sum of barycentric coordinates, lexicographic), the
    deterministic pivot rule for regularization.
    """
    det = abs(cone.determinant())
    d = cone.dim
    best = None
    for combo in product(range(det), repeat=d):
        if all(c == 0 for c in combo):
            continue
        lam = [Fraction(c, det) for c in combo]
        point = tuple(
            sum(lam[j] * cone.rays[j][i] for j in range(d))
            for i in range(d))
        if any(x.denominator != 1 for x in point):
            continue
        point = tuple(int(x) for x in point)
        key = (sum(lam), point)
        if best is None or key < best[0]:
            best = (key, point)
    assert best is not None  # |det| > 1 guarantees an interior lattice point
    return best[1]


@dataclass(frozen=True)
class ResolutionCertificate:
    """Unimodular fan subdividing the orthant, with the distinguished chart."""

    fan: Fan
    chart: int
    exponents: tuple[int, ...]
    gamma: Vector

    def chart_cone(self) -> Cone:
        return self.fan.cones[self.chart]


def resolve_monomial_curve(gamma: NumericalSemigroup,
                           max_subdivisions: int = 500
                           ) -> ResolutionCertificate:
    """Unimodular subdivision of the orthant with gamma as a ray."""
    gens = gamma.minimal_generators
    d = len(gens)
    if d > 3:
        raise DimensionTooLarge(f"ambient dimension {d} > 3")
    if d < 2:
        raise ValueError("resolution needs g >= 1")
    orthant = Cone(rays=tuple(
        tuple(1 if i == j else 0 for j in range(d)) for i in range(d)))
    fan = _stellar([orthant], tuple(gens))
    for _ in range(max_subdivisions):
        bad = next((c for c in sorted(fan, key=lambda c: c.rays)
                    if not c.is_unimodular()), None)
        if bad is None:
            break
        fan = _stellar(fan, _parallelepiped_point(bad))
    else:
        raise RegularizationBudget(
            f"not unimodular after {max_subdivisions} subdivisions")
    cones = tuple(sorted(fan, key=lambda c: c.rays))
    gvec = _primitive(tuple(gens))
    chart = next(i for i, c in enumerate(cones) if gvec in c.rays)
    sol = _solve(cones[chart].matrix(), list(gens))
    exponents = tuple(int(x) for x in sol)
    assert sorted(exponents) == [0] * (d - 1) + [1]
    return ResolutionCertificate(fan=Fan(cones=cones), chart=chart,
                                 exponents=exponents, gamma=gvec)


# -- truncated series and strict transforms ---------------------------------

class Series:
    """Truncated power series in t with exact rational coefficients.

    Exponents below `prec` are exact; everything >= prec is unknown.
    """

    def __init__(self, terms: dict[int, Fraction], prec: int):
        self.terms = {int(e): Fraction(c) for e, c in terms.items()
                      if c != 0 and e < prec}
        self.prec = prec

    @classmethod
    def from_pairs(cls, pairs, prec: int) -> "Series":
        return cls({e: c for e, c in pairs}, prec)

    def order(self) -> int | None:
        return min(self.terms) if self.terms else None

    def leading(self) -> Fraction:
        return self.terms[self.order()]

    def coefficient(self, e: int) -> Fraction:
        return self.terms.get(e, Fraction(0))

    def mul(self, other: "Series") -> "Series":
        prec = min(self.prec + (other.order() or 0),
                   other.prec + (self.order() or 0)) \
            if self.terms and other.terms else min(self.prec, other.prec)
        out: dict[int, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                if e1 + e2 < prec:
                    out[e1 + e2] = out.get(e1 + e2, Fraction(0)) + c1 * c2
        return Series(out, prec)

    def add(self, other: "Series") -> "Series":
        prec = min(self.prec, other.prec)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return Series(out, prec)

    def scale(self, c: Fraction) -> "Series":
        return Series({e: c * v for e, v in self.terms.items()}, self.prec)

    def shift(self, k: int) -> "Series":
        return Series({e + k: c for e, c in self.terms.items()},
                      self.prec + k)

    def inverse(self, prec: int) -> "Series":
        """1/self for a unit series (order 0, nonzero constant term)."""
        if self.order() != 0:
            raise ValueError("can only invert a unit series")
        c0 = self.terms[0]
        inv = {0: 1 / c0}
        for e in range(1, min(prec, self.prec)):
            acc = Fraction(0)
            for k, c in self.terms.items():
                if 0 < k <= e:
                    acc += c * inv.get(e - k, Fraction(0))
            inv[e] = -acc / c0
        return Series(inv, min(prec, self.prec))

    def power(self, k: int, prec: int) -> "Series":
        """self**k for integer k (negative allowed for t^m * unit form)."""
        ordr = self.order()
        if ordr is None:
            if k <= 0:
                raise ValueError("cannot take nonpositive power of zero")
            return Series({}, prec)
        unit = Series({e - ordr: c for e, c in self.terms.items()},
                      self.prec - ordr)
        if k < 0:
            unit = unit.inverse(prec + abs(k) * max(ordr, 0) + 1)
            base, n = unit, -k
        else:
            base, n = unit, k
        acc = Series({0: Fraction(1)}, prec + abs(k * ordr) + 1)
        for _ in range(n):
            acc = acc.mul(base)
        return acc.shift(k * ordr)


@dataclass
class TransformReport:
    orders: tuple[int, ...]
    leading_units: tuple[Fraction, ...]
    expected: tuple[int, ...]
    ok: bool
    detail: str


def branch_series(b: PlaneBranch, prec: int) -> tuple[Series, Series]:
    x = Series({b.x_exponent: Fraction(1)}, prec)
    y = Series.from_pairs(b.y_terms, prec)
    return x, y


def _represent(value: int, gens, caps) -> tuple[int, ...] | None:
    """value = sum a_i gens[i] with 0 <= a_i < caps[i] for i >= 1, a_0 free."""
    if len(gens) == 1:
        q, r = divmod(value, gens[0])
        return (q,) if r == 0 and q >= 0 else None
    for a in range(caps[-1]):
        rest = value - a * gens[-1]
        if rest < 0:
            break
        sub = _represent(rest, gens[:-1], caps[:-1])
        if sub is not None:
            return sub + (a,)
    return None


def branch_embedding(b: PlaneBranch, prec: int | None = None
                     ) -> tuple[NumericalSemigroup, list[Series]]:
    """Embedding series (xi_0..xi_g) of a plane branch, one per generator.

    xi_0 = x and xi_1 = y; each later xi_k is a semiroot: xi_{k-1} raised
    to n_{k-1}, corrected by monomials in the earlier xi until the order
    leaves the subsemigroup they generate, landing exactly at gens[k].
    """
    gamma = branch_semigroup(b)
    gens = gamma.minimal_generators
    if prec is None:
        prec = gamma.conductor + 60
    x, y = branch_series(b, prec)
    xi = [x, y]
    e = [gens[0]]
    for g in gens[1:]:
        e.append(math.gcd(e[-1], g))
    for k in range(2, len(gens)):
        n_prev = e[k - 2] // e[k - 1]
        cur = xi[k - 1].power(n_prev, prec)
        caps = [e[j - 1] // e[j] for j in range(1, k)]
        while True:
            o = cur.order()
            if o is None or o > gamma.conductor:
                raise TruncationInsufficient(
                    f"semiroot {k} lost all terms below the conductor")
            if o == gens[k]:
                break
            rep = _represent(o, list(gens[:k]), [0] + caps)
            if rep is None:
                raise NotABranch(
                    f"semiroot {k} has order {o} outside the expected chain")
            mono = Series({0: Fraction(1)}, prec)
            for j, a in enumerate(rep):
                if a:
                    mono = mono.mul(xi[j].power(a, prec))
            c = cur.leading() / mono.leading()
            cur = cur.add(mono.scale(-c))
        xi.append(cur)
    return gamma, xi


def verify_strict_transform(xi: list[Series],
                            gamma: NumericalSemigroup,
                            cert: ResolutionCertificate,
                            buffer: int = 10) -> TransformReport:
    """Chart coordinates of the embedded branch under the toric map.

    y_j = prod_i xi_i^{(V^-1)_{j,i}} must have order a_j, with the unique
    a_j = 1 coordinate a uniformized parameter (unit linear coefficient)
    and the rest units.
    """
    gens = gamma.minimal_generators
    d = len(gens)
    if len(xi) != d:
        raise OrderMismatch(f"need {d} embedding series, got {len(xi)}")
    need = gamma.conductor + buffer
    for i, s in enumerate(xi):
        if s.order() != gens[i]:
            raise OrderMismatch(
                f"ord xi_{i} = {s.order()}, expected {gens[i]}")
        if s.prec < need:
            raise TruncationInsufficient(
                f"xi_{i} precision {s.prec} < conductor + buffer = {need}")
    cone = cert.chart_cone()
    det = cone.determinant()
    inv = [[_cofactor(cone.matrix(), j, i, det) for i in range(d)]
           for j in range(d)]
    orders = []
    units = []
    for j in range(d):
        prod = Series({0: Fraction(1)}, need)
        for i in range(d):
            k = inv[j][i]
            if k != 0:
                prod = prod.mul(xi[i].power(k, need))
        o = prod.order()
        if o is None:
            raise TruncationInsufficient(
                f"chart coordinate {j} vanishes to precision {need}")
        orders.append(o)
        units.append(prod.leading())
    expected = cert.exponents
    ok = tuple(orders) == expected and all(c != 0 for c in units)
    detail = "strict transform smooth and transverse" if ok else \
        f"orders {orders} != expected {list(expected)}"
    return TransformReport(orders=tuple(orders), leading_units=tuple(units),
                           expected=expected, ok=ok, detail=detail)


def _cofactor(m: list[list[int]], i: int, j: int, det: int) -> int:
    """Entry (i, j) of the exact inverse of an integer matrix, det +-1."""
    n = len(m)
    minor = [[m[r][c] for c in range(n) if c != i]
             for r in range(n) if r != j]
    sign = (-1) ** (i + j)
    if n == 1:
        cof = 1
    else:
        cof = _int_det(minor)
    val = Fraction(sign * cof, det)
    assert val.denominator == 1
    return int(val)


# -- weights and overweight deformations ------------------------------------

def weight(series: Polynomial, weights) -> int | float:
    """Monomial valuation: min weight over the support; inf for zero."""
    if series.is_zero():
        return math.inf
    return min(_weight_of_exps(e, weights) for e in series.terms)


@dataclass(frozen=True)
class OverweightDeformation:
    weights: tuple[int, ...]
    series: tuple[Polynomial, ...]
    expected_initials: tuple[Polynomial, ...]


@dataclass
class OverweightVerdict:
    ok: bool
    initial_form: Polynomial
    initial_weight: int | float
    detail: str


def overweight_check(d: OverweightDeformation) -> list[OverweightVerdict]:
    """PASS iff each series' minimal-weight part is its expected binomial."""
    for b in d.expected_initials:
        if len(b.terms) != 2:
            raise ValueError(f"expected initial {b} is not a binomial")
        (e1, _), (e2, _) = b.terms.items()
        if _weight_of_exps(e1, d.weights) != _weight_of_exps(e2, d.weights):
            raise ValueError(f"expected initial {b} is not weight-homogeneous")
    out = []
    for s, expected in zip(d.series, d.expected_initials):
        w = weight(s, d.weights)
        initial = Polynomial(
            s.variables,
            {e: c for e, c in s.terms.items()
             if _weight_of_exps(e, d.weights) == w})
        ok = initial == expected.extend(s.variables)
        detail = "initial form matches; all other terms heavier" if ok else \
            f"initial form {initial} at weight {w} differs from {expected}"
        out.append(OverweightVerdict(ok=ok, initial_form=initial,
                                     initial_weight=w, detail=detail))
    return out
