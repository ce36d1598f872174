"""Buchberger's algorithm with reduced bases and a hard step budget.

Pair selection is deterministic (lexicographically smallest key of the
lcm of leading terms), so the returned reduced basis is a canonical
function of the input and the order.  The budget is read from the
SINGLAB_BUDGET environment variable unless passed explicitly.
"""

from __future__ import annotations

import os
from fractions import Fraction

from .errors import BudgetExceeded, VariableMismatch
from .poly import GREVLEX, Exponents, MonomialOrder, Polynomial

DEFAULT_BUDGET = 200_000


def _budget(explicit: int | None) -> int:
    if explicit is not None:
        return explicit
    return int(os.environ.get("SINGLAB_BUDGET", DEFAULT_BUDGET))


def _divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


def normal_form(p: Polynomial, basis: list[Polynomial],
                order: MonomialOrder = GREVLEX,
                budget: int | None = None) -> Polynomial:
    """Remainder of p under multivariate division by basis.

    Unique when basis is a Groebner basis for the order.  Divisors are
    tried in decreasing leading-term order for determinism.
    """
    for g in basis:
        if g.variables != p.variables:
            raise VariableMismatch(f"{g.variables} vs {p.variables}")
    divisors = sorted((g for g in basis if not g.is_zero()),
                      key=lambda g: order.key(g.leading(order)[0]),
                      reverse=True)
    lead = [g.leading(order) for g in divisors]
    steps = 0
    cap = _budget(budget)
    rem = Polynomial.zero(p.variables)
    work = p
    while not work.is_zero():
        steps += 1
        if steps > cap:
            raise BudgetExceeded(f"normal_form exceeded {cap} steps")
        we, wc = work.leading(order)
        for g, (ge, gc) in zip(divisors, lead):
            if _divides(ge, we):
                q = Polynomial.monomial(
                    tuple(a - b for a, b in zip(we, ge)), wc / gc, p.variables)
                work = work - g * q
                break
        else:
            t = Polynomial.monomial(we, wc, p.variables)
            rem = rem + t
            work = work - t
    return rem


def _s_polynomial(f: Polynomial, g: Polynomial,
                  order: MonomialOrder) -> Polynomial:
    fe, fc = f.leading(order)
    ge, gc = g.leading(order)
    l = _lcm(fe, ge)
    mf = Polynomial.monomial(tuple(a - b for a, b in zip(l, fe)),
                             1 / fc, f.variables)
    mg = Polynomial.monomial(tuple(a - b for a, b in zip(l, ge)),
                             1 / gc, g.variables)
    return f * mf - g * mg


def groebner_basis(generators: list[Polynomial],
                   order: MonomialOrder = GREVLEX,
                   budget: int | None = None) -> list[Polynomial]:
    """Reduced Groebner basis of the ideal generated by the inputs."""
    if not generators:
        raise ValueError("empty generator list")
    variables = generators[0].variables
    for g in generators:
        if g.variables != variables:
            raise VariableMismatch(f"{g.variables} vs {variables}")
    cap = _budget(budget)

    basis = [g.monic(order) for g in generators if not g.is_zero()]
    if not basis:
        return [Polynomial.zero(variables)]

    def pair_key(i: int, j: int):
        l = _lcm(basis[i].leading(order)[0], basis[j].leading(order)[0])
        return (order.key(l), i, j)

    pairs = {(i, j) for i in range(len(basis)) for j in range(i)}
    steps = 0
    while pairs:
        steps += 1
        if steps > cap:
            raise BudgetExceeded(f"groebner_basis exceeded {cap} pair steps")
        i, j = min(pairs, key=lambda p: pair_key(p[0], p[1]))
        pairs.discard((i, j))
        fe = basis[i].leading(order)[0]
        ge = basis[j].leading(order)[0]
        # Buchberger's first criterion: coprime leading terms reduce to 0.
        if _lcm(fe, ge) == tuple(a + b for a, b in zip(fe, ge)):
            continue
        s = _s_polynomial(basis[i], basis[j], order)
        r = normal_form(s, basis, order, budget=cap)
        if not r.is_zero():
            basis.append(r.monic(order))
            k = len(basis) - 1
            pairs.update((k, m) for m in range(k))
    return _reduce_basis(basis, order, cap)


def _reduce_basis(basis: list[Polynomial], order: MonomialOrder,
                  cap: int) -> list[Polynomial]:
    # Minimalize: drop elements whose leading term another's divides.
    leads = [g.leading(order)[0] for g in basis]
    minimal = []
    for i in range(len(basis)):
        li = leads[i]
        dominated = False
        for j in range(len(basis)):
            if i == j:
                continue
            lj = leads[j]
            if _divides(lj, li) and (lj != li or j < i):
                dominated = True
                break
        if not dominated:
            minimal.append(basis[i])
    # Tail-reduce each element against the others.
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        r = normal_form(g, others, order, budget=cap) if others else g
        if not r.is_zero():
            reduced.append(r.monic(order))
    reduced.sort(key=lambda g: order.key(g.leading(order)[0]))
    return reduced


def ideal_contains(p: Polynomial, basis: list[Polynomial],
                   order: MonomialOrder = GREVLEX) -> bool:
    """Ideal membership against a Groebner basis."""
    return normal_form(p, basis, order).is_zero()


def eliminate(generators: list[Polynomial], drop: list[str],
              budget: int | None = None) -> list[Polynomial]:
    """Generators of the elimination ideal with the drop variables removed.

    Uses lex with the dropped variables placed first in the ring.
    """
    variables = generators[0].variables
    front = tuple(v for v in variables if v in drop)
    back = tuple(v for v in variables if v not in drop)
    ring = front + back
    gb = groebner_basis([g.extend(ring) for g in generators],
                        MonomialOrder("lex"), budget=budget)
    kept = [g for g in gb if not any(g.uses(v) for v in front)]
    return [g.project(back) for g in kept]


def staircase_monomials(gb: list[Polynomial],
                        order: MonomialOrder = GREVLEX) -> list[Exponents]:
    """All monomials not divisible by any leading term; None if infinite.

    Finite exactly when every variable has a pure power among the leading
    terms (zero-dimensional ideal).
    """
    if not gb or all(g.is_zero() for g in gb):
        return None
    variables = gb[0].variables
    n = len(variables)
    leads = [g.leading(order)[0] for g in gb if not g.is_zero()]
    if any(sum(e) == 0 for e in leads):
        return []  # ideal is the whole ring
    caps = []
    for i in range(n):
        pure = [e[i] for e in leads if all(e[j] == 0 for j in range(n) if j != i)]
        if not pure:
            return None
        caps.append(min(pure))

    out = []

    def rec(prefix):
        if len(prefix) == n:
            e = tuple(prefix)
            if not any(_divides(l, e) for l in leads):
                out.append(e)
            return
        for k in range(caps[len(prefix)]):
            rec(prefix + [k])

    rec([])
    return out
