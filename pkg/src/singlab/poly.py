"""Exact multivariate polynomials over the rationals.

Terms are stored as a map from exponent tuples to nonzero Fraction
coefficients, so equal polynomials have identical canonical form and all
arithmetic is exact.  Monomial orders (grevlex and lex) are provided as
key functions on exponent tuples; lex with the eliminated variables first
serves as the elimination order.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping

from .errors import DegreeError, VariableMismatch, ZeroPolynomial

Exponents = tuple[int, ...]


class MonomialOrder:
    """Total order on monomials, exposed as a sort key on exponent tuples.

    kind is 'grevlex' or 'lex'; the variable list carries the precedence
    (for elimination, put the eliminated variables first and use 'lex').
    """

    def __init__(self, kind: str):
        if kind not in ("grevlex", "lex"):
            raise ValueError(f"unknown monomial order {kind!r}")
        self.kind = kind

    def key(self, exps: Exponents):
        if self.kind == "grevlex":
            return (sum(exps), tuple(-e for e in reversed(exps)))
        return exps

    def __repr__(self):
        return f"MonomialOrder({self.kind!r})"

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.kind == other.kind

    def __hash__(self):
        return hash(("MonomialOrder", self.kind))


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficient must be exact rational, got {type(c).__name__}")


class Polynomial:
    """Immutable exact polynomial over a declared variable tuple."""

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables: Iterable[str], terms: Mapping[Exponents, Fraction]):
        variables = tuple(variables)
        clean: dict[Exponents, Fraction] = {}
        n = len(variables)
        for exps, c in terms.items():
            c = _as_fraction(c)
            if c == 0:
                continue
            exps = tuple(int(e) for e in exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for {n} variables")
            clean[exps] = clean.get(exps, Fraction(0)) + c
        self.variables = variables
        self.terms = {e: c for e, c in clean.items() if c != 0}
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables: Iterable[str]) -> "Polynomial":
        return cls(variables, {})

    @classmethod
    def constant(cls, c, variables: Iterable[str]) -> "Polynomial":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): _as_fraction(c)})

    @classmethod
    def variable(cls, name: str, variables: Iterable[str]) -> "Polynomial":
        variables = tuple(variables)
        i = variables.index(name)
        exps = tuple(1 if j == i else 0 for j in range(len(variables)))
        return cls(variables, {exps: Fraction(1)})

    @classmethod
    def monomial(cls, exps: Exponents, c, variables: Iterable[str]) -> "Polynomial":
        return cls(variables, {tuple(exps): _as_fraction(c)})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.variables), Fraction(0))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def order(self) -> int:
        """Order of vanishing at the origin (min total degree of support)."""
        if not self.terms:
            raise ZeroPolynomial("order of the zero polynomial")
        return min(sum(e) for e in self.terms)

    def degree_in(self, var: str) -> int:
        i = self.variables.index(var)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def uses(self, var: str) -> bool:
        return self.degree_in(var) > 0

    def leading(self, order: MonomialOrder) -> tuple[Exponents, Fraction]:
        if not self.terms:
            raise ZeroPolynomial("leading term of zero")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.variables != other.variables:
            raise VariableMismatch(
                f"{self.variables} vs {other.variables}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.variables)
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return Polynomial(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.variables)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            return Polynomial(self.variables,
                              {e: c * v for e, v in self.terms.items()})
        self._check(other)
        terms: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return Polynomial(self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1, self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.variables)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables,
                               tuple(sorted(self.terms.items()))))
        return self._hash

    # -- calculus and evaluation ------------------------------------------

    def diff(self, var: str) -> "Polynomial":
        i = self.variables.index(var)
        terms: dict[Exponents, Fraction] = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            ne = tuple(x - 1 if j == i else x for j, x in enumerate(e))
            terms[ne] = terms.get(ne, Fraction(0)) + c * e[i]
        return Polynomial(self.variables, terms)

    def evaluate(self, values: Mapping[str, Fraction]) -> Fraction:
        """Evaluate at a full assignment of exact rationals."""
        missing = [v for v in self.variables if v not in values]
        if missing:
            raise VariableMismatch(f"missing values for {missing}")
        total = Fraction(0)
        vals = [Fraction(values[v]) for v in self.variables]
        for e, c in self.terms.items():
            prod = c
            for x, k in zip(vals, e):
                if k:
                    prod *= x ** k
            total += prod
        return total

    def substitute(self, values: Mapping[str, Fraction]) -> "Polynomial":
        """Substitute rationals for some variables; drop them from the ring."""
        keep = [v for v in self.variables if v not in values]
        idx = [self.variables.index(v) for v in keep]
        sub = [(self.variables.index(v), Fraction(values[v])) for v in values
               if v in self.variables]
        terms: dict[Exponents, Fraction] = {}
        for e, c in self.terms.items():
            for i, x in sub:
                if e[i]:
                    c = c * x ** e[i]
            ne = tuple(e[i] for i in idx)
            terms[ne] = terms.get(ne, Fraction(0)) + c
        return Polynomial(tuple(keep), terms)

    def rename(self, mapping: Mapping[str, str]) -> "Polynomial":
        newvars = tuple(mapping.get(v, v) for v in self.variables)
        if len(set(newvars)) != len(newvars):
            raise VariableMismatch("rename collision")
        return Polynomial(newvars, self.terms)

    def extend(self, variables: Iterable[str]) -> "Polynomial":
        """Reinterpret over a larger variable tuple (superset, any order)."""
        variables = tuple(variables)
        pos = []
        for v in self.variables:
            if v not in variables:
                raise VariableMismatch(f"{v} not in target variables")
            pos.append(variables.index(v))
        terms: dict[Exponents, Fraction] = {}
        for e, c in self.terms.items():
            ne = [0] * len(variables)
            for p, k in zip(pos, e):
                ne[p] = k
            terms[tuple(ne)] = c
        return Polynomial(variables, terms)

    def restrict(self) -> "Polynomial":
        """Drop variables that do not occur."""
        used = tuple(v for i, v in enumerate(self.variables)
                     if any(e[i] for e in self.terms))
        if used == self.variables:
            return self
        return self.project(used)

    def project(self, variables: Iterable[str]) -> "Polynomial":
        """Reinterpret over a sub-tuple; fails if a dropped variable occurs."""
        variables = tuple(variables)
        idx = [self.variables.index(v) for v in variables]
        dropped = [i for i, v in enumerate(self.variables) if v not in variables]
        terms: dict[Exponents, Fraction] = {}
        for e, c in self.terms.items():
            if any(e[i] for i in dropped):
                raise VariableMismatch("polynomial uses a dropped variable")
            terms[tuple(e[i] for i in idx)] = c
        return Polynomial(variables, terms)

    # -- univariate views --------------------------------------------------

    def coeffs_in(self, var: str) -> list["Polynomial"]:
        """Dense ascending coefficient list w.r.t. var, over the other vars."""
        i = self.variables.index(var)
        rest = tuple(v for v in self.variables if v != var)
        d = self.degree_in(var)
        if d < 0:
            return []
        coeffs = [dict() for _ in range(d + 1)]
        for e, c in self.terms.items():
            ne = tuple(x for j, x in enumerate(e) if j != i)
            coeffs[e[i]][ne] = c
        return [Polynomial(rest, t) for t in coeffs]

    def univariate_coeffs(self) -> list[Fraction]:
        """Dense ascending Fraction coefficients; requires <= 1 active var."""
        active = [i for i in range(len(self.variables))
                  if any(e[i] for e in self.terms)]
        if len(active) > 1:
            raise DegreeError("polynomial is not univariate")
        if not active:
            return [self.constant_term()] if self.terms else []
        i = active[0]
        d = max(e[i] for e in self.terms)
        out = [Fraction(0)] * (d + 1)
        for e, c in self.terms.items():
            out[e[i]] = c
        return out

    # -- normalization -----------------------------------------------------

    def content(self) -> Fraction:
        """Positive rational c with self/c integral and primitive; 0 for 0."""
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive(self) -> "Polynomial":
        if not self.terms:
            return self
        return self * (1 / self.content())

    def monic(self, order: MonomialOrder = GREVLEX) -> "Polynomial":
        if not self.terms:
            return self
        _, lc = self.leading(order)
        return self * (1 / lc)

    def exact_div(self, divisor: "Polynomial") -> "Polynomial":
        """Exact quotient self/divisor; raises if division is not exact."""
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = self
        q: dict[Exponents, Fraction] = {}
        de, dc = divisor.leading(GREVLEX)
        while not rem.is_zero():
            re, rc = rem.leading(GREVLEX)
            qe = tuple(a - b for a, b in zip(re, de))
            if any(x < 0 for x in qe):
                raise ValueError("inexact polynomial division")
            qc = rc / dc
            q[qe] = q.get(qe, Fraction(0)) + qc
            rem = rem - divisor * Polynomial.monomial(qe, qc, self.variables)
        return Polynomial(self.variables, q)

    # -- formatting --------------------------------------------------------

    def sorted_terms(self, order: MonomialOrder = GREVLEX):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]),
                      reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}"
                for v, k in zip(self.variables, e) if k)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"Polynomial({self.variables!r}, {self})"


# -- parsing ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*(\d+|[A-Za-z_][A-Za-z_0-9]*|\^|\*|/|\+|-|\(|\))")


class _Parser:
    def __init__(self, text: str, variables: tuple[str, ...]):
        self.tokens = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                raise ValueError(f"bad character at {text[pos:pos + 10]!r}")
            self.tokens.append(m.group(1))
            pos = m.end()
        self.i = 0
        self.variables = variables

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expr(self) -> Polynomial:
        sign = 1
        while self.peek() in ("+", "-"):
            if self.next() == "-":
                sign = -sign
        p = self.term() * sign
        while self.peek() in ("+", "-"):
            sign = 1
            while self.peek() in ("+", "-"):
                if self.next() == "-":
                    sign = -sign
            p = p + self.term() * sign
        return p

    def term(self) -> Polynomial:
        p = self.factor()
        while self.peek() in ("*", "/"):
            op = self.next()
            q = self.factor()
            if op == "*":
                p = p * q
            else:
                if not q.is_constant() or q.constant_term() == 0:
                    raise ValueError("division only by nonzero rationals")
                p = p * (1 / q.constant_term())
        return p

    def factor(self) -> Polynomial:
        base = self.atom()
        if self.peek() == "^":
            self.next()
            neg = False
            if self.peek() == "-":
                self.next()
                neg = True
            tok = self.next()
            if tok is None or not tok.isdigit():
                raise ValueError("exponent must be a nonnegative integer")
            if neg:
                raise ValueError("negative exponents not allowed")
            return base ** int(tok)
        return base

    def atom(self) -> Polynomial:
        tok = self.next()
        if tok is None:
            raise ValueError("unexpected end of expression")
        if tok == "(":
            p = self.expr()
            if self.next() != ")":
                raise ValueError("unbalanced parentheses")
            return p
        if tok == "-":
            return -self.factor()
        if tok.isdigit():
            return Polynomial.constant(int(tok), self.variables)
        if tok in self.variables:
            return Polynomial.variable(tok, self.variables)
        raise ValueError(f"unknown variable {tok!r}")


def parse_polynomial(text: str, variables: Iterable[str]) -> Polynomial:
    """Parse an ASCII expression like 'z^3 + w^3 - 3*z*w' exactly."""
    variables = tuple(variables)
    parser = _Parser(text, variables)
    p = parser.expr()
    if parser.peek() is not None:
        raise ValueError(f"trailing input at token {parser.peek()!r}")
    return p


def infer_variables(text: str) -> tuple[str, ...]:
    """Variable names appearing in an expression, in order of appearance."""
    seen = []
    for tok in re.findall(r"[A-Za-z_][A-Za-z_0-9]*", text):
        if tok not in seen:
            seen.append(tok)
    return tuple(seen)
