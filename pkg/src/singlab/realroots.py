"""Certified real root isolation for univariate rational polynomials.

Sturm sequences drive both counting and bisection, so every returned
interval provably contains exactly one distinct real root; multiplicities
come from Yun square-free factorization.  Intervals carry the square-free
part and can be refined to any requested width.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ZeroPolynomial
from .poly import Polynomial

Coeffs = tuple[Fraction, ...]


# -- dense univariate helpers (ascending coefficients) ---------------------

def _strip(c: list[Fraction]) -> list[Fraction]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _deg(c) -> int:
    return len(c) - 1


def _eval(c, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for a in reversed(c):
        acc = acc * x + a
    return acc


def _diff(c):
    return [a * k for k, a in enumerate(c)][1:]


def _monic(c):
    lc = c[-1]
    return [a / lc for a in c]


def _mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _strip(out)


def _divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while _deg(_strip(a)) >= _deg(b) and a:
        shift = _deg(a) - _deg(b)
        coef = a[-1] / b[-1]
        q[shift] = coef
        for i, x in enumerate(b):
            a[shift + i] -= coef * x
        _strip(a)
    return _strip(q), a


def _gcd(a, b):
    a, b = list(a), list(b)
    while b:
        _, r = _divmod(a, b)
        a, b = b, r
    return _monic(a) if a else a


def _coeff_list(p: Polynomial) -> list[Fraction]:
    return list(p.univariate_coeffs())


def squarefree_decomposition(c: list[Fraction]) -> list[tuple[list[Fraction], int]]:
    """Yun's algorithm: [(square-free factor, multiplicity), ...]."""
    if _deg(c) < 1:
        return []
    c = _monic(c)
    d = _diff(c)
    g = _gcd(c, d)
    if _deg(g) < 1:
        return [(c, 1)]
    out = []
    w, _ = _divmod(c, g)
    z, _ = _divmod(d, g)
    k = 1
    while _deg(w) >= 1:
        diff_w = _diff(w)
        h = [z[i] - (diff_w[i] if i < len(diff_w) else Fraction(0))
             for i in range(max(len(z), len(diff_w)))]
        h = _strip(h)
        y = _gcd(w, h) if h else w
        if _deg(y) >= 1:
            out.append((_monic(y), k))
        if not h:
            break
        w, _ = _divmod(w, y)
        z, _ = _divmod(h, y)
        k += 1
    return out


def _sturm_chain(c):
    chain = [list(c), _diff(c)]
    while _deg(chain[-1]) >= 0 and chain[-1]:
        _, r = _divmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-x for x in r])
    return [s for s in chain if s]


def _variations(chain, x: Fraction) -> int:
    signs = []
    for s in chain:
        v = _eval(s, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _count_halfopen(chain, a: Fraction, b: Fraction) -> int:
    """Distinct real roots of the (square-free) chain polynomial in (a, b]."""
    if a >= b:
        return 0
    return _variations(chain, a) - _variations(chain, b)


# -- public API ------------------------------------------------------------

@dataclass
class IsolatingInterval:
    """An interval certified to contain exactly one distinct real root."""

    lo: Fraction
    hi: Fraction
    multiplicity: int = 1
    _sqfree: Coeffs = field(default=(), repr=False, compare=False)

    def width(self) -> Fraction:
        return self.hi - self.lo

    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def refine(self, width: Fraction) -> "IsolatingInterval":
        """Shrink to the requested width, preserving the certification."""
        c = list(self._sqfree)
        chain = _sturm_chain(c)
        lo, hi = self.lo, self.hi
        while hi - lo > width:
            mid = (lo + hi) / 2
            if _eval(c, mid) == 0:
                half = min(width, hi - lo) / 4
                lo, hi = mid - half, mid + half
                break
            if _count_halfopen(chain, lo, mid) >= 1:
                hi = mid
            else:
                lo = mid
        return IsolatingInterval(lo, hi, self.multiplicity, self._sqfree)


def isolate_real_roots(p: Polynomial, window: tuple[Fraction, Fraction]
                       ) -> list[IsolatingInterval]:
    """Disjoint isolating intervals for the distinct real roots in window."""
    if p.is_zero():
        raise ZeroPolynomial("cannot isolate roots of the zero polynomial")
    lo, hi = Fraction(window[0]), Fraction(window[1])
    if lo > hi:
        raise ValueError("empty window")
    c = _coeff_list(p)
    if _deg(c) < 1:
        return []
    factors = squarefree_decomposition(c)
    sqfree = [Fraction(1)]
    for f, _ in factors:
        sqfree = _mul(sqfree, f)
    chain = _sturm_chain(sqfree)
    out: list[IsolatingInterval] = []
    sq = tuple(sqfree)

    def emit(a: Fraction, b: Fraction):
        out.append(IsolatingInterval(a, b, _multiplicity(factors, a, b), sq))

    def exact_root(r: Fraction, scale: Fraction):
        w = scale / 4 if scale > 0 else Fraction(1, 4)
        while (_count_halfopen(chain, r - w, r + w) != 1
               or _eval(sqfree, r - w) == 0):
            w /= 2
        emit(r - w, r + w)
        return w

    # Window endpoints that are themselves roots get tight private intervals.
    a, b = lo, hi
    if _eval(sqfree, a) == 0:
        w = exact_root(a, (hi - lo) or Fraction(1))
        a = a + w
    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        k = _count_halfopen(chain, x, y)
        if k == 0:
            continue
        if k == 1 and _eval(sqfree, y) != 0:
            emit(x, y)
            continue
        if k == 1:
            # single root in (x, y] and y is that root (eval(y) == 0)
            exact_root(y, y - x)
            continue
        m = (x + y) / 2
        if _eval(sqfree, m) == 0:
            w = exact_root(m, y - x)
            stack.append((x, m - w))
            stack.append((m + w, y))
        else:
            stack.append((x, m))
            stack.append((m, y))
    out.sort(key=lambda iv: iv.lo)
    # touching closed intervals are shrunk until pairwise disjoint
    for i in range(len(out) - 1):
        while out[i].hi >= out[i + 1].lo:
            out[i] = out[i].refine(out[i].width() / 2)
            out[i + 1] = out[i + 1].refine(out[i + 1].width() / 2)
    return out


def _multiplicity(factors, a: Fraction, b: Fraction) -> int:
    for f, mult in factors:
        ch = _sturm_chain(f)
        if _count_halfopen(ch, a, b) >= 1 or _eval(f, a) == 0:
            return mult
    return 1


def count_distinct_roots(p: Polynomial, lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots of p in the closed interval [lo, hi]."""
    if p.is_zero():
        raise ZeroPolynomial("zero polynomial")
    c = _coeff_list(p)
    if _deg(c) < 1:
        return 0
    factors = squarefree_decomposition(c)
    sqfree = [Fraction(1)]
    for f, _ in factors:
        sqfree = _mul(sqfree, f)
    chain = _sturm_chain(sqfree)
    n = _count_halfopen(chain, Fraction(lo), Fraction(hi))
    if _eval(sqfree, Fraction(lo)) == 0:
        n += 1
    return n
