"""Rational interval arithmetic for certified sign evaluation.

Endpoints are exact Fractions; all operations return enclosures, so a
sign decided on an interval is a proof.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import Polynomial


@dataclass(frozen=True)
class RatInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x) -> "RatInterval":
        x = Fraction(x)
        return cls(x, x)

    def width(self) -> Fraction:
        return self.hi - self.lo

    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def sign(self) -> int | None:
        """+1/-1 when the sign is certain, None when 0 is inside."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == self.hi == 0:
            return 0
        return None

    def mag(self) -> Fraction:
        """Upper bound on |x| over the interval."""
        return max(abs(self.lo), abs(self.hi))

    def mignitude(self) -> Fraction:
        """Lower bound on |x| over the interval (0 if it straddles 0)."""
        if self.contains_zero():
            return Fraction(0)
        return min(abs(self.lo), abs(self.hi))

    def __add__(self, other):
        other = _coerce(other)
        return RatInterval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self):
        return RatInterval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        prods = (self.lo * other.lo, self.lo * other.hi,
                 self.hi * other.lo, self.hi * other.hi)
        return RatInterval(min(prods), max(prods))

    __rmul__ = __mul__

    def inverse(self) -> "RatInterval":
        if self.contains_zero():
            raise ZeroDivisionError("interval straddles zero")
        return RatInterval(1 / self.hi, 1 / self.lo)

    def intersect(self, other: "RatInterval") -> "RatInterval | None":
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        return RatInterval(lo, hi) if lo <= hi else None

    def subset_of(self, other: "RatInterval") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def overlaps(self, other: "RatInterval") -> bool:
        return not (self.hi < other.lo or other.hi < self.lo)


def _coerce(x) -> RatInterval:
    if isinstance(x, RatInterval):
        return x
    return RatInterval.point(Fraction(x))


def eval_interval(p: Polynomial, box: dict[str, RatInterval]) -> RatInterval:
    """Enclosure of p over a box, term by term."""
    total = RatInterval.point(0)
    for e, c in p.terms.items():
        term = RatInterval.point(c)
        for v, k in zip(p.variables, e):
            if k:
                x = box[v]
                powr = x
                for _ in range(k - 1):
                    powr = powr * x
                term = term * powr
        total = total + term
    return total
