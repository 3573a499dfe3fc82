"""Certified interval arithmetic with exact rational endpoints.

A RatInterval [lo, hi] always contains the true value; operations produce
intervals containing every possible result, so enclosure is preserved with
no rounding anywhere.  ComplexBox is a rectangle (pair of intervals).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class RatInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty interval")

    @staticmethod
    def point(x) -> "RatInterval":
        x = Fraction(x)
        return RatInterval(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def mag(self) -> Fraction:
        """Upper bound for |x| over the interval."""
        return max(abs(self.lo), abs(self.hi))

    @property
    def mig(self) -> Fraction:
        """Lower bound for |x| over the interval (0 if it contains 0)."""
        if self.contains(0):
            return Fraction(0)
        return min(abs(self.lo), abs(self.hi))

    def contains(self, x) -> bool:
        x = Fraction(x)
        return self.lo <= x <= self.hi

    def strictly_contains(self, x) -> bool:
        x = Fraction(x)
        return self.lo < x < self.hi

    def overlaps(self, other: "RatInterval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def __add__(self, other):
        if isinstance(other, RatInterval):
            return RatInterval(self.lo + other.lo, self.hi + other.hi)
        q = Fraction(other)
        return RatInterval(self.lo + q, self.hi + q)

    __radd__ = __add__

    def __neg__(self):
        return RatInterval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-other if isinstance(other, RatInterval)
                       else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, RatInterval):
            prods = (self.lo * other.lo, self.lo * other.hi,
                     self.hi * other.lo, self.hi * other.hi)
            return RatInterval(min(prods), max(prods))
        q = Fraction(other)
        a, b = self.lo * q, self.hi * q
        return RatInterval(min(a, b), max(a, b))

    __rmul__ = __mul__

    def recip(self) -> "RatInterval":
        if self.contains(0):
            raise ZeroDivisionError("interval contains zero")
        return RatInterval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other):
        if isinstance(other, RatInterval):
            return self * other.recip()
        return self * (1 / Fraction(other))

    def sq(self) -> "RatInterval":
        lo, hi = abs(self.lo), abs(self.hi)
        lo, hi = min(lo, hi), max(lo, hi)
        if self.contains(0):
            lo = Fraction(0)
        return RatInterval(lo * lo, hi * hi)

    def pow(self, n: int) -> "RatInterval":
        if n == 0:
            return RatInterval.point(1)
        if n < 0:
            return self.pow(-n).recip()
        out = RatInterval.point(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base.sq()
            n >>= 1
        return out

    def sign(self):
        """+1, -1, or None when the interval straddles zero."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == self.hi == 0:
            return 0
        return None

    def __repr__(self):
        return f"[{self.lo}, {self.hi}]"

    def approx_str(self, digits: int = 12) -> str:
        from decimal import Decimal, getcontext
        getcontext().prec = digits + 4
        d = Decimal(self.mid.numerator) / Decimal(self.mid.denominator)
        return str(+d.quantize(Decimal(1).scaleb(-digits)))


def poly_interval(coeffs, x: RatInterval) -> RatInterval:
    """Enclosure of p(x) over the box, by interval Horner evaluation."""
    acc = RatInterval.point(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class ComplexBox:
    re: RatInterval
    im: RatInterval

    @staticmethod
    def point(re, im=0) -> "ComplexBox":
        return ComplexBox(RatInterval.point(re), RatInterval.point(im))

    @property
    def width(self) -> Fraction:
        return max(self.re.width, self.im.width)

    def conj(self) -> "ComplexBox":
        return ComplexBox(self.re, -self.im)

    def __add__(self, other):
        if isinstance(other, ComplexBox):
            return ComplexBox(self.re + other.re, self.im + other.im)
        return ComplexBox(self.re + other, self.im)

    def __neg__(self):
        return ComplexBox(-self.re, -self.im)

    def __sub__(self, other):
        if isinstance(other, ComplexBox):
            return ComplexBox(self.re - other.re, self.im - other.im)
        return ComplexBox(self.re - other, self.im)

    def __mul__(self, other):
        if isinstance(other, ComplexBox):
            return ComplexBox(self.re * other.re - self.im * other.im,
                              self.re * other.im + self.im * other.re)
        return ComplexBox(self.re * other, self.im * other)

    __rmul__ = __mul__

    def abs_sq(self) -> RatInterval:
        return self.re.sq() + self.im.sq()

    def recip(self) -> "ComplexBox":
        d = self.abs_sq().recip()
        return ComplexBox(self.re * d, -(self.im * d))

    def __truediv__(self, other):
        if isinstance(other, ComplexBox):
            return self * other.recip()
        return ComplexBox(self.re / other, self.im / other)

    def contains(self, re, im=0) -> bool:
        return self.re.contains(re) and self.im.contains(im)

    def pow(self, n: int) -> "ComplexBox":
        out = ComplexBox.point(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def approx_str(self, digits: int = 12) -> str:
        return f"{self.re.approx_str(digits)} + {self.im.approx_str(digits)} i"

    def __repr__(self):
        return f"({self.re} + {self.im} i)"


def poly_complex_box(coeffs, z: ComplexBox) -> ComplexBox:
    acc = ComplexBox.point(0)
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc
