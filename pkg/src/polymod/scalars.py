"""Exact Gaussian-rational scalars.

Every coefficient in the library is a complex number with Fraction real and
imaginary parts, so all core algebra is exact. Division is total on nonzero
scalars (Gaussian rationals form a field).
"""

from __future__ import annotations

from fractions import Fraction

_Q = (int, Fraction)


class CoeffQ:
    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if not isinstance(re, _Q) or not isinstance(im, _Q):
            raise TypeError("CoeffQ parts must be int or Fraction")
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def of(cls, value) -> "CoeffQ":
        if isinstance(value, CoeffQ):
            return value
        if isinstance(value, _Q):
            return cls(value)
        raise TypeError(f"cannot coerce {value!r} to CoeffQ")

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other):
        other = CoeffQ.of(other)
        return CoeffQ(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = CoeffQ.of(other)
        return CoeffQ(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return CoeffQ.of(other) - self

    def __mul__(self, other):
        other = CoeffQ.of(other)
        return CoeffQ(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = CoeffQ.of(other)
        den = other.re * other.re + other.im * other.im
        if den == 0:
            raise ZeroDivisionError("division by zero CoeffQ")
        return CoeffQ(
            (self.re * other.re + self.im * other.im) / den,
            (self.im * other.re - self.re * other.im) / den,
        )

    def __rtruediv__(self, other):
        return CoeffQ.of(other) / self

    def __pow__(self, exp: int):
        if not isinstance(exp, int) or exp < 0:
            raise ValueError("CoeffQ power needs a nonnegative int")
        out = CoeffQ(1)
        base = self
        while exp:
            if exp & 1:
                out = out * base
            base = base * base
            exp >>= 1
        return out

    def __neg__(self):
        return CoeffQ(-self.re, -self.im)

    def __eq__(self, other):
        if isinstance(other, _Q):
            other = CoeffQ(other)
        if not isinstance(other, CoeffQ):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        if self.im == 0:
            return f"CoeffQ({self.re})"
        return f"CoeffQ({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}i)"


ZERO = CoeffQ(0)
ONE = CoeffQ(1)
