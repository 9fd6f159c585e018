"""Exact arithmetic in Q(w) for w a primitive cube root of unity (w^2 = -1 - w)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class EisensteinRational:
    """re + wm*w with exact rational coordinates."""

    re: Fraction
    wm: Fraction

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "wm", Fraction(self.wm))

    @staticmethod
    def of(re: Rational = 0, wm: Rational = 0) -> "EisensteinRational":
        return EisensteinRational(Fraction(re), Fraction(wm))

    def __bool__(self) -> bool:
        return bool(self.re or self.wm)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return EisensteinRational(self.re + other.re, self.wm + other.wm)

    __radd__ = __add__

    def __neg__(self):
        return EisensteinRational(-self.re, -self.wm)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return EisensteinRational(self.re - other.re, self.wm - other.wm)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # (a + b w)(c + d w) with w^2 = -1 - w
        a, b, c, d = self.re, self.wm, other.re, other.wm
        return EisensteinRational(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def conjugate(self) -> "EisensteinRational":
        """Image under w -> w^2 (complex conjugation)."""
        return EisensteinRational(self.re - self.wm, -self.wm)

    def norm(self) -> Fraction:
        """Rational norm a^2 - a*b + b^2; zero only at zero."""
        return self.re * self.re - self.re * self.wm + self.wm * self.wm

    def inverse(self) -> "EisensteinRational":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(w)")
        conj = self.conjugate()
        return EisensteinRational(conj.re / n, conj.wm / n)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        result = ONE
        for _ in range(abs(k)):
            result = result * base
        return result

    def __str__(self) -> str:
        if not self.wm:
            return str(self.re)
        w_part = "w" if self.wm == 1 else ("-w" if self.wm == -1 else f"{self.wm}*w")
        if not self.re:
            return w_part
        sign = "+" if self.wm > 0 else "-"
        mag = abs(self.wm)
        w_mag = "w" if mag == 1 else f"{mag}*w"
        return f"{self.re} {sign} {w_mag}"


def _coerce(x) -> "EisensteinRational":
    if isinstance(x, EisensteinRational):
        return x
    if isinstance(x, (int, Fraction)):
        return EisensteinRational(Fraction(x), Fraction(0))
    return NotImplemented


ZERO = EisensteinRational.of(0)
ONE = EisensteinRational.of(1)
OMEGA = EisensteinRational.of(0, 1)
