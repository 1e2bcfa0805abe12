"""Exact arithmetic: canonical rationals and the quadratic field Q(sqrt 5).

Rationals are :class:`fractions.Fraction` instances.  ``Fraction`` already
keeps the canonical form this package relies on (reduced, positive
denominator, zero as ``0/1``), so equality of two values is a structural
comparison.  Nothing in here ever produces a float.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

BigRational = Fraction

RationalLike = Union[int, Fraction]


def rat(num: int, den: int = 1) -> Fraction:
    """Build a canonical rational ``num/den``; ``den == 0`` raises ZeroDivisionError."""
    return Fraction(num, den)


def rat_add(x: RationalLike, y: RationalLike) -> Fraction:
    return Fraction(x) + y


def rat_sub(x: RationalLike, y: RationalLike) -> Fraction:
    return Fraction(x) - y


def rat_mul(x: RationalLike, y: RationalLike) -> Fraction:
    return Fraction(x) * y


def rat_div(x: RationalLike, y: RationalLike) -> Fraction:
    if y == 0:
        raise ZeroDivisionError("rational division by zero")
    return Fraction(x) / y


def rat_to_str(x: RationalLike) -> str:
    """Lossless ``"p/q"`` form; the denominator is always written, even when it is 1."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def rat_from_str(text: str) -> Fraction:
    num, sep, den = text.partition("/")
    if not sep:
        raise ValueError(f"not a p/q rational: {text!r}")
    value = Fraction(int(num), int(den))
    if rat_to_str(value) != text:
        raise ValueError(f"rational not in canonical form: {text!r}")
    return value


def is_canonical(x: Fraction) -> bool:
    from math import gcd

    return x.denominator > 0 and gcd(abs(x.numerator), x.denominator) == 1


def neg1_pow(e: int) -> int:
    """(-1)**e for any signed integer e, decided by parity."""
    return -1 if e & 1 else 1


@dataclass(frozen=True, slots=True)
class QSqrt5:
    """The number ``a + b*sqrt(5)`` with rational ``a`` and ``b``."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        # normalise ints to Fraction so equality and hashing stay structural
        if type(self.a) is not Fraction:
            object.__setattr__(self, "a", Fraction(self.a))
        if type(self.b) is not Fraction:
            object.__setattr__(self, "b", Fraction(self.b))

    @classmethod
    def coerce(cls, value: QSqrt5 | RationalLike) -> QSqrt5:
        if isinstance(value, QSqrt5):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(Fraction(value))
        return NotImplemented

    def __add__(self, other):
        other = QSqrt5.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QSqrt5(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> QSqrt5:
        return QSqrt5(-self.a, -self.b)

    def __sub__(self, other):
        other = QSqrt5.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QSqrt5(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = QSqrt5.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = QSqrt5.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.a, self.b, other.a, other.b
        return QSqrt5(a * c + 5 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def conj(self) -> QSqrt5:
        return QSqrt5(self.a, -self.b)

    def norm(self) -> Fraction:
        """x * conj(x), which is always rational: a^2 - 5 b^2."""
        return self.a * self.a - 5 * self.b * self.b

    def is_rational(self) -> bool:
        return self.b == 0

    def inverse(self) -> QSqrt5:
        nrm = self.norm()
        if nrm == 0:
            # sqrt(5) is irrational, so only zero has zero norm
            raise ZeroDivisionError("QSqrt5 element is not invertible")
        return QSqrt5(self.a / nrm, -self.b / nrm)

    def __truediv__(self, other):
        other = QSqrt5.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = QSqrt5.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e: int) -> QSqrt5:
        return q5_pow(self, e)

    def __eq__(self, other) -> bool:
        other = QSqrt5.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __repr__(self) -> str:
        return f"QSqrt5({rat_to_str(self.a)}, {rat_to_str(self.b)})"

    def __str__(self) -> str:
        return f"{self.a} + ({self.b})*sqrt(5)"


ONE = QSqrt5(Fraction(1))
SQRT5 = QSqrt5(Fraction(0), Fraction(1))


def q5(a: RationalLike = 0, b: RationalLike = 0) -> QSqrt5:
    return QSqrt5(Fraction(a), Fraction(b))


def q5_alpha() -> QSqrt5:
    """The golden ratio (1 + sqrt 5)/2."""
    return QSqrt5(Fraction(1, 2), Fraction(1, 2))


def q5_beta() -> QSqrt5:
    """The conjugate root (1 - sqrt 5)/2 = -1/alpha."""
    return QSqrt5(Fraction(1, 2), Fraction(-1, 2))


def q5_pow(base: QSqrt5, e: int) -> QSqrt5:
    """Exact integer power by square-and-multiply.

    Negative exponents invert first (conj(base)/norm(base)), so ``base`` must
    be nonzero in that case.
    """
    if e < 0:
        base = base.inverse()
        e = -e
    result = ONE
    while e:
        if e & 1:
            result = result * base
        e >>= 1
        if e:
            base = base * base
    return result
