"""Dense univariate polynomials with exact rational coefficients.

Also holds the four polynomial binomial-sum identities (``DAT1``..``DAT3``
and ``REL4``), each checked as an equality of whole polynomials in x.
"""
from __future__ import annotations

import enum
from fractions import Fraction
from typing import Iterable

from .sequences import binomial


class Poly:
    """Polynomial sum(coeffs[i] * x**i); trailing zeros are always stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def const(cls, c) -> Poly:
        return cls((c,))

    @classmethod
    def x(cls) -> Poly:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __add__(self, other: Poly) -> Poly:
        return poly_add(self, other)

    def __sub__(self, other: Poly) -> Poly:
        return poly_add(self, poly_scale(other, -1))

    def __mul__(self, other) -> Poly:
        if isinstance(other, Poly):
            return poly_mul(self, other)
        return poly_scale(self, other)

    __rmul__ = __mul__

    def __neg__(self) -> Poly:
        return poly_scale(self, -1)

    def __pow__(self, e: int) -> Poly:
        return poly_pow(self, e)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, x0):
        """Evaluate at a scalar by Horner's rule."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"


def poly_add(p: Poly, q: Poly) -> Poly:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return Poly(out)


def poly_scale(p: Poly, c) -> Poly:
    c = Fraction(c)
    return Poly(x * c for x in p.coeffs)


def poly_mul(p: Poly, q: Poly) -> Poly:
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return Poly()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return Poly(out)


def poly_pow(p: Poly, e: int) -> Poly:
    if e < 0:
        raise ValueError("poly_pow needs e >= 0")
    result = Poly.const(1)
    base = p
    while e:
        if e & 1:
            result = poly_mul(result, base)
        e >>= 1
        if e:
            base = poly_mul(base, base)
    return result


def monomial(deg: int, c=1) -> Poly:
    return Poly([0] * deg + [c])


class Dattoli(enum.Enum):
    DAT1 = "dat1"
    DAT2 = "dat2"
    DAT3 = "dat3"
    REL4 = "rel4"


MAX_N = 256


def _powers(p: Poly, top: int) -> list[Poly]:
    out = [Poly.const(1)]
    for _ in range(top):
        out.append(poly_mul(out[-1], p))
    return out


def dattoli_sides(which: Dattoli, n: int) -> tuple[Poly, Poly]:
    """Both sides of the chosen identity, assembled term by term."""
    if not 0 <= n <= MAX_N:
        raise ValueError(f"n must lie in [0, {MAX_N}]")
    x = Poly.x()
    one_x = _powers(Poly((1, 1)), n + 2)
    lhs = Poly()
    for k in range(n + 1):
        c = Fraction(binomial(n, k) * (-1) ** k)
        if which is Dattoli.DAT1:
            term = monomial(k + 1, c / (k + 1)) * one_x[n - k]
        elif which is Dattoli.DAT2:
            term = monomial(k + 2, c / (k + 2)) * one_x[n - k]
        elif which is Dattoli.DAT3:
            term = monomial(k + 2, c / ((k + 1) * (k + 2))) * one_x[n - k]
        else:
            term = monomial(k, c / (k + 2)) * one_x[n - k]
        lhs = lhs + term

    if which is Dattoli.DAT1:
        rhs = poly_scale(one_x[n + 1] - Poly.const(1), Fraction(1, n + 1))
    elif which is Dattoli.DAT2:
        rhs = poly_scale(
            one_x[n + 2] - poly_scale(x, n + 2) - Poly.const(1),
            Fraction(1, (n + 1) * (n + 2)),
        )
    elif which is Dattoli.DAT3:
        rhs = poly_scale(
            poly_scale(x * one_x[n + 1], n + 1) - one_x[n + 1] + Poly.const(1),
            Fraction(1, (n + 1) * (n + 2)),
        )
    else:
        rhs = Poly()
        for k in range(n + 1):
            rhs = rhs + monomial(k, Fraction(binomial(n, k), (k + 1) * (k + 2)))
    return lhs, rhs


def check_dattoli(which: Dattoli | str, n: int) -> bool:
    if isinstance(which, str):
        which = Dattoli(which.lower())
    lhs, rhs = dattoli_sides(which, n)
    return lhs == rhs


def eval_dattoli_at(which: Dattoli, n: int, x0: Fraction) -> tuple[Fraction, Fraction]:
    """Both sides evaluated directly at a scalar x0, without building polynomials."""
    x0 = Fraction(x0)
    y = 1 + x0
    lhs = Fraction(0)
    for k in range(n + 1):
        c = Fraction(binomial(n, k) * (-1) ** k)
        if which is Dattoli.DAT1:
            lhs += c / (k + 1) * x0 ** (k + 1) * y ** (n - k)
        elif which is Dattoli.DAT2:
            lhs += c / (k + 2) * x0 ** (k + 2) * y ** (n - k)
        elif which is Dattoli.DAT3:
            lhs += c / ((k + 1) * (k + 2)) * x0 ** (k + 2) * y ** (n - k)
        else:
            lhs += c / (k + 2) * x0**k * y ** (n - k)
    if which is Dattoli.DAT1:
        rhs = (y ** (n + 1) - 1) / (n + 1)
    elif which is Dattoli.DAT2:
        rhs = (y ** (n + 2) - (n + 2) * x0 - 1) / ((n + 1) * (n + 2))
    elif which is Dattoli.DAT3:
        rhs = ((n + 1) * x0 * y ** (n + 1) - y ** (n + 1) + 1) / ((n + 1) * (n + 2))
    else:
        rhs = sum(
            (Fraction(binomial(n, k), (k + 1) * (k + 2)) * x0**k for k in range(n + 1)),
            Fraction(0),
        )
    return lhs, rhs
