"""Registry of Fibonacci/Lucas binomial-sum identities.

Every entry carries two (or three) independently written evaluators: the
binomial sum as displayed, and the closed form as displayed.  Nothing is
simplified during transcription; sign factors are written with the same
exponents that appear in print and reduced by parity only at the end.

In the anchor strings, ``C(n,k)`` is a binomial coefficient, ``F_i``/``L_i``
are Fibonacci/Lucas numbers and ``sum`` runs over ``k = 0..n``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, partial
from math import lcm, prod
from typing import Callable, NamedTuple, Optional

from . import kernels
from .exact import neg1_pow as sg
from .sequences import binomial_row, fib, lucas

CATALOG_VERSION = "1"


class Family(enum.Enum):
    FIB = "F"
    LUC = "L"
    MIXED = "F+L"


class Constraint(enum.Enum):
    S_EVEN = "s even"
    R_NONZERO = "r nonzero"
    RS_NONZERO = "r+s nonzero"


class Side(enum.Enum):
    LHS = "lhs"
    MID = "mid"
    RHS = "rhs"


class ParamTuple(NamedTuple):
    n: int
    r: int = 0
    s: int = 0
    t: int = 0


class InadmissibleTuple(ValueError):
    pass


@dataclass(frozen=True)
class ParamSpace:
    uses_r: bool = False
    uses_s: bool = False
    uses_t: bool = False
    constraints: frozenset = frozenset()
    n_min: int = 0

    def violation(self, p: ParamTuple) -> Optional[str]:
        """Describe why ``p`` is inadmissible, or None when it is admissible."""
        if p.n < self.n_min:
            return f"n >= {self.n_min}"
        for name, used in (("r", self.uses_r), ("s", self.uses_s), ("t", self.uses_t)):
            if not used and getattr(p, name) != 0:
                return f"unused parameter {name} must be 0"
        if Constraint.S_EVEN in self.constraints and p.s % 2:
            return Constraint.S_EVEN.value
        if Constraint.R_NONZERO in self.constraints and p.r == 0:
            return Constraint.R_NONZERO.value
        if Constraint.RS_NONZERO in self.constraints and p.r + p.s == 0:
            return Constraint.RS_NONZERO.value
        return None

    def admissible(self, p: ParamTuple) -> bool:
        return self.violation(p) is None

    def flags(self) -> list[str]:
        order = [Constraint.S_EVEN, Constraint.R_NONZERO, Constraint.RS_NONZERO]
        return [c.value for c in order if c in self.constraints]

    def used(self) -> str:
        return "n" + "".join(
            name for name, u in (("r", self.uses_r), ("s", self.uses_s), ("t", self.uses_t)) if u
        )


Evaluator = Callable[[int, int, int, int], Fraction]


@dataclass(frozen=True)
class IdentityDescriptor:
    id: str
    family: Family
    paper_anchor: str
    params: ParamSpace
    lhs: Evaluator = field(repr=False)
    rhs: Evaluator = field(repr=False)
    mid: Optional[Evaluator] = field(default=None, repr=False)

    @property
    def three_way(self) -> bool:
        return self.mid is not None


def eval_side(desc: IdentityDescriptor, side: Side | str, p: ParamTuple) -> Fraction:
    if isinstance(side, str):
        side = Side(side.lower())
    if not isinstance(p, ParamTuple):
        p = ParamTuple(*p)
    why = desc.params.violation(p)
    if why is not None:
        raise InadmissibleTuple(f"{desc.id}: {tuple(p)} violates {why}")
    if side is Side.MID:
        if desc.mid is None:
            raise ValueError(f"{desc.id} has no middle expression")
        fn = desc.mid
    else:
        fn = desc.lhs if side is Side.LHS else desc.rhs
    return Fraction(fn(*p))


# -- helpers shared by the transcriptions -----------------------------------

F = fib
L = lucas


def pw(base: int, e: int) -> int:
    # every printed power has a nonnegative exponent
    if e < 0:
        raise AssertionError(f"negative exponent {e} in transcription")
    return base**e


@lru_cache(maxsize=1024)
def _weights(n: int, offsets: tuple[int, ...]) -> tuple[list[int], int]:
    dens = [prod(k + o for o in offsets) for k in range(n + 1)]
    big = lcm(*dens) if dens else 1
    row = binomial_row(n)
    return [row[k] * (big // dens[k]) for k in range(n + 1)], big


def bsum(n: int, offsets: tuple[int, ...], terms: list[int]) -> Fraction:
    """sum_k C(n,k) * terms[k] / prod_{o in offsets}(k+o), exactly."""
    coeffs, den = _weights(n, offsets)
    return Fraction(kernels.dot(coeffs, terms), den)


K1 = (1,)
K2 = (2,)
K12 = (1, 2)
K0 = ()


# -- introduction: the motivating pair ---------------------------------------

def intro1_lhs(n, r, s, t):
    return bsum(n, K1, [F(k) + L(k) for k in range(n + 1)])


def intro1_rhs(n, r, s, t):
    return Fraction(F(2 * n + 1) + L(2 * n + 1), n + 1)


def intro2_lhs(n, r, s, t):
    return bsum(n, K12, [F(k) + L(k) for k in range(n + 1)])


def intro2_rhs(n, r, s, t):
    return Fraction(F(2 * n + 2) + L(2 * n + 2) - 2, (n + 1) * (n + 2))


# -- first class: weight 1/(k+1) ---------------------------------------------

def thm1f_lhs(n, r, s, t):
    Fr, Fs = F(r), F(s)
    return bsum(n, K1, [
        sg(s * (k + 1) + t) * pw(Fr, k + 1) * pw(Fs, n - k) * F(r * n - s * (k + 1) - r * k - t)
        for k in range(n + 1)
    ])


def thm1f_rhs(n, r, s, t):
    return Fraction(
        sg(t + 1) * pw(F(s), n + 1) * F(r * (n + 1) - t) - F(t) * pw(F(r + s), n + 1), n + 1
    )


def thm1l_lhs(n, r, s, t):
    Fr, Fs = F(r), F(s)
    return bsum(n, K1, [
        sg(s * (k + 1) + 1 + t) * pw(Fr, k + 1) * pw(Fs, n - k) * L(r * n - s * (k + 1) - r * k - t)
        for k in range(n + 1)
    ])


def thm1l_rhs(n, r, s, t):
    return Fraction(
        sg(t) * pw(F(s), n + 1) * L(r * (n + 1) - t) - L(t) * pw(F(r + s), n + 1), n + 1
    )


def cor1_lhs(G, n, r, s, t):
    return bsum(n, K1, [sg(k) * G(n - 2 * k - 1 + t) for k in range(n + 1)])


def cor1_rhs(G, n, r, s, t):
    return Fraction(G(n + 1 + t) - G(t), n + 1)


def cor2f_lhs(n, r, s, t):
    return bsum(n, K1, [sg(t) * F(n - 3 * k - 2 - t) for k in range(n + 1)])


def cor2f_rhs(n, r, s, t):
    return Fraction(sg(t + 1) * F(n + 1 - t) - F(t) * pw(2, n + 1), n + 1)


def cor2l_lhs(n, r, s, t):
    return bsum(n, K1, [sg(t + 1) * L(n - 3 * k - 2 - t) for k in range(n + 1)])


def cor2l_rhs(n, r, s, t):
    return Fraction(sg(t) * L(n + 1 - t) - L(t) * pw(2, n + 1), n + 1)


def cor3_lhs(G, n, r, s, t):
    return bsum(n, K1, [sg(k) * G(2 * n - 3 * k - 1 + t) for k in range(n + 1)])


def cor3_rhs(G, n, r, s, t):
    return Fraction(G(2 * n + 2 + t) - G(t) * pw(2, n + 1), n + 1)


def cor4f_lhs(n, r, s, t):
    return bsum(n, K1, [sg(t) * F(2 * n - 4 * k - 2 - t) for k in range(n + 1)])


def cor4f_rhs(n, r, s, t):
    return Fraction(sg(t + 1) * F(2 * n + 2 - t) - F(t) * pw(3, n + 1), n + 1)


def cor4l_lhs(n, r, s, t):
    return bsum(n, K1, [sg(t + 1) * L(2 * n - 4 * k - 2 - t) for k in range(n + 1)])


def cor4l_rhs(n, r, s, t):
    return Fraction(sg(t) * L(2 * n + 2 - t) - L(t) * pw(3, n + 1), n + 1)


def cor5_lhs(G, n, r, s, t):
    return bsum(n, K1, [sg(k) * G(2 * n - k + 1 + t) for k in range(n + 1)])


def cor5_rhs(G, n, r, s, t):
    return Fraction(G(2 * n + 2 + t) - G(t), n + 1)


def cor6_lhs(G, n, r, s, t):
    return bsum(n, K1, [
        sg(n + k + 1) * pw(2, n - k) * G(n + 2 * k + 3 + t) for k in range(n + 1)
    ])


def cor6_rhs(G, n, r, s, t):
    return Fraction(pw(-2, n + 1) * G(n + 1 + t) - G(t), n + 1)


def cor7_lhs(G, n, r, s, t):
    return bsum(n, K1, [sg(k) * pw(2, n - k) * G(2 * n + k + 3 + t) for k in range(n + 1)])


def cor7_rhs(G, n, r, s, t):
    return Fraction(pw(2, n + 1) * G(2 * n + 2 + t) - G(t), n + 1)


def cor8_lhs(G, n, r, s, t):
    return bsum(n, K1, [sg(k) * pw(3, n - k) * G(2 * (n + k + 2) + t) for k in range(n + 1)])


def cor8_rhs(G, n, r, s, t):
    return Fraction(pw(3, n + 1) * G(2 * n + 2 + t) - G(t), n + 1)


def thm2_lhs(G, n, r, s, t):
    Ls = L(s)
    return bsum(n, K1, [sg(k) * pw(Ls, n - k) * G(s * (n + k + 2) + t) for k in range(n + 1)])


def thm2_rhs(G, n, r, s, t):
    return Fraction(pw(L(s), n + 1) * G(s * (n + 1) + t) - G(t), n + 1)


def thm3f_lhs(n, r, s, t):
    Frs, Fs = F(r + s), F(s)
    return bsum(n, K1, [
        sg(k) * pw(Frs, k + 1) * pw(Fs, n - k) * F(s * (k + 1) + (r + s) * (n - k) - t)
        for k in range(n + 1)
    ])


def thm3f_rhs(n, r, s, t):
    return Fraction(
        pw(F(s), n + 1) * F((r + s) * (n + 1) - t)
        + sg((s + 1) * (n + 1) + t) * F(t) * pw(F(r), n + 1),
        n + 1,
    )


def thm3l_lhs(n, r, s, t):
    Frs, Fs = F(r + s), F(s)
    return bsum(n, K1, [
        sg(k) * pw(Frs, k + 1) * pw(Fs, n - k) * L(s * (k + 1) + (r + s) * (n - k) - t)
        for k in range(n + 1)
    ])


def thm3l_rhs(n, r, s, t):
    return Fraction(
        pw(F(s), n + 1) * L((r + s) * (n + 1) - t)
        + sg((s + 1) * (n + 1) + t + 1) * L(t) * pw(F(r), n + 1),
        n + 1,
    )


# -- second and third classes: weights 1/(k+2) and 1/((k+1)(k+2)) ------------

def thm4_lhs(G, n, r, s, t):
    Fr, Fs = F(r), F(s)
    return bsum(n, K2, [
        sg(r * (n - k)) * pw(Fr, k + 2) * pw(Fs, n - k) * G(s * (k + 2) - r * (n - k) + t)
        for k in range(n + 1)
    ])


def thm4f_rhs(n, r, s, t):
    return Fraction(
        sg(t + 1) * pw(F(s), n + 2) * F(r * (n + 2) - t) - F(t) * pw(F(r + s), n + 2),
        (n + 1) * (n + 2),
    ) + Fraction(F(r) * F(s + t) * pw(F(r + s), n + 1), n + 1)


def thm4l_rhs(n, r, s, t):
    return Fraction(
        sg(t) * pw(F(s), n + 2) * L(r * (n + 2) - t) - L(t) * pw(F(r + s), n + 2),
        (n + 1) * (n + 2),
    ) + Fraction(F(r) * L(s + t) * pw(F(r + s), n + 1), n + 1)


def thm5_lhs(G, n, r, s, t):
    Ls = L(s)
    return bsum(n, K2, [
        sg(k) * pw(Ls, n - k) * G(2 * s * (k + 2) + s * (n - k) + t) for k in range(n + 1)
    ])


def thm5_rhs(G, n, r, s, t):
    return Fraction(pw(L(s), n + 2) * G(s * (n + 2) + t) - G(t), (n + 1) * (n + 2)) - Fraction(
        G(2 * s + t), n + 1
    )


def thm6_lhs(G, n, r, s, t):
    Fr, Fs = F(r), F(s)
    return bsum(n, K12, [
        sg(r * (n - k)) * pw(Fr, k + 2) * pw(Fs, n - k) * G(s * (k + 2) - r * (n - k) + t)
        for k in range(n + 1)
    ])


def thm6f_rhs(n, r, s, t):
    return -Fraction(
        sg(t + 1) * pw(F(s), n + 1) * F(r + s) * F(r * (n + 1) - t) - F(t) * pw(F(r + s), n + 2),
        (n + 1) * (n + 2),
    ) + Fraction(pw(F(s), n + 1) * F(r) * sg(s + t) * F(r * (n + 1) - s - t), n + 2)


def thm6l_rhs(n, r, s, t):
    return -Fraction(
        sg(t) * pw(F(s), n + 1) * F(r + s) * L(r * (n + 1) - t) - L(t) * pw(F(r + s), n + 2),
        (n + 1) * (n + 2),
    ) + Fraction(pw(F(s), n + 1) * F(r) * sg(s + t + 1) * L(r * (n + 1) - s - t), n + 2)


def thm7_lhs(G, n, r, s, t):
    Ls = L(s)
    return bsum(n, K12, [sg(k) * pw(Ls, n - k) * G(s * (n + k + 4) + t) for k in range(n + 1)])


def thm7_rhs(G, n, r, s, t):
    Ls = L(s)
    return -Fraction(pw(Ls, n + 1) * G(s * (n + 1) + t) - G(t), (n + 1) * (n + 2)) + Fraction(
        pw(Ls, n + 1) * G(s * (n + 3) + t), n + 2
    )


# -- additional sum relations --------------------------------------------------

def sec4_lhs(G, n, r, s, t):
    return bsum(n, K2, [sg(k) * G(2 * n - k) for k in range(n + 1)])


def sec4_rhs(G, n, r, s, t):
    return bsum(n, K12, [G(k) for k in range(n + 1)])


def sec4fl_lhs(n, r, s, t):
    return bsum(n, K2, [sg(k) * (F(2 * n - k) + L(2 * n - k)) for k in range(n + 1)])


def sec4fl_mid(n, r, s, t):
    return bsum(n, K12, [F(k) + L(k) for k in range(n + 1)])


def sec4fl_rhs(n, r, s, t):
    return Fraction(F(2 * n + 2) + L(2 * n + 2) - 2, (n + 1) * (n + 2))


def rel1_lhs(G, n, r, s, t):
    Fr, Fs = F(r), F(s)
    total = bsum(n, K2, [
        sg(r * (n - k)) * pw(Fr, k) * pw(Fs, n - k) * G(s * k - r * (n - k) + t)
        for k in range(n + 1)
    ])
    # printed prefactor F_{r+s}^{-n}
    return total / pw(F(r + s), n)


def rel1_mid(G, n, r, s, t):
    # (F_r/F_{r+s})^k = F_r^k F_{r+s}^(n-k) / F_{r+s}^n, kept exact over a common denominator
    Fr, Frs = F(r), F(r + s)
    total = bsum(n, K12, [
        sg(k) * pw(Fr, k) * pw(Frs, n - k) * G(s * k + t) for k in range(n + 1)
    ])
    return total / pw(Frs, n)


def rel1f_rhs(n, r, s, t):
    Fr, Fs, Frs = F(r), F(s), F(r + s)
    return Fraction(1, (n + 1) * (n + 2)) * (
        Fraction(Fs, Fr) ** 2 * Fraction(pw(Fs, n), pw(Frs, n)) * sg(t + 1) * F(2 * s + r * (n + 2) - t)
        - Fraction(Frs, Fr) ** 2 * sg(t + 1) * F(2 * s - t)
    ) + Fraction(1, n + 1) * Fraction(Frs, Fr) * sg(s + t + 1) * F(s - t)


def rel1l_rhs(n, r, s, t):
    Fr, Fs, Frs = F(r), F(s), F(r + s)
    return Fraction(1, (n + 1) * (n + 2)) * (
        Fraction(Fs, Fr) ** 2 * Fraction(pw(Fs, n), pw(Frs, n)) * sg(t) * L(2 * s + r * (n + 2) - t)
        - Fraction(Frs, Fr) ** 2 * sg(t) * L(2 * s - t)
    ) + Fraction(1, n + 1) * Fraction(Frs, Fr) * sg(s + t) * L(s - t)


def rel1pf_lhs(n, r, s, t):
    return bsum(n, K2, [sg(k + 1) * F(n - 2 * k) for k in range(n + 1)])


def rel1pf_mid(n, r, s, t):
    return bsum(n, K12, [sg(k) * F(k) for k in range(n + 1)])


def rel1pf_rhs(n, r, s, t):
    return Fraction(1 - F(n + 4), (n + 1) * (n + 2)) + Fraction(1, n + 1)


def rel1pl_lhs(n, r, s, t):
    return bsum(n, K2, [sg(k) * L(n - 2 * k) for k in range(n + 1)])


def rel1pl_mid(n, r, s, t):
    return bsum(n, K12, [sg(k) * L(k) for k in range(n + 1)])


def rel1pl_rhs(n, r, s, t):
    return Fraction(L(n + 4) - 3, (n + 1) * (n + 2)) - Fraction(1, n + 1)


def rel2_lhs(G, n, r, s, t):
    Ls = L(s)
    return bsum(n, K2, [sg(k) * pw(Ls, n - k) * G(s * (n + k) + t) for k in range(n + 1)])


def rel2_mid(G, n, r, s, t):
    return bsum(n, K12, [G(2 * s * k + t) for k in range(n + 1)])


def rel2f_rhs(n, r, s, t):
    return Fraction(
        pw(L(s), n + 2) * F(s * (n - 2) + t) + sg(t) * F(4 * s - t), (n + 1) * (n + 2)
    ) + Fraction(sg(t) * F(2 * s - t), n + 1)


def rel2l_rhs(n, r, s, t):
    return Fraction(
        pw(L(s), n + 2) * L(s * (n - 2) + t) - sg(t) * L(4 * s - t), (n + 1) * (n + 2)
    ) - Fraction(sg(t) * L(2 * s - t), n + 1)


def rel2p_lhs(G, n, r, s, t):
    return bsum(n, K2, [sg(k) * pw(3, n - k) * G(2 * (n + k)) for k in range(n + 1)])


def rel2p_mid(G, n, r, s, t):
    return bsum(n, K12, [G(4 * k) for k in range(n + 1)])


def rel2pf_rhs(n, r, s, t):
    return Fraction(pw(3, n + 2) * F(2 * (n - 2)) + 21, (n + 1) * (n + 2)) + Fraction(3, n + 1)


def rel2pl_rhs(n, r, s, t):
    return Fraction(pw(3, n + 2) * L(2 * (n - 2)) - 47, (n + 1) * (n + 2)) - Fraction(7, n + 1)


# -- the registry -------------------------------------------------------------

NONE = ParamSpace()
T = ParamSpace(uses_t=True)
RST = ParamSpace(uses_r=True, uses_s=True, uses_t=True)
ST_EVEN = ParamSpace(uses_s=True, uses_t=True, constraints=frozenset({Constraint.S_EVEN}))
RST_REL = ParamSpace(
    uses_r=True,
    uses_s=True,
    uses_t=True,
    constraints=frozenset({Constraint.R_NONZERO, Constraint.RS_NONZERO}),
)


def _fl(fn, G):
    return partial(fn, G)


def _build() -> tuple[IdentityDescriptor, ...]:
    D = IdentityDescriptor
    out = [
        D("INTRO-1", Family.MIXED,
          "sum C(n,k) (F_k+L_k)/(k+1) = (F_{2n+1}+L_{2n+1})/(n+1)",
          NONE, intro1_lhs, intro1_rhs),
        D("INTRO-2", Family.MIXED,
          "sum C(n,k) (F_k+L_k)/((k+1)(k+2)) = (F_{2n+2}+L_{2n+2}-2)/((n+1)(n+2))",
          NONE, intro2_lhs, intro2_rhs),
        D("THM1-F", Family.FIB,
          "sum C(n,k)/(k+1) (-1)^{s(k+1)+t} F_r^{k+1} F_s^{n-k} F_{rn-s(k+1)-rk-t}"
          " = ((-1)^{t+1} F_s^{n+1} F_{r(n+1)-t} - F_t F_{r+s}^{n+1})/(n+1)",
          RST, thm1f_lhs, thm1f_rhs),
        D("THM1-L", Family.LUC,
          "sum C(n,k)/(k+1) (-1)^{s(k+1)+1+t} F_r^{k+1} F_s^{n-k} L_{rn-s(k+1)-rk-t}"
          " = ((-1)^t F_s^{n+1} L_{r(n+1)-t} - L_t F_{r+s}^{n+1})/(n+1)",
          RST, thm1l_lhs, thm1l_rhs),
    ]
    for G, fam, x in ((F, Family.FIB, "F"), (L, Family.LUC, "L")):
        out.append(D(f"COR1-{x}", fam,
                     f"sum C(n,k)/(k+1) (-1)^k {x}_{{n-2k-1+t}} = ({x}_{{n+1+t}} - {x}_t)/(n+1)",
                     T, _fl(cor1_lhs, G), _fl(cor1_rhs, G)))
    out += [
        D("COR2-F", Family.FIB,
          "sum C(n,k)/(k+1) (-1)^t F_{n-3k-2-t} = ((-1)^{t+1} F_{n+1-t} - F_t 2^{n+1})/(n+1)",
          T, cor2f_lhs, cor2f_rhs),
        D("COR2-L", Family.LUC,
          "sum C(n,k)/(k+1) (-1)^{t+1} L_{n-3k-2-t} = ((-1)^t L_{n+1-t} - L_t 2^{n+1})/(n+1)",
          T, cor2l_lhs, cor2l_rhs),
    ]
    for G, fam, x in ((F, Family.FIB, "F"), (L, Family.LUC, "L")):
        out.append(D(f"COR3-{x}", fam,
                     f"sum C(n,k)/(k+1) (-1)^k {x}_{{2n-3k-1+t}} = ({x}_{{2n+2+t}} - {x}_t 2^{{n+1}})/(n+1)",
                     T, _fl(cor3_lhs, G), _fl(cor3_rhs, G)))
    out += [
        D("COR4-F", Family.FIB,
          "sum C(n,k)/(k+1) (-1)^t F_{2n-4k-2-t} = ((-1)^{t+1} F_{2n+2-t} - F_t 3^{n+1})/(n+1)",
          T, cor4f_lhs, cor4f_rhs),
        D("COR4-L", Family.LUC,
          "sum C(n,k)/(k+1) (-1)^{t+1} L_{2n-4k-2-t} = ((-1)^t L_{2n+2-t} - L_t 3^{n+1})/(n+1)",
          T, cor4l_lhs, cor4l_rhs),
    ]
    templates = [
        ("COR5", cor5_lhs, cor5_rhs,
         "sum C(n,k)/(k+1) (-1)^k {x}_{{2n-k+1+t}} = ({x}_{{2n+2+t}} - {x}_t)/(n+1)"),
        ("COR6", cor6_lhs, cor6_rhs,
         "sum C(n,k)/(k+1) (-1)^{{n+k+1}} 2^{{n-k}} {x}_{{n+2k+3+t}} = ((-2)^{{n+1}} {x}_{{n+1+t}} - {x}_t)/(n+1)"),
        ("COR7", cor7_lhs, cor7_rhs,
         "sum C(n,k)/(k+1) (-1)^k 2^{{n-k}} {x}_{{2n+k+3+t}} = (2^{{n+1}} {x}_{{2n+2+t}} - {x}_t)/(n+1)"),
        ("COR8", cor8_lhs, cor8_rhs,
         "sum C(n,k)/(k+1) (-1)^k 3^{{n-k}} {x}_{{2(n+k+2)+t}} = (3^{{n+1}} {x}_{{2n+2+t}} - {x}_t)/(n+1)"),
    ]
    for key, lhs, rhs, anchor in templates:
        for G, fam, x in ((F, Family.FIB, "F"), (L, Family.LUC, "L")):
            out.append(D(f"{key}-{x}", fam, anchor.format(x=x), T, _fl(lhs, G), _fl(rhs, G)))
    for G, fam, x in ((F, Family.FIB, "F"), (L, Family.LUC, "L")):
        out.append(D(f"THM2-{x}", fam,
                     f"s even: sum C(n,k)/(k+1) (-1)^k L_s^{{n-k}} {x}_{{s(n+k+2)+t}}"
                     f" = (L_s^{{n+1}} {x}_{{s(n+1)+t}} - {x}_t)/(n+1)",
                     ST_EVEN, _fl(thm2_lhs, G), _fl(thm2_rhs, G)))
    out += [
        D("THM3-F", Family.FIB,
          "sum C(n,k)/(k+1) (-1)^k F_{r+s}^{k+1} F_s^{n-k} F_{s(k+1)+(r+s)(n-k)-t}"
          " = (F_s^{n+1} F_{(r+s)(n+1)-t} + (-1)^{(s+1)(n+1)+t} F_t F_r^{n+1})/(n+1)",
          RST, thm3f_lhs, thm3f_rhs),
        D("THM3-L", Family.LUC,
          "sum C(n,k)/(k+1) (-1)^k F_{r+s}^{k+1} F_s^{n-k} L_{s(k+1)+(r+s)(n-k)-t}"
          " = (F_s^{n+1} L_{(r+s)(n+1)-t} + (-1)^{(s+1)(n+1)+t+1} L_t F_r^{n+1})/(n+1)",
          RST, thm3l_lhs, thm3l_rhs),
        D("THM4-F", Family.FIB,
          "sum C(n,k)/(k+2) (-1)^{r(n-k)} F_r^{k+2} F_s^{n-k} F_{s(k+2)-r(n-k)+t}"
          " = ((-1)^{t+1} F_s^{n+2} F_{r(n+2)-t} - F_t F_{r+s}^{n+2})/((n+1)(n+2))"
          " + F_r F_{s+t} F_{r+s}^{n+1}/(n+1)",
          RST, _fl(thm4_lhs, F), thm4f_rhs),
        D("THM4-L", Family.LUC,
          "sum C(n,k)/(k+2) (-1)^{r(n-k)} F_r^{k+2} F_s^{n-k} L_{s(k+2)-r(n-k)+t}"
          " = ((-1)^t F_s^{n+2} L_{r(n+2)-t} - L_t F_{r+s}^{n+2})/((n+1)(n+2))"
          " + F_r L_{s+t} F_{r+s}^{n+1}/(n+1)",
          RST, _fl(thm4_lhs, L), thm4l_rhs),
    ]
    for G, fam, x in ((F, Family.FIB, "F"), (L, Family.LUC, "L")):
        out.append(D(f"THM5-{x}", fam,
                     f"s even: sum C(n,k)/(k+2) (-1)^k L_s^{{n-k}} {x}_{{2s(k+2)+s(n-k)+t}}"
                     f" = (L_s^{{n+2}} {x}_{{s(n+2)+t}} - {x}_t)/((n+1)(n+2)) - {x}_{{2s+t}}/(n+1)",
                     ST_EVEN, _fl(thm5_lhs, G), _fl(thm5_rhs, G)))
    out += [
        D("THM6-F", Family.FIB,
          "sum C(n,k)/((k+1)(k+2)) (-1)^{r(n-k)} F_r^{k+2} F_s^{n-k} F_{s(k+2)-r(n-k)+t}"
          " = -((-1)^{t+1} F_s^{n+1} F_{r+s} F_{r(n+1)-t} - F_t F_{r+s}^{n+2})/((n+1)(n+2))"
          " + F_s^{n+1} F_r (-1)^{s+t} F_{r(n+1)-s-t}/(n+2)",
          RST, _fl(thm6_lhs, F), thm6f_rhs),
        D("THM6-L", Family.LUC,
          "sum C(n,k)/((k+1)(k+2)) (-1)^{r(n-k)} F_r^{k+2} F_s^{n-k} L_{s(k+2)-r(n-k)+t}"
          " = -((-1)^t F_s^{n+1} F_{r+s} L_{r(n+1)-t} - L_t F_{r+s}^{n+2})/((n+1)(n+2))"
          " + F_s^{n+1} F_r (-1)^{s+t+1} L_{r(n+1)-s-t}/(n+2)",
          RST, _fl(thm6_lhs, L), thm6l_rhs),
    ]
    for G, fam, x in ((F, Family.FIB, "F"), (L, Family.LUC, "L")):
        out.append(D(f"THM7-{x}", fam,
                     f"s even: sum C(n,k)/((k+1)(k+2)) (-1)^k L_s^{{n-k}} {x}_{{s(n+k+4)+t}}"
                     f" = -(L_s^{{n+1}} {x}_{{s(n+1)+t}} - {x}_t)/((n+1)(n+2))"
                     f" + L_s^{{n+1}} {x}_{{s(n+3)+t}}/(n+2)",
                     ST_EVEN, _fl(thm7_lhs, G), _fl(thm7_rhs, G)))
    for G, fam, x in ((F, Family.FIB, "F"), (L, Family.LUC, "L")):
        out.append(D(f"SEC4-{x}", fam,
                     f"sum C(n,k) (-1)^k {x}_{{2n-k}}/(k+2) = sum C(n,k) {x}_k/((k+1)(k+2))",
                     NONE, _fl(sec4_lhs, G), _fl(sec4_rhs, G)))
    out.append(D("SEC4-FL", Family.MIXED,
                 "sum C(n,k) (-1)^k (F_{2n-k}+L_{2n-k})/(k+2) = sum C(n,k) (F_k+L_k)/((k+1)(k+2))"
                 " = (F_{2n+2}+L_{2n+2}-2)/((n+1)(n+2))",
                 NONE, sec4fl_lhs, sec4fl_rhs, sec4fl_mid))
    out += [
        D("REL1-F", Family.FIB,
          "r nonzero: F_{r+s}^{-n} sum C(n,k)/(k+2) (-1)^{r(n-k)} F_r^k F_s^{n-k} F_{sk-r(n-k)+t}"
          " = sum C(n,k)/((k+1)(k+2)) (-1)^k (F_r/F_{r+s})^k F_{sk+t}"
          " = ((F_s/F_r)^2 (F_s/F_{r+s})^n (-1)^{t+1} F_{2s+r(n+2)-t}"
          " - (F_{r+s}/F_r)^2 (-1)^{t+1} F_{2s-t})/((n+1)(n+2))"
          " + (F_{r+s}/F_r) (-1)^{s+t+1} F_{s-t}/(n+1)",
          RST_REL, _fl(rel1_lhs, F), rel1f_rhs, _fl(rel1_mid, F)),
        D("REL1-L", Family.LUC,
          "r nonzero: F_{r+s}^{-n} sum C(n,k)/(k+2) (-1)^{r(n-k)} F_r^k F_s^{n-k} L_{sk-r(n-k)+t}"
          " = sum C(n,k)/((k+1)(k+2)) (-1)^k (F_r/F_{r+s})^k L_{sk+t}"
          " = ((F_s/F_r)^2 (F_s/F_{r+s})^n (-1)^t L_{2s+r(n+2)-t}"
          " - (F_{r+s}/F_r)^2 (-1)^t L_{2s-t})/((n+1)(n+2))"
          " + (F_{r+s}/F_r) (-1)^{s+t} L_{s-t}/(n+1)",
          RST_REL, _fl(rel1_lhs, L), rel1l_rhs, _fl(rel1_mid, L)),
        D("REL1P-F", Family.FIB,
          "sum C(n,k)/(k+2) (-1)^{k+1} F_{n-2k} = sum C(n,k) (-1)^k F_k/((k+1)(k+2))"
          " = (1 - F_{n+4})/((n+1)(n+2)) + 1/(n+1)",
          NONE, rel1pf_lhs, rel1pf_rhs, rel1pf_mid),
        D("REL1P-L", Family.LUC,
          "sum C(n,k)/(k+2) (-1)^k L_{n-2k} = sum C(n,k) (-1)^k L_k/((k+1)(k+2))"
          " = (L_{n+4} - 3)/((n+1)(n+2)) - 1/(n+1)",
          NONE, rel1pl_lhs, rel1pl_rhs, rel1pl_mid),
        D("REL2-F", Family.FIB,
          "s even: sum C(n,k)/(k+2) (-1)^k L_s^{n-k} F_{s(n+k)+t} = sum C(n,k) F_{2sk+t}/((k+1)(k+2))"
          " = (L_s^{n+2} F_{s(n-2)+t} + (-1)^t F_{4s-t})/((n+1)(n+2)) + (-1)^t F_{2s-t}/(n+1)",
          ST_EVEN, _fl(rel2_lhs, F), rel2f_rhs, _fl(rel2_mid, F)),
        D("REL2-L", Family.LUC,
          "s even: sum C(n,k)/(k+2) (-1)^k L_s^{n-k} L_{s(n+k)+t} = sum C(n,k) L_{2sk+t}/((k+1)(k+2))"
          " = (L_s^{n+2} L_{s(n-2)+t} - (-1)^t L_{4s-t})/((n+1)(n+2)) - (-1)^t L_{2s-t}/(n+1)",
          ST_EVEN, _fl(rel2_lhs, L), rel2l_rhs, _fl(rel2_mid, L)),
        D("REL2P-F", Family.FIB,
          "sum C(n,k)/(k+2) (-1)^k 3^{n-k} F_{2(n+k)} = sum C(n,k) F_{4k}/((k+1)(k+2))"
          " = (3^{n+2} F_{2(n-2)} + 21)/((n+1)(n+2)) + 3/(n+1)",
          NONE, _fl(rel2p_lhs, F), rel2pf_rhs, _fl(rel2p_mid, F)),
        D("REL2P-L", Family.LUC,
          "sum C(n,k)/(k+2) (-1)^k 3^{n-k} L_{2(n+k)} = sum C(n,k) L_{4k}/((k+1)(k+2))"
          " = (3^{n+2} L_{2(n-2)} - 47)/((n+1)(n+2)) - 7/(n+1)",
          NONE, _fl(rel2p_lhs, L), rel2pl_rhs, _fl(rel2p_mid, L)),
    ]
    ids = [d.id for d in out]
    assert len(ids) == len(set(ids)), "duplicate identity ids"
    return tuple(out)


_CATALOG = _build()
_BY_ID = {d.id: d for d in _CATALOG}


def enumerate_catalog() -> list[IdentityDescriptor]:
    return list(_CATALOG)


def get_identity(identity_id: str) -> IdentityDescriptor:
    try:
        return _BY_ID[identity_id]
    except KeyError:
        raise KeyError(f"unknown identity id {identity_id!r}") from None
