"""Deliberately corrupted catalog entries.

Each mutant changes a single token of one transcription.  A verifier that
passes any of them on the default grid is not actually evaluating anything.
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from fractions import Fraction

from . import catalog as cat
from .catalog import F, L, K1, K2, K12, bsum, pw
from .exact import neg1_pow as sg


def cor1f_rhs_l_for_f(n, r, s, t):
    # F_t -> L_t
    return Fraction(F(n + 1 + t) - L(t), n + 1)


def thm1f_rhs_sign(n, r, s, t):
    # (-1)^{t+1} -> (-1)^t
    return Fraction(sg(t) * pw(F(s), n + 1) * F(r * (n + 1) - t) - F(t) * pw(F(r + s), n + 1), n + 1)


def thm2l_lhs_shift(n, r, s, t):
    # L_{s(n+k+2)+t} -> L_{s(n+k+2)+t+1}
    Ls = L(s)
    return bsum(n, K1, [sg(k) * pw(Ls, n - k) * L(s * (n + k + 2) + t + 1) for k in range(n + 1)])


def thm6l_rhs_swap(n, r, s, t):
    # first F_{r+s} -> L_{r+s}
    return -Fraction(
        sg(t) * pw(F(s), n + 1) * L(r + s) * L(r * (n + 1) - t) - L(t) * pw(F(r + s), n + 2),
        (n + 1) * (n + 2),
    ) + Fraction(pw(F(s), n + 1) * F(r) * sg(s + t + 1) * L(r * (n + 1) - s - t), n + 2)


def rel2pf_rhs_const(n, r, s, t):
    # + 21 -> + 22
    return Fraction(pw(3, n + 2) * F(2 * (n - 2)) + 22, (n + 1) * (n + 2)) + Fraction(3, n + 1)


def rel1l_mid_sign(n, r, s, t):
    # (-1)^k -> (-1)^{k+1}
    Fr, Frs = F(r), F(r + s)
    total = bsum(n, K12, [sg(k + 1) * pw(Fr, k) * pw(Frs, n - k) * L(s * k + t) for k in range(n + 1)])
    return total / pw(Frs, n)


def cor8f_lhs_weight(n, r, s, t):
    # 1/(k+1) -> 1/(k+2)
    return bsum(n, K2, [sg(k) * pw(3, n - k) * F(2 * (n + k + 2) + t) for k in range(n + 1)])


@dataclass(frozen=True)
class Mutant:
    name: str
    target: str
    description: str
    descriptor: cat.IdentityDescriptor


def _mutate(name, target, description, **changes) -> Mutant:
    base = cat.get_identity(target)
    return Mutant(name, target, description, dataclasses.replace(base, **changes))


def all_mutants() -> list[Mutant]:
    return [
        _mutate("cor1f-ft-to-lt", "COR1-F", "RHS: F_t replaced by L_t", rhs=cor1f_rhs_l_for_f),
        _mutate("thm1f-sign", "THM1-F", "RHS: (-1)^{t+1} replaced by (-1)^t", rhs=thm1f_rhs_sign),
        _mutate("thm2l-shift", "THM2-L", "LHS: Lucas index shifted by +1", lhs=thm2l_lhs_shift),
        _mutate("thm6l-swap", "THM6-L", "RHS: factor F_{r+s} replaced by L_{r+s}", rhs=thm6l_rhs_swap),
        _mutate("rel2pf-const", "REL2P-F", "RHS: constant 21 replaced by 22", rhs=rel2pf_rhs_const),
        _mutate("rel1l-mid-sign", "REL1-L", "MID: (-1)^k replaced by (-1)^{k+1}", mid=rel1l_mid_sign),
        _mutate("cor8f-weight", "COR8-F", "LHS: weight 1/(k+1) replaced by 1/(k+2)", lhs=cor8f_lhs_weight),
    ]


def mutated_catalog(mutant: Mutant) -> list[cat.IdentityDescriptor]:
    """The shipped catalog with one entry swapped for ``mutant``."""
    return [mutant.descriptor if d.id == mutant.target else d for d in cat.enumerate_catalog()]
