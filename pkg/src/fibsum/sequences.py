"""Fibonacci and Lucas numbers at any integer index, plus slow oracles.

``fib``/``lucas`` run fast doubling on |n| and then apply the sign rules
F_{-n} = (-1)^(n-1) F_n and L_{-n} = (-1)^n L_n.  ``fib_oracle`` and
``lucas_oracle`` iterate the recurrence step by step and share no code with
the kernels, so agreement between the two routes means something.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import kernels
from .exact import SQRT5, QSqrt5, neg1_pow, q5_alpha, q5_beta, q5_pow

MAX_INDEX = 2**31
ORACLE_MAX = 10**5


def _check_index(n: int) -> None:
    if not -MAX_INDEX <= n <= MAX_INDEX:
        raise ValueError(f"sequence index {n} outside [-2^31, 2^31]")


@lru_cache(maxsize=1 << 15)
def fib_lucas(n: int) -> tuple[int, int]:
    """(F_n, L_n) for any integer n."""
    _check_index(n)
    m = -n if n < 0 else n
    f, f1 = kernels.fib_pair(m)
    lu = 2 * f1 - f
    if n < 0:
        return neg1_pow(m - 1) * f, neg1_pow(m) * lu
    return f, lu


def fib(n: int) -> int:
    return fib_lucas(n)[0]


def lucas(n: int) -> int:
    return fib_lucas(n)[1]


def _oracle_walk(n: int, x0: int, x1: int) -> int:
    if not -ORACLE_MAX <= n <= ORACLE_MAX:
        raise ValueError(f"oracle index {n} outside [-{ORACLE_MAX}, {ORACLE_MAX}]")
    if n >= 0:
        a, b = x0, x1
        for _ in range(n):
            a, b = b, a + b
        return a
    # walk backwards: x_{k-1} = x_{k+1} - x_k
    lo, hi = x0, x1
    for _ in range(-n):
        lo, hi = hi - lo, lo
    return lo


def fib_oracle(n: int) -> int:
    return _oracle_walk(n, 0, 1)


def lucas_oracle(n: int) -> int:
    return _oracle_walk(n, 2, 1)


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("binomial needs n >= 0")
    return kernels.binomial(n, k)


@lru_cache(maxsize=512)
def binomial_row(n: int) -> tuple[int, ...]:
    return tuple(kernels.binomial(n, k) for k in range(n + 1))


def check_binet(n: int) -> bool:
    if abs(n) > 500:
        raise ValueError("check_binet is bounded to |n| <= 500")
    an = q5_pow(q5_alpha(), n)
    bn = q5_pow(q5_beta(), n)
    f_side = (an - bn) / (q5_alpha() - q5_beta())
    l_side = an + bn
    return f_side == QSqrt5(Fraction(fib(n))) and l_side == QSqrt5(Fraction(lucas(n)))


def check_lemma1(s: int) -> bool:
    if abs(s) > 100:
        raise ValueError("check_lemma1 is bounded to |s| <= 100")
    sign = neg1_pow(s)
    ls = lucas(s)
    ok = True
    for root in (q5_alpha(), q5_beta()):
        ok &= sign + q5_pow(root, 2 * s) == q5_pow(root, s) * ls
    return ok


def check_lemma2(r: int, s: int) -> bool:
    """All four shifted-index relations between F, L and powers of alpha, beta."""
    if abs(r) > 50 or abs(s) > 50:
        raise ValueError("check_lemma2 is bounded to |r|, |s| <= 50")
    al, be = q5_alpha(), q5_beta()
    a_r, b_r = q5_pow(al, r), q5_pow(be, r)
    a_s, b_s = q5_pow(al, s), q5_pow(be, s)
    fs = fib(s)
    return (
        lucas(r + s) - lucas(r) * a_s == -b_r * fs * SQRT5
        and lucas(r + s) - lucas(r) * b_s == a_r * fs * SQRT5
        and fib(r + s) - fib(r) * a_s == b_r * fs
        and fib(r + s) - fib(r) * b_s == a_r * fs
    )
