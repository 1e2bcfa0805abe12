import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fibsum.exact import (
    SQRT5,
    QSqrt5,
    is_canonical,
    neg1_pow,
    q5,
    q5_alpha,
    q5_beta,
    q5_pow,
    rat,
    rat_add,
    rat_div,
    rat_from_str,
    rat_mul,
    rat_sub,
    rat_to_str,
)

rationals = st.fractions(max_denominator=50).filter(lambda x: abs(x) < 1000)
elements = st.builds(QSqrt5, rationals, rationals)


def test_rational_examples():
    assert rat_add(rat(1, 2), rat(1, 3)) == rat(5, 6)
    assert rat_div(rat(1, 6), rat(1, 2)) == rat(1, 3)
    assert rat_sub(rat(1, 2), rat(1, 2)) == 0
    assert rat_mul(rat(2, 3), rat(3, 4)) == rat(1, 2)


@given(rationals)
def test_additive_identity(x):
    assert rat_add(x, 0) == x


def test_canonical_form():
    x = rat(6, -4)
    assert (x.numerator, x.denominator) == (-3, 2)
    z = rat(0, -7)
    assert (z.numerator, z.denominator) == (0, 1)
    assert rat_to_str(z) == "0/1"
    assert rat_to_str(rat(4)) == "4/1"


@given(rationals, rationals)
def test_results_stay_canonical(x, y):
    for v in (rat_add(x, y), rat_sub(x, y), rat_mul(x, y)):
        assert is_canonical(v)
    if y != 0:
        assert is_canonical(rat_div(x, y))


def test_division_by_zero_is_an_error():
    with pytest.raises(ZeroDivisionError):
        rat_div(rat(1), rat(0))
    with pytest.raises(ZeroDivisionError):
        rat(1, 0)


@given(rationals)
def test_string_round_trip(x):
    assert rat_from_str(rat_to_str(x)) == x


@pytest.mark.parametrize("text", ["2/4", "1/-2", "3", "x/2"])
def test_rejects_non_canonical_strings(text):
    with pytest.raises(ValueError):
        rat_from_str(text)


@pytest.mark.parametrize("e, expected", [(0, 1), (1, -1), (2, 1), (-1, -1), (-2, 1), (-7, -1)])
def test_neg1_pow_uses_parity(e, expected):
    assert neg1_pow(e) == expected


def test_alpha_beta():
    a, b = q5_alpha(), q5_beta()
    assert a == q5(Fraction(1, 2), Fraction(1, 2))
    assert b == q5(Fraction(1, 2), Fraction(-1, 2))
    assert a + b == q5(1, 0)
    assert a * b == q5(-1, 0)
    assert a - b == SQRT5
    assert b == -1 / a


def test_q5_pow_examples():
    a = q5_alpha()
    assert q5_pow(a, 1) == q5(Fraction(1, 2), Fraction(1, 2))
    assert q5_pow(a, 0) == q5(1, 0)
    # alpha^2 = alpha * alpha = (1/4 + 5/4) + (1/4 + 1/4) sqrt5
    assert q5_pow(a, 2) == q5(Fraction(3, 2), Fraction(1, 2))
    assert q5_pow(a, -1) * a == q5(1)


def test_multiplication_rule():
    x, y = q5(2, 3), q5(Fraction(1, 2), -1)
    assert x * y == q5(2 * Fraction(1, 2) + 5 * 3 * -1, 2 * -1 + 3 * Fraction(1, 2))


@given(elements)
def test_conjugate_product_is_rational(x):
    assert (x * x.conj()).b == 0
    assert (x * x.conj()).a == x.norm()


def test_zero_is_not_invertible():
    with pytest.raises(ZeroDivisionError):
        q5_pow(q5(0), -1)
    with pytest.raises(ZeroDivisionError):
        q5(0).inverse()


def _random_element(rng):
    def r():
        return Fraction(rng.randint(-30, 30), rng.randint(1, 12))
    return QSqrt5(r(), r())


def test_field_laws_bulk():
    rng = random.Random(20261017)
    for _ in range(10_000):
        x, y, z = (_random_element(rng) for _ in range(3))
        assert (x * y) * z == x * (y * z)
        assert (x + y) + z == x + (y + z)
        assert x * (y + z) == x * y + x * z
        if x != 0:
            assert x * x.inverse() == q5(1)


def test_power_additivity_bulk():
    rng = random.Random(7)
    for _ in range(200):
        x = _random_element(rng)
        if x == 0:
            continue
        m, n = rng.randint(-64, 64), rng.randint(-64, 64)
        assert q5_pow(x, m + n) == q5_pow(x, m) * q5_pow(x, n)


@given(elements.filter(lambda x: x != 0), st.integers(-12, 12), st.integers(-12, 12))
def test_power_additivity(x, m, n):
    assert q5_pow(x, m + n) == q5_pow(x, m) * q5_pow(x, n)


def test_hash_matches_equality():
    assert hash(q5(1, 2)) == hash(QSqrt5(Fraction(1), Fraction(2)))
    assert q5(3) == 3
