import random
from fractions import Fraction

import pytest

from fibsum.poly import (
    Dattoli,
    Poly,
    check_dattoli,
    dattoli_sides,
    eval_dattoli_at,
    poly_add,
    poly_mul,
    poly_pow,
    poly_scale,
)

ONE_X = Poly((1, 1))
X = Poly.x()


def test_canonical_form():
    assert Poly((1, 0, 0)).coeffs == (Fraction(1),)
    assert Poly((0, 0)).coeffs == ()
    assert Poly().degree == -1
    assert Poly((0, 0)) == Poly()


def test_basic_ops():
    assert poly_mul(ONE_X, ONE_X) == Poly((1, 2, 1))
    p = Poly((3, Fraction(1, 2), -7))
    assert poly_add(p, Poly()) == p
    assert poly_scale(ONE_X, Fraction(1, 2)) == Poly((Fraction(1, 2), Fraction(1, 2)))
    assert poly_mul(p, Poly()) == Poly()
    assert (p - p) == Poly()


def test_pow():
    assert poly_pow(ONE_X, 2) == Poly((1, 2, 1))
    assert poly_pow(X, 3) == Poly((0, 0, 0, 1))
    assert poly_pow(ONE_X, 0) == Poly.const(1)
    assert poly_pow(ONE_X, 10).coeffs == tuple(Fraction(c) for c in (1, 10, 45, 120, 210, 252, 210, 120, 45, 10, 1))
    with pytest.raises(ValueError):
        poly_pow(ONE_X, -1)


def test_degrees_add():
    a, b = Poly((1, 2, 3)), Poly((4, 0, 0, 5))
    assert (a * b).degree == a.degree + b.degree


def _random_poly(rng):
    deg = rng.randint(0, 16)
    return Poly(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(deg + 1))


def test_mul_commutative_associative():
    rng = random.Random(11)
    for _ in range(1000):
        a, b, c = (_random_poly(rng) for _ in range(3))
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)


def test_dat1_n0_is_x():
    lhs, rhs = dattoli_sides(Dattoli.DAT1, 0)
    assert lhs == rhs == X


def test_dat3_n0_is_half_x_squared():
    lhs, rhs = dattoli_sides(Dattoli.DAT3, 0)
    assert lhs == rhs == Poly((0, 0, Fraction(1, 2)))


def test_rel4_n0_is_half():
    lhs, rhs = dattoli_sides(Dattoli.REL4, 0)
    assert lhs == rhs == Poly.const(Fraction(1, 2))


@pytest.mark.parametrize("which", list(Dattoli))
def test_dattoli_small_n(which):
    for n in range(0, 17):
        assert check_dattoli(which, n)


def test_check_dattoli_accepts_names():
    assert check_dattoli("dat2", 5)
    assert check_dattoli("REL4", 3)


def test_dattoli_bounds():
    with pytest.raises(ValueError):
        check_dattoli(Dattoli.DAT1, 257)
    with pytest.raises(ValueError):
        check_dattoli(Dattoli.DAT1, -1)


def test_perturbed_side_is_detected():
    lhs, rhs = dattoli_sides(Dattoli.DAT2, 4)
    assert lhs != rhs + Poly((0, 0, 0, Fraction(1, 1000)))


@pytest.mark.parametrize("which", list(Dattoli))
def test_scalar_substitution_agrees(which):
    rng = random.Random(list(Dattoli).index(which))
    for _ in range(20):
        n = rng.randint(0, 32)
        x0 = Fraction(rng.randint(-20, 20), rng.randint(1, 9))
        lhs_val, rhs_val = eval_dattoli_at(which, n, x0)
        lhs, rhs = dattoli_sides(which, n)
        assert lhs(x0) == lhs_val and rhs(x0) == rhs_val
        assert (lhs_val == rhs_val) == check_dattoli(which, n)
