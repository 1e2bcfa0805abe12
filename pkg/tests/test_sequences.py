import pytest
from hypothesis import given
from hypothesis import strategies as st

from fibsum.sequences import (
    binomial,
    check_binet,
    check_lemma1,
    check_lemma2,
    fib,
    fib_oracle,
    lucas,
    lucas_oracle,
)


def _iterate(n, x0, x1):
    # tiny independent recurrence used to freeze example values
    seq = [x0, x1]
    while len(seq) <= n:
        seq.append(seq[-1] + seq[-2])
    return seq[n]


def test_fib_examples():
    assert fib(0) == 0 and fib(1) == 1
    assert fib(10) == _iterate(10, 0, 1) == 55
    assert fib(-4) == -3


def test_lucas_examples():
    assert lucas(0) == 2 and lucas(1) == 1
    assert lucas(10) == _iterate(10, 2, 1) == 123
    assert lucas(-3) == -4


def test_oracle_examples():
    assert fib_oracle(12) == 144
    assert lucas_oracle(0) == 2
    assert fib_oracle(-1) == 1
    assert lucas_oracle(-1) == -1


def test_oracle_range_is_bounded():
    with pytest.raises(ValueError):
        fib_oracle(10**5 + 1)
    with pytest.raises(ValueError):
        lucas_oracle(-(10**5) - 1)


def test_index_range_is_bounded():
    with pytest.raises(ValueError):
        fib(2**31 + 1)


def test_oracle_equivalence_small():
    for n in range(-300, 301):
        assert fib(n) == fib_oracle(n)
        assert lucas(n) == lucas_oracle(n)


@given(st.integers(-1000, 1000))
def test_recurrence(n):
    assert fib(n) == fib(n - 1) + fib(n - 2)
    assert lucas(n) == lucas(n - 1) + lucas(n - 2)


@given(st.integers(0, 2000))
def test_sign_rules(n):
    assert fib(-n) == (-1) ** (n + 1) * fib(n)
    assert lucas(-n) == (-1) ** n * lucas(n)


@given(st.integers(-500, 500))
def test_cross_identities(n):
    assert lucas(n) == fib(n - 1) + fib(n + 1)
    assert fib(2 * n) == fib(n) * lucas(n)


def test_large_index_against_oracle():
    assert fib(20_000) == fib_oracle(20_000)
    assert lucas(-20_001) == lucas_oracle(-20_001)


def test_binomial_examples():
    assert binomial(5, 2) == 10
    assert all(binomial(n, 0) == 1 for n in range(50))
    assert binomial(3, 5) == 0
    assert binomial(3, -2) == 0
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_binomial_pascal_rule():
    for n in range(1, 201):
        for k in range(0, n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


@pytest.mark.parametrize("n", [0, 7, -7, 1, -1, 500, -500])
def test_binet_examples(n):
    assert check_binet(n)
    assert fib(7) == 13 and lucas(7) == 29


@pytest.mark.parametrize("s", [0, 3, -2, 100, -100])
def test_lemma1_examples(s):
    assert check_lemma1(s)


@pytest.mark.parametrize("r, s", [(0, 0), (2, 3), (-1, 4), (50, -50), (-37, 11)])
def test_lemma2_examples(r, s):
    assert check_lemma2(r, s)


def test_checks_reject_out_of_bounds():
    with pytest.raises(ValueError):
        check_binet(501)
    with pytest.raises(ValueError):
        check_lemma1(101)
    with pytest.raises(ValueError):
        check_lemma2(0, 51)
