import pytest

from fibsum import _pykernels, kernels
from fibsum.sequences import fib_oracle


def test_backend_selected_at_import():
    assert kernels.BACKEND in kernels.BACKENDS
    assert "python" in kernels.BACKENDS


@pytest.mark.parametrize("n", [0, 1, 2, 10, 91, 92, 93, 94, 200, 1000, 4097])
def test_fib_pair_matches_oracle(backend, n):
    assert backend.fib_pair(n) == (fib_oracle(n), fib_oracle(n + 1))


def test_fib_pair_rejects_negative(backend):
    with pytest.raises(ValueError):
        backend.fib_pair(-1)


def test_backends_agree_on_a_range():
    if "cython" not in kernels.BACKENDS:
        pytest.skip("compiled kernels not built")
    c = kernels.get_backend("cython")
    for n in range(0, 400):
        assert c.fib_pair(n) == _pykernels.fib_pair(n)
    for n in range(0, 80):
        for k in range(-1, n + 2):
            assert c.binomial(n, k) == _pykernels.binomial(n, k)


def _pascal(rows):
    tri = [[1]]
    for _ in range(rows):
        prev = tri[-1]
        tri.append([1] + [prev[i] + prev[i + 1] for i in range(len(prev) - 1)] + [1])
    return tri


def test_binomial_against_pascal(backend):
    tri = _pascal(120)
    for n, row in enumerate(tri):
        for k, v in enumerate(row):
            assert backend.binomial(n, k) == v
    assert backend.binomial(5, 2) == 10
    assert backend.binomial(3, 5) == 0
    assert backend.binomial(3, -1) == 0


def test_dot(backend):
    assert backend.dot([1, 2, 3], [4, 5, 6]) == 32
    assert backend.dot([], []) == 0
    assert backend.dot([10**30], [-(10**30)]) == -(10**60)
    with pytest.raises(ValueError):
        backend.dot([1], [1, 2])


def test_use_backend_round_trip():
    before = kernels.BACKEND
    prev = kernels.use_backend("python")
    try:
        assert kernels.fib_pair is _pykernels.fib_pair
    finally:
        kernels.use_backend(prev)
    assert kernels.BACKEND == before
    with pytest.raises(LookupError):
        kernels.use_backend("fortran")
