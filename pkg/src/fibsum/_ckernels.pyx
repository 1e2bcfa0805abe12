# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot kernels. Mirrors _pykernels.py exactly."""

from libc.stdint cimport uint64_t

cdef enum:
    # F_93 is the largest Fibonacci number below 2**64
    SMALL_FIB = 92
    # C(60, k) * 60 stays below 2**64 for every k
    SMALL_BINOM = 60


def fib_pair(n):
    """Return (F_n, F_{n+1}) for n >= 0 by fast doubling."""
    cdef uint64_t x, y, z
    cdef int i
    if n < 0:
        raise ValueError("fib_pair needs n >= 0")
    if n <= SMALL_FIB:
        x = 0
        y = 1
        for i in range(<int>n):
            z = x + y
            x = y
            y = z
        return x, y
    cdef object a = 0, b = 1, c, d
    for bit in bin(n)[2:]:
        c = a * ((b << 1) - a)
        d = a * a + b * b
        if bit == "1":
            a, b = d, c + d
        else:
            a, b = c, d
    return a, b


def binomial(n, k):
    cdef uint64_t acc
    cdef long long nn, kk, i
    if n < 0:
        raise ValueError("binomial needs n >= 0")
    if k < 0 or k > n:
        return 0
    if k > n - k:
        k = n - k
    if n <= SMALL_BINOM:
        nn = n
        kk = k
        acc = 1
        for i in range(1, kk + 1):
            acc = acc * <uint64_t>(nn - kk + i) // <uint64_t>i
        return acc
    cdef object r = 1
    for j in range(1, k + 1):
        r = r * (n - k + j) // j
    return r


def dot(list coeffs, list terms):
    """Exact sum of coeffs[i] * terms[i]; the two lists must have equal length."""
    cdef Py_ssize_t i, m = len(coeffs)
    cdef object total = 0
    if len(terms) != m:
        raise ValueError("length mismatch")
    for i in range(m):
        total += coeffs[i] * terms[i]
    return total
