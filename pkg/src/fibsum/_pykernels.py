"""Pure-Python versions of the hot kernels.

Must stay behaviourally identical to ``_ckernels.pyx``; the test suite runs
both against each other.
"""


def fib_pair(n):
    """Return (F_n, F_{n+1}) for n >= 0 by fast doubling."""
    if n < 0:
        raise ValueError("fib_pair needs n >= 0")
    a, b = 0, 1
    for bit in bin(n)[2:]:
        c = a * ((b << 1) - a)
        d = a * a + b * b
        if bit == "1":
            a, b = d, c + d
        else:
            a, b = c, d
    return a, b


def binomial(n, k):
    if n < 0:
        raise ValueError("binomial needs n >= 0")
    if k < 0 or k > n:
        return 0
    if k > n - k:
        k = n - k
    r = 1
    for i in range(1, k + 1):
        r = r * (n - k + i) // i
    return r


def dot(coeffs, terms):
    """Exact sum of coeffs[i] * terms[i]; the two sequences must have equal length."""
    if len(coeffs) != len(terms):
        raise ValueError("length mismatch")
    total = 0
    for c, x in zip(coeffs, terms):
        total += c * x
    return total
