"""Pure-Python Gaussian-integer matrix kernels.

Matrices are flat row-major lists of Python ints: one list for the real
parts, one for the imaginary parts.  This module is the reference the
compiled ``_ckernel`` must agree with.
"""

BACKEND = "python"


def gauss_matmul(ar, ai, br, bi, n, k, m):
    """Product of an n x k and a k x m Gaussian-integer matrix."""
    cr = [0] * (n * m)
    ci = [0] * (n * m)
    for r in range(n):
        row = r * k
        out = r * m
        for t in range(k):
            xr = ar[row + t]
            xi = ai[row + t]
            if not xr and not xi:
                continue
            col = t * m
            for c in range(m):
                yr = br[col + c]
                yi = bi[col + c]
                if not yr and not yi:
                    continue
                cr[out + c] += xr * yr - xi * yi
                ci[out + c] += xr * yi + xi * yr
    return cr, ci


def content_gcd(re, im, den):
    """gcd of all entries and the denominator (used to renormalize)."""
    from math import gcd

    g = den
    for x in re:
        if x:
            g = gcd(g, x)
            if g == 1:
                return 1
    for x in im:
        if x:
            g = gcd(g, x)
            if g == 1:
                return 1
    return g
