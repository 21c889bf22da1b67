# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled Gaussian-integer matrix kernels.

Same contract as ``_pykernel``.  Products run in 64-bit arithmetic with
overflow detection; any overflow (or an entry that does not fit) falls back
to Python-int arithmetic for the whole call, so results are always exact.
"""

from libc.stdlib cimport malloc, free
from cpython.long cimport PyLong_FromLongLong

BACKEND = "cython"


cdef extern from *:
    bint add_ovf "__builtin_add_overflow"(long long a, long long b, long long* r) nogil
    bint sub_ovf "__builtin_sub_overflow"(long long a, long long b, long long* r) nogil
    bint mul_ovf "__builtin_mul_overflow"(long long a, long long b, long long* r) nogil


cdef bint _fill(list src, long long* dst, Py_ssize_t size):
    cdef Py_ssize_t j
    try:
        for j in range(size):
            dst[j] = src[j]
    except OverflowError:
        return False
    return True


cdef bint _matmul_ll(long long* ar, long long* ai, long long* br, long long* bi,
                     long long* cr, long long* ci,
                     Py_ssize_t n, Py_ssize_t k, Py_ssize_t m) nogil:
    cdef Py_ssize_t r, t, c
    cdef long long xr, xi, yr, yi, p, q, s
    for r in range(n * m):
        cr[r] = 0
        ci[r] = 0
    for r in range(n):
        for t in range(k):
            xr = ar[r * k + t]
            xi = ai[r * k + t]
            if xr == 0 and xi == 0:
                continue
            for c in range(m):
                yr = br[t * m + c]
                yi = bi[t * m + c]
                if yr == 0 and yi == 0:
                    continue
                if mul_ovf(xr, yr, &p) or mul_ovf(xi, yi, &q) or sub_ovf(p, q, &s):
                    return False
                if add_ovf(cr[r * m + c], s, &cr[r * m + c]):
                    return False
                if mul_ovf(xr, yi, &p) or mul_ovf(xi, yr, &q) or add_ovf(p, q, &s):
                    return False
                if add_ovf(ci[r * m + c], s, &ci[r * m + c]):
                    return False
    return True


def _matmul_obj(list ar, list ai, list br, list bi, Py_ssize_t n, Py_ssize_t k, Py_ssize_t m):
    cdef Py_ssize_t r, t, c
    cdef list cr = [0] * (n * m)
    cdef list ci = [0] * (n * m)
    cdef object xr, xi, yr, yi
    for r in range(n):
        for t in range(k):
            xr = ar[r * k + t]
            xi = ai[r * k + t]
            if not xr and not xi:
                continue
            for c in range(m):
                yr = br[t * m + c]
                yi = bi[t * m + c]
                if not yr and not yi:
                    continue
                cr[r * m + c] += xr * yr - xi * yi
                ci[r * m + c] += xr * yi + xi * yr
    return cr, ci


def gauss_matmul(list ar, list ai, list br, list bi, Py_ssize_t n, Py_ssize_t k, Py_ssize_t m):
    """Product of an n x k and a k x m Gaussian-integer matrix."""
    cdef Py_ssize_t sa = n * k, sb = k * m, sc = n * m, j
    cdef long long* buf = <long long*> malloc((2 * sa + 2 * sb + 2 * sc + 1) * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef long long* par = buf
    cdef long long* pai = buf + sa
    cdef long long* pbr = buf + 2 * sa
    cdef long long* pbi = buf + 2 * sa + sb
    cdef long long* pcr = buf + 2 * sa + 2 * sb
    cdef long long* pci = buf + 2 * sa + 2 * sb + sc
    cdef bint ok
    cdef list cr, ci
    try:
        ok = (_fill(ar, par, sa) and _fill(ai, pai, sa)
              and _fill(br, pbr, sb) and _fill(bi, pbi, sb))
        if ok:
            with nogil:
                ok = _matmul_ll(par, pai, pbr, pbi, pcr, pci, n, k, m)
        if ok:
            cr = [PyLong_FromLongLong(pcr[j]) for j in range(sc)]
            ci = [PyLong_FromLongLong(pci[j]) for j in range(sc)]
            return cr, ci
    finally:
        free(buf)
    return _matmul_obj(ar, ai, br, bi, n, k, m)


def content_gcd(list re, list im, object den):
    """gcd of all entries and the denominator (used to renormalize)."""
    from math import gcd
    cdef object g = den
    cdef object x
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
