# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Compiled kernels for truncated-series and nested-root arithmetic.

Twin of ``_kernels_py``; the two modules must stay behaviourally
identical, including the order of floating-point operations.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc
from libc.math cimport NAN, pow


cdef double* _alloc(Py_ssize_t n) except NULL:
    cdef double* buf = <double*> PyMem_Malloc(n * sizeof(double))
    if buf == NULL:
        raise MemoryError()
    return buf


cdef void _fill(double* buf, object seq, Py_ssize_t n):
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = seq[i]


cdef list _to_list(double* buf, Py_ssize_t n):
    cdef Py_ssize_t i
    return [buf[i] for i in range(n)]


cdef void _cauchy(double* a, double* b, double* out, Py_ssize_t n):
    cdef Py_ssize_t i, j
    cdef double ai
    for i in range(n):
        out[i] = 0.0
    for i in range(n):
        ai = a[i]
        for j in range(n - i):
            out[i + j] += ai * b[j]


cdef void _fractional_power(double* u, double* h, double s, Py_ssize_t n):
    cdef Py_ssize_t m, j
    cdef double acc
    h[0] = 1.0
    for m in range(1, n):
        acc = 0.0
        for j in range(1, m + 1):
            acc += ((s + 1.0) * j - m) * u[j] * h[m - j]
        h[m] = acc / m


def cauchy_product(a, b):
    """Product of two same-length coefficient lists, truncated to that length."""
    cdef Py_ssize_t n = len(a)
    cdef double* ca = _alloc(n)
    cdef double* cb = NULL
    cdef double* out = NULL
    try:
        _fill(ca, a, n)
        cb = _alloc(n)
        _fill(cb, b, n)
        out = _alloc(n)
        _cauchy(ca, cb, out, n)
        return _to_list(out, n)
    finally:
        PyMem_Free(ca)
        PyMem_Free(cb)
        PyMem_Free(out)


def fractional_power(u, s):
    """Coefficients of u**s for a series u with constant term exactly 1."""
    cdef Py_ssize_t n = len(u)
    cdef double cs = s
    cdef double* cu = _alloc(n)
    cdef double* h = NULL
    try:
        _fill(cu, u, n)
        h = _alloc(n)
        _fractional_power(cu, h, cs, n)
        return _to_list(h, n)
    finally:
        PyMem_Free(cu)
        PyMem_Free(h)


def nested_expansion(params, s, order):
    """Taylor coefficients, through ``order``, of the nested-root form."""
    cdef Py_ssize_t k = len(params)
    cdef Py_ssize_t n = order + 1
    cdef double cs = s
    cdef Py_ssize_t i, j
    cdef double a
    cdef double* cp = _alloc(k)
    cdef double* u = NULL
    cdef double* p = NULL
    try:
        _fill(cp, params, k)
        u = _alloc(n)
        p = _alloc(n)
        for j in range(n):
            u[j] = 0.0
        u[0] = 1.0
        if n > 1:
            u[1] = cp[k - 1]
        for i in range(k - 2, -1, -1):
            _fractional_power(u, p, cs, n)
            a = cp[i]
            u[0] = 1.0
            for j in range(1, n):
                u[j] = a * p[j - 1]
        _fractional_power(u, p, cs, n)
        return _to_list(p, n)
    finally:
        PyMem_Free(cp)
        PyMem_Free(u)
        PyMem_Free(p)


def nested_evaluate(params, s, x, integer_power):
    """Evaluate the nested-root form at a point, innermost bracket outward.

    Returns ``(value, 0)`` on success, or ``(nan, depth)`` naming the first
    bracket whose base is invalid for the power.
    """
    cdef Py_ssize_t k = len(params)
    cdef double cs = s
    cdef double cx = x
    cdef bint is_int = integer_power
    cdef Py_ssize_t m
    cdef double u
    cdef double* cp = _alloc(k)
    try:
        _fill(cp, params, k)
        u = 1.0 + cp[k - 1] * cx
        for m in range(k, 1, -1):
            if (u < 0.0 and not is_int) or (u == 0.0 and cs < 0.0):
                return (NAN, m)
            u = 1.0 + cp[m - 2] * cx * pow(u, cs)
        if (u < 0.0 and not is_int) or (u == 0.0 and cs < 0.0):
            return (NAN, 1)
        return (pow(u, cs), 0)
    finally:
        PyMem_Free(cp)
