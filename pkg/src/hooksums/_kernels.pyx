# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: prime-exponent f^lambda and the Vandermonde MC summand."""
from libc.math cimport fabs, pow
from libc.stdlib cimport malloc, free
import numpy as np

BACKEND = "cython"

cdef int *_spf = NULL
cdef int _spf_size = 0


cdef int _ensure_spf(int n) except -1:
    global _spf, _spf_size
    cdef int size, i, j
    cdef int *buf
    if _spf_size > n:
        return 0
    size = max(n + 1, 2 * _spf_size)
    buf = <int *> malloc(size * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    for i in range(size):
        buf[i] = i
    i = 2
    while i * i < size:
        if buf[i] == i:
            j = i * i
            while j < size:
                if buf[j] == j:
                    buf[j] = i
                j += i
        i += 1
    if _spf != NULL:
        free(_spf)
    _spf = buf
    _spf_size = size
    return 0


def hook_lengths(parts):
    cdef Py_ssize_t rows = len(parts)
    cdef Py_ssize_t i, j, width
    if rows == 0:
        return []
    width = parts[0]
    cdef int[::1] col_len = np.zeros(width, dtype=np.intc)
    cdef int[::1] row_len = np.asarray(parts, dtype=np.intc)
    for i in range(rows):
        for j in range(row_len[i]):
            col_len[j] += 1
    return [
        [row_len[i] - j + col_len[j] - i - 1 for j in range(row_len[i])]
        for i in range(rows)
    ]


cdef void _exponents(int[::1] row_len, int[::1] col_len, int n, long[::1] exps) noexcept nogil:
    cdef Py_ssize_t i, j, rows = row_len.shape[0]
    cdef long q
    cdef int p, h, f
    for p in range(2, n + 1):
        if _spf[p] == p:
            q = p
            while q <= n:
                exps[p] += n // q
                q *= p
    for i in range(rows):
        for j in range(row_len[i]):
            h = row_len[i] - j + col_len[j] - i - 1
            while h > 1:
                f = _spf[h]
                exps[f] -= 1
                h = h // f


def f_lambda_exponents(parts):
    cdef Py_ssize_t rows = len(parts)
    cdef int n = sum(parts)
    cdef Py_ssize_t i, j
    _ensure_spf(n)
    cdef long[::1] exps = np.zeros(n + 1, dtype=np.int_)
    if rows == 0:
        return []
    cdef int[::1] row_len = np.asarray(parts, dtype=np.intc)
    cdef int[::1] col_len = np.zeros(row_len[0], dtype=np.intc)
    for i in range(rows):
        for j in range(row_len[i]):
            col_len[j] += 1
    with nogil:
        _exponents(row_len, col_len, n, exps)
    return [int(e) for e in exps]


def f_lambda(parts):
    if len(parts) == 0:
        return 1
    exps = f_lambda_exponents(parts)
    out = 1
    for p, e in enumerate(exps):
        if e < 0:
            raise ArithmeticError(f"hook product does not divide n! for {tuple(parts)}")
        if e:
            out *= p ** e
    return out


def vandermonde_power_sums(x, int split, double beta):
    """Sum and sum of squares over rows of (|D(x[:split])| * |D(x[split:])|)**beta."""
    cdef double[:, ::1] xv = np.ascontiguousarray(x, dtype=np.float64)
    cdef Py_ssize_t m = xv.shape[0], s = xv.shape[1]
    cdef Py_ssize_t r, i, j
    cdef double prod, v, total = 0.0, total_sq = 0.0
    with nogil:
        for r in range(m):
            prod = 1.0
            for i in range(split):
                for j in range(i + 1, split):
                    prod *= fabs(xv[r, i] - xv[r, j])
            for i in range(split, s):
                for j in range(i + 1, s):
                    prod *= fabs(xv[r, i] - xv[r, j])
            if beta == 1.0:
                v = prod
            elif beta == 2.0:
                v = prod * prod
            else:
                v = pow(prod, beta)
            total += v
            total_sq += v * v
    return total, total_sq
