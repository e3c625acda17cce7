# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels for the brute-force oracle.

Assignment index ``a`` encodes position ``p`` (0 = most significant) in bit
``n - 1 - p``.  Clause masks use the same bit layout.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t, int64_t, uint8_t

cnp.import_array()


def cnf_table(uint64_t[::1] pos, uint64_t[::1] neg, int n):
    cdef Py_ssize_t m = pos.shape[0]
    cdef uint64_t total = (<uint64_t>1) << n
    cdef uint64_t a, full = total - 1
    cdef Py_ssize_t j
    out = np.ones(total, dtype=np.uint8)
    cdef uint8_t[::1] t = out
    for a in range(total):
        for j in range(m):
            if ((a & pos[j]) | ((~a) & full & neg[j])) == 0:
                t[a] = 0
                break
    return out


def first_cnf_model(uint64_t[::1] pos, uint64_t[::1] neg, int n):
    cdef Py_ssize_t m = pos.shape[0]
    cdef uint64_t total = (<uint64_t>1) << n
    cdef uint64_t a, full = total - 1
    cdef Py_ssize_t j
    cdef bint ok
    for a in range(total):
        ok = True
        for j in range(m):
            if ((a & pos[j]) | ((~a) & full & neg[j])) == 0:
                ok = False
                break
        if ok:
            return <int64_t>a
    return -1


def pb_table(int64_t[:, ::1] coefs, int64_t[::1] bounds, int n):
    """0/1 table of ``coefs @ bits(a) >= bounds`` for every ``a``.

    Walks the assignments in Gray-code order so each step updates the
    left-hand sides by one column.
    """
    cdef Py_ssize_t m = coefs.shape[0]
    cdef uint64_t total = (<uint64_t>1) << n
    cdef uint64_t i, g, prev = 0
    cdef Py_ssize_t j, col
    cdef int bit
    cdef int64_t sign
    out = np.zeros(total, dtype=np.uint8)
    cdef uint8_t[::1] t = out
    lhs_arr = np.zeros(m, dtype=np.int64)
    cdef int64_t[::1] lhs = lhs_arr
    cdef bint ok
    for i in range(total):
        g = i ^ (i >> 1)
        if i:
            bit = 0
            while ((g ^ prev) >> bit) != 1:
                bit += 1
            col = n - 1 - bit
            sign = 1 if (g >> bit) & 1 else -1
            for j in range(m):
                lhs[j] += sign * coefs[j, col]
        prev = g
        ok = True
        for j in range(m):
            if lhs[j] < bounds[j]:
                ok = False
                break
        t[g] = ok
    return out
