# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernels for the finite-ring oracle.

Elements of M_n(F_p) are encoded as ``sum(entry_k * p**k)`` over the
row-major entry index ``k``.  The involution is the transpose.
"""

import numpy as np
cimport numpy as cnp

cnp.import_array()

# flag bits, one per defining equation
cdef enum:
    B_AXA = 1
    B_XAX = 2
    B_AX_STAR = 4
    B_XA_STAR = 8
    B_COMMUTE = 16
    B_XAA = 32
    B_AXX = 64
    B_AAX = 128
    B_XXA = 256


def _digits(int p, int n):
    cdef Py_ssize_t N = p ** (n * n), m = n * n, idx, k
    cdef cnp.int32_t[:, :] d = np.zeros((N, m), dtype=np.int32)
    cdef long v
    for idx in range(N):
        v = idx
        for k in range(m):
            d[idx, k] = v % p
            v //= p
    return np.asarray(d)


def mul_table(int p, int n):
    """``table[a, b]`` = code of ``a @ b``."""
    cdef Py_ssize_t N = p ** (n * n)
    cdef cnp.int32_t[:, :] d = _digits(p, n)
    cdef cnp.int32_t[:, :] out = np.zeros((N, N), dtype=np.int32)
    cdef cnp.int64_t[:] pw = np.array([p ** k for k in range(n * n)], dtype=np.int64)
    cdef Py_ssize_t a, b, i, j, l
    cdef long s, code
    for a in range(N):
        for b in range(N):
            code = 0
            for i in range(n):
                for j in range(n):
                    s = 0
                    for l in range(n):
                        s += d[a, i * n + l] * d[b, l * n + j]
                    code += (s % p) * pw[i * n + j]
            out[a, b] = code
    return np.asarray(out)


def star_table(int p, int n):
    cdef Py_ssize_t N = p ** (n * n)
    cdef cnp.int32_t[:, :] d = _digits(p, n)
    cdef cnp.int32_t[:] out = np.zeros(N, dtype=np.int32)
    cdef cnp.int64_t[:] pw = np.array([p ** k for k in range(n * n)], dtype=np.int64)
    cdef Py_ssize_t a, i, j
    cdef long code
    for a in range(N):
        code = 0
        for i in range(n):
            for j in range(n):
                code += d[a, j * n + i] * pw[i * n + j]
        out[a] = code
    return np.asarray(out)


def scan_flags(int p, int n):
    """``flags[a, x]``: bitmask of the equations satisfied by the pair."""
    cdef Py_ssize_t N = p ** (n * n)
    cdef cnp.int32_t[:, :] mul = mul_table(p, n)
    cdef cnp.int32_t[:] st = star_table(p, n)
    cdef cnp.uint16_t[:, :] flags = np.zeros((N, N), dtype=np.uint16)
    cdef Py_ssize_t a, x
    cdef int ax, xa, a2, x2, f
    for a in range(N):
        a2 = mul[a, a]
        for x in range(N):
            ax = mul[a, x]
            xa = mul[x, a]
            x2 = mul[x, x]
            f = 0
            if mul[ax, a] == a:
                f |= B_AXA
            if mul[xa, x] == x:
                f |= B_XAX
            if st[ax] == ax:
                f |= B_AX_STAR
            if st[xa] == xa:
                f |= B_XA_STAR
            if ax == xa:
                f |= B_COMMUTE
            if mul[x, a2] == a:
                f |= B_XAA
            if mul[a, x2] == x:
                f |= B_AXX
            if mul[a2, x] == a:
                f |= B_AAX
            if mul[x2, a] == x:
                f |= B_XXA
            flags[a, x] = f
    return np.asarray(flags)
