# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled inner loops; same contracts as ``_kernels_py``."""

from libc.stdlib cimport malloc, free

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"

cdef u128 U128_MAX = ~(<u128>0)
cdef unsigned long long LO_MASK = 0xFFFFFFFFFFFFFFFFULL


cdef object _to_pyint(u128 v):
    cdef unsigned long long hi = <unsigned long long>(v >> 64)
    cdef unsigned long long lo = <unsigned long long>(v & LO_MASK)
    if hi == 0:
        return lo
    return (<object>hi << 64) | <object>lo


def convolve(list a, list b, Py_ssize_t n):
    cdef list out = [0] * (n + 1)
    cdef Py_ssize_t la = min(len(a), n + 1)
    cdef Py_ssize_t lb = len(b)
    cdef Py_ssize_t i, j, top
    cdef object ai
    for i in range(la):
        ai = a[i]
        if not ai:
            continue
        top = min(lb, n + 1 - i)
        for j in range(top):
            out[i + j] = out[i + j] + ai * b[j]
    return out


def power_sums(count, int max_exp):
    cdef list sums = [0] * (max_exp + 1)
    if count <= 0:
        return sums
    sums[0] = count
    if max_exp == 0:
        return sums
    if count > (1 << 62):
        from ._kernels_py import power_sums as slow
        return slow(count, max_exp)

    # exponents 1..fast fit a single term in 127 bits
    cdef int fast = 0
    top = count - 1
    while fast < max_exp and top ** (fast + 1) < (1 << 127):
        fast += 1

    cdef u128 *acc = <u128 *>malloc((fast + 1) * sizeof(u128))
    if acc == NULL:
        raise MemoryError()
    cdef unsigned long long x, cnt = <unsigned long long>count
    cdef u128 xe
    cdef int e
    cdef object xe_py
    try:
        for e in range(fast + 1):
            acc[e] = 0
        for x in range(1, cnt):
            xe = 1
            for e in range(1, fast + 1):
                xe = xe * x
                if acc[e] > U128_MAX - xe:
                    sums[e] = sums[e] + _to_pyint(acc[e])
                    acc[e] = 0
                acc[e] += xe
            if fast < max_exp:
                xe_py = _to_pyint(xe) if fast > 0 else 1
                for e in range(fast + 1, max_exp + 1):
                    xe_py = xe_py * x
                    sums[e] = sums[e] + xe_py
        for e in range(1, fast + 1):
            sums[e] = sums[e] + _to_pyint(acc[e])
    finally:
        free(acc)
    return sums


def stirling1_rows(Py_ssize_t max_n):
    cdef list rows = [[1]]
    cdef list prev, row
    cdef Py_ssize_t n, l
    for n in range(max_n):
        prev = rows[n]
        row = [0] * (n + 2)
        for l in range(1, n + 2):
            if l <= n:
                row[l] = prev[l - 1] - n * prev[l]
            else:
                row[l] = prev[l - 1]
        rows.append(row)
    return rows


def stirling2_rows(Py_ssize_t max_n):
    cdef list rows = [[1]]
    cdef list prev, row
    cdef Py_ssize_t m, n
    for m in range(max_n):
        prev = rows[m]
        row = [0] * (m + 2)
        for n in range(1, m + 2):
            if n <= m:
                row[n] = n * prev[n] + prev[n - 1]
            else:
                row[n] = prev[n - 1]
        rows.append(row)
    return rows
