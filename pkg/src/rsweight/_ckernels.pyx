# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; see _pykernels for the reference versions."""

import numpy as np


def root_histogram(const int[::1] base, const int[:, ::1] powers,
                   const int[:, ::1] add, const int[:, ::1] mul,
                   int q, int k, long long start, long long stop):
    cdef Py_ssize_t n = base.shape[0]
    cdef Py_ssize_t a, i
    cdef long long m, rem
    cdef int v, c, cnt
    hist_arr = np.zeros(n + 1, dtype=np.int64)
    cdef long long[::1] hist = hist_arr
    digits_arr = np.zeros(max(k, 1), dtype=np.int32)
    cdef int[::1] digits = digits_arr
    rem = start
    for i in range(k):
        digits[i] = rem % q
        rem //= q
    for m in range(start, stop):
        cnt = 0
        for a in range(n):
            v = base[a]
            for i in range(k):
                c = digits[i]
                if c:
                    v = add[v, mul[c, powers[i, a]]]
            if v == 0:
                cnt += 1
        hist[cnt] += 1
        for i in range(k):
            digits[i] += 1
            if digits[i] < q:
                break
            digits[i] = 0
    return hist_arr


def vsystem_count(const int[::1] dom, const int[::1] avec, int a0, int b0,
                  const int[:, ::1] add, const int[:, ::1] mul):
    cdef Py_ssize_t n = dom.shape[0]
    cdef Py_ssize_t m = avec.shape[0]
    cdef Py_ssize_t j
    cdef long long total = 0
    cdef int s1, s2, x, ax
    if m == 0:
        return int(a0 == 0 and b0 == 0)
    idx_arr = np.zeros(m, dtype=np.int64)
    cdef long long[::1] idx = idx_arr
    while True:
        s1 = 0
        s2 = 0
        for j in range(m):
            x = dom[idx[j]]
            ax = mul[avec[j], x]
            s1 = add[s1, ax]
            s2 = add[s2, mul[ax, x]]
        if s1 == b0 and s2 == a0:
            total += 1
        j = 0
        while j < m:
            idx[j] += 1
            if idx[j] < n:
                break
            idx[j] = 0
            j += 1
        if j == m:
            break
    return total
