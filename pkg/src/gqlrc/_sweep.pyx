# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled low-weight codeword search over GF(p).

Same contract as ``_sweep_py.enumerate_weight``.  The depth-first walk over
the first w-1 positions keeps partial syndromes per level; the last position
is found by a linear scan, which releases the GIL so callers can split the
first index across threads.
"""
import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, free

cnp.import_array()


cdef inline void _emit(int* idx, int* coef, int w, int j, int c,
                       int[:, ::1] out_idx, unsigned char[:, ::1] out_coef,
                       Py_ssize_t* count) noexcept nogil:
    cdef Py_ssize_t k = count[0]
    cdef int d
    if k < out_idx.shape[0]:
        for d in range(w - 1):
            out_idx[k, d] = idx[d]
            out_coef[k, d] = coef[d]
        out_idx[k, w - 1] = j
        out_coef[k, w - 1] = c
    count[0] = k + 1


cdef Py_ssize_t _search(const unsigned char[:, ::1] cols, int p, int w, int lo, int hi,
                        int[:, ::1] out_idx, unsigned char[:, ::1] out_coef) noexcept nogil:
    cdef int n = cols.shape[0]
    cdef int r = cols.shape[1]
    cdef Py_ssize_t count = 0
    cdef int d, j, c, t, limit, v
    cdef bint ok
    cdef int* idx
    cdef int* coef
    cdef unsigned char* sums
    cdef unsigned char* mul
    cdef unsigned char* prev

    if w == 1:
        for j in range(lo, hi):
            ok = True
            for t in range(r):
                if cols[j, t] != 0:
                    ok = False
                    break
            if ok:
                if count < out_idx.shape[0]:
                    out_idx[count, 0] = j
                    out_coef[count, 0] = 1
                count += 1
        return count

    idx = <int*> malloc(w * sizeof(int))
    coef = <int*> malloc(w * sizeof(int))
    sums = <unsigned char*> malloc((w * r + 1) * sizeof(unsigned char))
    mul = <unsigned char*> malloc(p * p * sizeof(unsigned char))
    for c in range(p):
        for v in range(p):
            mul[c * p + v] = (c * v) % p

    d = 0
    idx[0] = lo
    coef[0] = 1
    while True:
        if d == 0:
            limit = n - w + 1
            if hi < limit:
                limit = hi
        else:
            limit = n - w + 1 + d
        if idx[d] >= limit:
            if d == 0:
                break
            d -= 1
            coef[d] += 1
            if d == 0 or coef[d] == p:
                coef[d] = 1
                idx[d] += 1
            continue

        # partial syndrome after choosing positions 0..d
        if d == 0:
            for t in range(r):
                sums[t] = cols[idx[0], t]
        else:
            prev = sums + (d - 1) * r
            for t in range(r):
                v = prev[t] + mul[coef[d] * p + cols[idx[d], t]]
                if v >= p:
                    v -= p
                sums[d * r + t] = <unsigned char> v

        if d == w - 2:
            prev = sums + d * r
            for j in range(idx[d] + 1, n):
                for c in range(1, p):
                    ok = True
                    for t in range(r):
                        v = prev[t] + mul[c * p + cols[j, t]]
                        if v != 0 and v != p:
                            ok = False
                            break
                    if ok:
                        _emit(idx, coef, w, j, c, out_idx, out_coef, &count)
            coef[d] += 1
            if d == 0 or coef[d] == p:
                coef[d] = 1
                idx[d] += 1
        else:
            d += 1
            idx[d] = idx[d - 1] + 1
            coef[d] = 1

    free(idx)
    free(coef)
    free(sums)
    free(mul)
    return count


def enumerate_weight(cols, int p, int w, int lo=0, hi=None, Py_ssize_t capacity=4096):
    """All weight-w codewords with leading coefficient 1 and first index in [lo, hi)."""
    cdef const unsigned char[:, ::1] c_cols = np.ascontiguousarray(cols, dtype=np.uint8)
    cdef int n = c_cols.shape[0]
    cdef int c_hi = n if hi is None else min(<int> hi, n)
    cdef Py_ssize_t count
    cdef int[:, ::1] out_idx
    cdef unsigned char[:, ::1] out_coef
    if w < 1 or w > n or lo >= c_hi:
        return []
    capacity = max(capacity, 1)
    while True:
        idx_arr = np.zeros((capacity, w), dtype=np.intc)
        coef_arr = np.zeros((capacity, w), dtype=np.uint8)
        out_idx = idx_arr
        out_coef = coef_arr
        with nogil:
            count = _search(c_cols, p, w, lo, c_hi, out_idx, out_coef)
        if count <= capacity:
            break
        capacity = count
    return [(tuple(int(x) for x in idx_arr[k]), tuple(int(x) for x in coef_arr[k]))
            for k in range(count)]
