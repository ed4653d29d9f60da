# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled kernels; see ``_pykernels`` for the contracts."""

import numpy as np

from libc.stdint cimport int64_t, uint8_t, uint32_t, uint64_t
from libc.stdlib cimport calloc, free, malloc

MAX_BRUTE_FORCE = 20


def ancestor_matrix(parent, order):
    cdef const int64_t[:] par = np.ascontiguousarray(parent, dtype=np.int64)
    cdef const int64_t[:] ordv = np.ascontiguousarray(order, dtype=np.int64)
    cdef Py_ssize_t n = par.shape[0]
    cdef Py_ssize_t k, i, j
    cdef int64_t p
    out = np.zeros((n, n), dtype=np.uint8)
    cdef uint8_t[:, ::1] m = out
    for k in range(n):
        i = ordv[k]
        p = par[i]
        if p >= 0:
            for j in range(n):
                m[i, j] = m[p, j]
            m[i, p] = 1
    return out


cdef inline bint _rows_equal(const uint8_t[:, ::1] a, Py_ssize_t i, Py_ssize_t j) nogil:
    cdef Py_ssize_t k, n = a.shape[0]
    cdef uint8_t ci, cj
    for k in range(n):
        ci = a[i, k] | a[k, i] | (k == i)
        cj = a[j, k] | a[k, j] | (k == j)
        if ci != cj:
            return False
    return True


def comparability_classes(anc):
    cdef const uint8_t[:, ::1] a = np.ascontiguousarray(anc, dtype=np.uint8)
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i, k
    cdef uint64_t h
    cdef uint8_t c
    hashes = np.empty(n, dtype=np.uint64)
    cdef uint64_t[::1] hv = hashes
    for i in range(n):
        h = 1469598103934665603ULL
        for k in range(n):
            c = a[i, k] | a[k, i] | (k == i)
            h = (h ^ (c + 1)) * 1099511628211ULL
        hv[i] = h
    rep = np.empty(n, dtype=np.int64)
    cdef int64_t[::1] rv = rep
    buckets = {}
    for i in range(n):
        cands = buckets.setdefault(int(hv[i]), [])
        for r in cands:
            if _rows_equal(a, r, i):
                rv[i] = r
                break
        else:
            cands.append(i)
            rv[i] = i
    return rep


def branching2_sizes(up, comp):
    cdef const uint64_t[:] upv = np.ascontiguousarray(up, dtype=np.uint64)
    cdef const uint64_t[:] compv = np.ascontiguousarray(comp, dtype=np.uint64)
    cdef Py_ssize_t m = upv.shape[0]
    if m > MAX_BRUTE_FORCE:
        raise ValueError(f"{m} nodes exceeds brute-force limit {MAX_BRUTE_FORCE}")
    cdef uint64_t full = (<uint64_t>1) << m
    cdef uint64_t mask, rest, low, b, bit
    cdef Py_ssize_t k, lowi
    cdef uint8_t *anti = <uint8_t *> malloc(full)
    cdef uint8_t *size = <uint8_t *> malloc(full)
    cdef uint32_t *closure = <uint32_t *> malloc(full * sizeof(uint32_t))
    cdef uint8_t *reach = <uint8_t *> calloc((m + 1) * full, 1)
    if anti == NULL or size == NULL or closure == NULL or reach == NULL:
        free(anti); free(size); free(closure); free(reach)
        raise MemoryError()
    ok = np.ones(m + 1, dtype=np.uint8)
    cdef uint8_t[::1] okv = ok
    try:
        anti[0] = 1
        size[0] = 0
        closure[0] = 0
        reach[0] = 1
        for mask in range(1, full):
            low = mask & (~mask + 1)
            rest = mask ^ low
            lowi = 0
            while ((<uint64_t>1) << lowi) != low:
                lowi += 1
            anti[mask] = anti[rest] and not (compv[lowi] & rest)
            size[mask] = size[rest] + 1
            closure[mask] = closure[rest] | <uint32_t> upv[lowi]
            if anti[mask]:
                reach[size[mask] * full + closure[mask]] = 1
        for k in range(m + 1):
            for b in range(m):
                bit = (<uint64_t>1) << b
                for mask in range(full):
                    if not (mask & bit):
                        reach[k * full + mask] |= reach[k * full + (mask | bit)]
            for mask in range(full):
                if anti[mask] and not reach[k * full + mask]:
                    okv[k] = 0
                    break
    finally:
        free(anti); free(size); free(closure); free(reach)
    return ok
