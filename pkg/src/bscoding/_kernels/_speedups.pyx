# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sphere enumeration kernel.

Iterative depth-first walk over the transition graph emitting one packed
uint64 word per admissible sequence.  Must stay byte-identical to the
pure numpy fallback in pure.py: same packing (8 bits per letter, code+1,
first letter most significant) and same DFS emission order.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def path_counts(indptr, indices, n):
    # no table[-1] here: wraparound is off module-wide
    size = len(indptr) - 1
    rows = [list(indices[indptr[i]:indptr[i + 1]]) for i in range(size)]
    prev = [1] * size
    table = [prev]
    for _ in range(n - 1):
        prev = [sum(prev[j] for j in row) for row in rows]
        table.append(prev)
    return table


def enumerate_packed(indptr_in, indices_in, codes_in, int n):
    if n < 1:
        raise ValueError("sequence length must be positive")
    if n > 8:
        raise ValueError("packed enumeration supports length <= 8")
    cdef cnp.ndarray[cnp.int64_t, ndim=1] indptr = np.ascontiguousarray(indptr_in, dtype=np.int64)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] indices = np.ascontiguousarray(indices_in, dtype=np.int32)
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] codes = np.ascontiguousarray(codes_in, dtype=np.uint8)
    cdef Py_ssize_t size = indptr.shape[0] - 1
    counts = path_counts(indptr, indices, n)
    total_py = sum(counts[n - 1])
    cdef cnp.ndarray[cnp.uint64_t, ndim=1] out = np.empty(total_py, dtype=np.uint64)
    cdef cnp.int64_t[:] ip = indptr
    cdef cnp.int32_t[:] ix = indices
    cdef cnp.uint8_t[:] cd = codes
    cdef cnp.uint64_t[:] ov = out
    cdef Py_ssize_t idx = 0
    cdef int level
    cdef Py_ssize_t root
    cdef cnp.int64_t it[9]
    cdef int state[9]
    cdef cnp.uint64_t key[9]
    for root in range(size):
        level = 0
        state[0] = <int> root
        key[0] = <cnp.uint64_t> cd[root] + 1
        it[0] = ip[root]
        if n == 1:
            ov[idx] = key[0]
            idx += 1
            continue
        while level >= 0:
            if level == n - 1:
                ov[idx] = key[level]
                idx += 1
                level -= 1
                continue
            if it[level] < ip[state[level] + 1]:
                state[level + 1] = ix[it[level]]
                it[level] += 1
                key[level + 1] = (key[level] << 8) | (<cnp.uint64_t> cd[state[level + 1]] + 1)
                it[level + 1] = ip[state[level + 1]]
                level += 1
            else:
                level -= 1
    return out
