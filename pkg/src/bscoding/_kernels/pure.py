"""Pure numpy fallback for the sphere enumeration kernel.

The enumeration walks every admissible symbol sequence of a fixed length
and emits one packed word per sequence: 8 bits per letter, first letter
in the most significant occupied byte, so sorting the packed array is
the same as sorting words lexicographically.  Letter codes are stored
as code + 1 so that a zero byte never appears inside a word.

The expansion is breadth-first per chunk but emission order is exactly
the depth-first order over symbols, which the compiled kernel mirrors;
both produce byte-identical arrays.
"""

import numpy as np

CHUNK = 1 << 22


def path_counts(indptr, indices, n):
    """#paths with k edges from each state, for k = 0..n-1, as Python ints."""
    size = len(indptr) - 1
    rows = [list(indices[indptr[i]:indptr[i + 1]]) for i in range(size)]
    table = [[1] * size]
    for _ in range(n - 1):
        prev = table[-1]
        table.append([sum(prev[j] for j in row) for row in rows])
    return table


def enumerate_packed(indptr, indices, codes, n):
    """uint64 packed words of every admissible length-n sequence, DFS order."""
    if n < 1:
        raise ValueError("sequence length must be positive")
    if n > 8:
        raise ValueError("packed enumeration supports length <= 8")
    indptr = np.asarray(indptr, dtype=np.int64)
    indices = np.asarray(indices, dtype=np.int32)
    codes = np.asarray(codes, dtype=np.uint8)
    size = len(indptr) - 1
    counts = path_counts(indptr, indices, n)
    total = sum(counts[n - 1])
    out = np.empty(total, dtype=np.uint64)
    first = np.arange(size, dtype=np.int32)
    keys = (codes[first].astype(np.uint64) + 1)
    _fill(out, 0, first, keys, 1, n, indptr, indices, codes, counts)
    return out


def _fill(out, base, states, keys, depth, n, indptr, indices, codes, counts):
    """Write the full subtree below (states, keys) into out[base:...]."""
    if depth == n:
        out[base:base + len(states)] = keys
        return base + len(states)
    remaining = counts[n - depth]
    weight = sum(remaining[s] for s in states.tolist())
    if weight > CHUNK and len(states) > 1:
        half = len(states) // 2
        base = _fill(out, base, states[:half], keys[:half], depth, n,
                     indptr, indices, codes, counts)
        return _fill(out, base, states[half:], keys[half:], depth, n,
                     indptr, indices, codes, counts)
    while depth < n:
        deg = (indptr[states + 1] - indptr[states]).astype(np.int64)
        rep = np.repeat(np.arange(len(states)), deg)
        within = np.arange(int(deg.sum()), dtype=np.int64)
        within -= np.repeat(np.cumsum(deg) - deg, deg)
        children = indices[np.repeat(indptr[states], deg) + within]
        keys = (keys[rep] << np.uint64(8)) | (codes[children].astype(np.uint64) + 1)
        states = children
        depth += 1
    out[base:base + len(states)] = keys
    return base + len(states)
