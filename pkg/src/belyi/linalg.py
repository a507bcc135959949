"""Exact integer linear algebra: fraction-free (Bareiss) elimination."""

import numpy as np

# Entries below this bound keep every product in the update inside int64.
_INT64_SAFE = 1 << 30


def _as_array(m):
    rows = [list(r) for r in m]
    n = len(rows)
    if any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged matrix")
    a = np.array(rows, dtype=np.int64) if n else np.zeros((0, 0), dtype=np.int64)
    if n and np.abs(a).max(initial=0) >= _INT64_SAFE:
        a = np.array(rows, dtype=object)
    return a


def integer_det(m) -> int:
    """Determinant of a square integer matrix, computed exactly.

    Bareiss elimination runs in int64 while all entries stay below 2**30 and
    switches to Python integers (object arrays) as soon as they do not.
    """
    a = _as_array(m)
    n = a.shape[0]
    if n == 0:
        return 1
    if a.shape[1] != n:
        raise ValueError(f"matrix is {a.shape[0]}x{a.shape[1]}, not square")
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k, k] == 0:
            nz = np.nonzero(a[k + 1:, k])[0]
            if len(nz) == 0:
                return 0
            i = k + 1 + nz[0]
            a[[k, i]] = a[[i, k]]
            sign = -sign
        if a.dtype != object and np.abs(a[k:, k:]).max() >= _INT64_SAFE:
            a = a.astype(object)
        piv = a[k, k]
        block = a[k + 1:, k + 1:] * piv - np.outer(a[k + 1:, k], a[k, k + 1:])
        a[k + 1:, k + 1:] = block // prev
        a[k + 1:, k] = 0
        prev = piv
    return sign * int(a[n - 1, n - 1])


def integer_rank(m) -> int:
    """Rank over Q of an integer matrix (any shape), by fraction-free elimination."""
    a = _as_array(m)
    if a.size == 0:
        return 0
    a = a.astype(object)
    rows, cols = a.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        nz = [i for i in range(rank, rows) if a[i, col] != 0]
        if not nz:
            continue
        i = nz[0]
        a[[rank, i]] = a[[i, rank]]
        piv = a[rank, col]
        for r in range(rank + 1, rows):
            if a[r, col] != 0:
                a[r] = a[r] * piv - a[rank] * a[r, col]
        rank += 1
    return rank
