"""Dense matrices over the prime field GF(p), stored as numpy integer arrays."""
from __future__ import annotations

import numpy as np


def inv_table(p: int) -> np.ndarray:
    t = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        t[a] = pow(a, p - 2, p)
    return t


def rref_mod_p(M, p: int) -> tuple[np.ndarray, list[int]]:
    """Row-reduce over GF(p); returns the nonzero RREF rows and their pivot columns."""
    A = np.array(M, dtype=np.int64) % p
    if A.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    inv = inv_table(p)
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = (A[r] * inv[A[r, c]]) % p
        others = np.flatnonzero(A[:, c])
        others = others[others != r]
        if others.size:
            A[others] = (A[others] - np.outer(A[others, c], A[r])) % p
        pivots.append(c)
        r += 1
    return A[:r].copy(), pivots


def rank_mod_p(M, p: int) -> int:
    return len(rref_mod_p(M, p)[1])


def nullspace_mod_p(M, p: int) -> np.ndarray:
    """Basis (as rows) of {x : M x = 0} over GF(p)."""
    M = np.asarray(M)
    n = M.shape[1]
    R, pivots = rref_mod_p(M, p)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, c in enumerate(pivots):
            basis[i, c] = (-R[r, f]) % p
    return basis


def in_row_space(R: np.ndarray, pivots: list[int], v, p: int) -> bool:
    """Membership of v in the span of RREF rows R."""
    v = np.array(v, dtype=np.int64) % p
    if len(pivots):
        v = (v - v[pivots] @ R) % p
    return not v.any()
