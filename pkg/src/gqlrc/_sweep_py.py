"""Pure-Python low-weight codeword search (fallback for the compiled kernel).

A vector with support S and coefficients c is a codeword iff the syndrome
sum_{j in S} c_j H[:, j] vanishes.  The search walks supports of size w-1
depth first, keeping the partial syndrome, and finds the last position with a
hash lookup of the normalised negated syndrome.
"""
from __future__ import annotations

import numpy as np


def _pack_binary(cols: np.ndarray) -> list[int]:
    out = []
    for col in cols:
        v = 0
        for bit in np.flatnonzero(col):
            v |= 1 << int(bit)
        out.append(v)
    return out


def _binary(cols: np.ndarray, w: int, firsts) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    n = cols.shape[0]
    packed = _pack_binary(cols)
    lookup: dict[int, list[int]] = {}
    for j, v in enumerate(packed):
        lookup.setdefault(v, []).append(j)
    found = []
    ones = (1,) * w

    if w == 1:
        return [((j,), ones) for j in firsts if packed[j] == 0]

    chosen = [0] * (w - 1)

    def rec(depth: int, start: int, s: int) -> None:
        if depth == w - 1:
            last = chosen[-1]
            for j in lookup.get(s, ()):
                if j > last:
                    found.append((tuple(chosen) + (j,), ones))
            return
        stop = n - (w - depth) + 1
        for j in range(start, stop):
            chosen[depth] = j
            rec(depth + 1, j + 1, s ^ packed[j])

    for f in firsts:
        if f > n - w:
            continue
        chosen[0] = f
        rec(1, f + 1, packed[f])
    return found


def _general(cols: np.ndarray, p: int, w: int, firsts) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    n, r = cols.shape
    inv = [0] + [pow(a, p - 2, p) for a in range(1, p)]
    C = cols.astype(np.int64)

    def key(v: np.ndarray):
        nz = np.flatnonzero(v)
        if nz.size == 0:
            return None, 0
        lead = int(v[nz[0]])
        return ((v * inv[lead]) % p).tobytes(), lead

    lookup: dict = {}
    for j in range(n):
        k, lam = key(C[j])
        lookup.setdefault(k, []).append((j, lam))

    found = []
    if w == 1:
        return [((j,), (1,)) for j in firsts if not C[j].any()]

    idx = [0] * (w - 1)
    coef = [1] * (w - 1)

    def rec(depth: int, start: int, s: np.ndarray) -> None:
        if depth == w - 1:
            k, mu = key((-s) % p)
            last = idx[-1]
            for j, lam in lookup.get(k, ()):
                if j <= last:
                    continue
                if k is None:
                    for c in range(1, p):
                        found.append((tuple(idx) + (j,), tuple(coef) + (c,)))
                else:
                    found.append((tuple(idx) + (j,), tuple(coef) + (mu * inv[lam] % p,)))
            return
        stop = n - (w - depth) + 1
        for j in range(start, stop):
            idx[depth] = j
            for c in range(1, p):
                coef[depth] = c
                rec(depth + 1, j + 1, (s + c * C[j]) % p)

    for f in firsts:
        if f > n - w:
            continue
        idx[0] = f
        coef[0] = 1
        rec(1, f + 1, C[f] % p)
    return found


def enumerate_weight(cols: np.ndarray, p: int, w: int, lo: int = 0, hi: int | None = None):
    """All codewords of weight exactly w with first nonzero entry 1 and first index in [lo, hi).

    ``cols`` is the (n, r) array of parity-check columns.  Returns a list of
    (support, coefficients) pairs.
    """
    n = cols.shape[0]
    hi = n if hi is None else min(hi, n)
    if w < 1 or w > n:
        return []
    firsts = range(lo, hi)
    if p == 2:
        return _binary(cols, w, firsts)
    return _general(cols, p, w, firsts)
