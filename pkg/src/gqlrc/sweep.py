"""Backend selection for the low-weight codeword search.

The compiled kernel is used when importable; set ``GQLRC_PURE=1`` to force the
pure-Python fallback.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import _sweep_py

try:
    if os.environ.get("GQLRC_PURE"):
        raise ImportError("pure backend requested")
    from . import _sweep as _compiled
except ImportError:
    _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"


def get_kernel(backend: str | None = None):
    backend = backend or BACKEND
    if backend == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled sweep kernel is not available")
        return _compiled.enumerate_weight
    if backend == "python":
        return _sweep_py.enumerate_weight
    raise ValueError(f"unknown backend {backend!r}")


def words_of_weight(cols: np.ndarray, p: int, w: int, workers: int = 1, backend: str | None = None):
    """Normalised (leading coefficient 1) codewords of weight exactly w, sorted.

    With several workers the first support index is dealt round-robin to
    threads; the compiled kernel releases the GIL so this runs in parallel.
    """
    kernel = get_kernel(backend)
    n = cols.shape[0]
    cols = np.ascontiguousarray(cols, dtype=np.uint8)
    if workers <= 1 or n < 2 or (backend or BACKEND) == "python":
        words = kernel(cols, p, w, 0, n)
    else:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            parts = ex.map(lambda f: kernel(cols, p, w, f, f + 1), range(n))
            words = [x for part in parts for x in part]
    return sorted(words)
