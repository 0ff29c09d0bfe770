"""Matrix file formats: MacKay alist, CSV and JSON."""
from __future__ import annotations

import json

import numpy as np

FORMATS = ("json", "csv", "alist")


class FormatError(ValueError):
    pass


def _line(values) -> str:
    return " ".join(str(int(v)) for v in values) + "\n"


def to_alist(M) -> str:
    """Binary matrix in MacKay's alist layout, zero-padded index lists."""
    M = np.asarray(M)
    if M.ndim != 2 or M.size == 0:
        raise FormatError("alist needs a nonempty 2-d matrix")
    if ((M != 0) & (M != 1)).any():
        raise FormatError("alist carries 0/1 matrices only; use csv or json for p > 2 entries")
    nrows, ncols = M.shape
    col_sets = [np.flatnonzero(M[:, j]) + 1 for j in range(ncols)]
    row_sets = [np.flatnonzero(M[i]) + 1 for i in range(nrows)]
    col_deg = [len(c) for c in col_sets]
    row_deg = [len(r) for r in row_sets]
    max_c, max_r = max(col_deg), max(row_deg)
    out = [_line([ncols, nrows]), _line([max_c, max_r]), _line(col_deg), _line(row_deg)]
    out += [_line(list(c) + [0] * (max_c - len(c))) for c in col_sets]
    out += [_line(list(r) + [0] * (max_r - len(r))) for r in row_sets]
    return "".join(out)


def from_alist(text: str) -> np.ndarray:
    lines = [ln.split() for ln in text.strip().splitlines()]
    try:
        nums = [[int(x) for x in ln] for ln in lines]
        ncols, nrows = nums[0][:2]
        col_deg, row_deg = nums[2], nums[3]
        if len(col_deg) != ncols or len(row_deg) != nrows or len(nums) < 4 + ncols:
            raise FormatError("alist header does not match body")
        M = np.zeros((nrows, ncols), dtype=np.uint8)
        for j in range(ncols):
            idx = [x for x in nums[4 + j] if x]
            if len(idx) != col_deg[j]:
                raise FormatError(f"column {j + 1} degree mismatch")
            M[[i - 1 for i in idx], j] = 1
        if len(nums) >= 4 + ncols + nrows:
            for i in range(nrows):
                idx = [x for x in nums[4 + ncols + i] if x]
                if sorted(np.flatnonzero(M[i]) + 1) != sorted(idx):
                    raise FormatError(f"row {i + 1} disagrees with the column lists")
    except (IndexError, ValueError) as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(f"malformed alist: {exc}") from exc
    return M


def to_csv(M) -> str:
    return "".join(",".join(str(int(v)) for v in row) + "\n" for row in np.asarray(M))


def from_csv(text: str) -> np.ndarray:
    rows = [[int(x) for x in ln.split(",")] for ln in text.strip().splitlines() if ln.strip()]
    if not rows or len({len(r) for r in rows}) != 1:
        raise FormatError("ragged or empty csv matrix")
    return np.array(rows, dtype=np.int64)


def to_json(M, p: int, k: int, name: str = "") -> str:
    M = np.asarray(M)
    doc = {"p": p, "length": int(M.shape[1]), "k": k, "matrix": name, "rows": M.astype(int).tolist()}
    return json.dumps(doc) + "\n"


def from_json(text: str) -> tuple[np.ndarray, dict]:
    doc = json.loads(text)
    rows = doc.pop("rows")
    return np.array(rows, dtype=np.int64).reshape(len(rows), doc["length"]), doc


def dump(M, fmt: str, p: int = 2, k: int = 0, name: str = "") -> str:
    if fmt == "alist":
        return to_alist(M)
    if fmt == "csv":
        return to_csv(M)
    if fmt == "json":
        return to_json(M, p, k, name)
    raise FormatError(f"unknown format {fmt!r}")


def load(text: str, fmt: str) -> np.ndarray:
    if fmt == "alist":
        return from_alist(text)
    if fmt == "csv":
        return from_csv(text)
    if fmt == "json":
        return from_json(text)[0]
    raise FormatError(f"unknown format {fmt!r}")
