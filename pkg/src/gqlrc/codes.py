"""p-ary linear codes of incidence matrices and their minimum-weight words."""
from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass, field as dc_field
from functools import cached_property

import numpy as np

from .fpmat import in_row_space, nullspace_mod_p, rref_mod_p
from .gf import field_of_order
from .pgeom import ProjectiveSpace, Subspace, incidence_matrix_spaces, span
from .sweep import words_of_weight

DEFAULT_SWEEP_BUDGET = 10**9
DEFAULT_EXHAUSTIVE_BUDGET = 2**26

Word = tuple[tuple[int, ...], tuple[int, ...]]  # (support, values)


class BudgetExceeded(RuntimeError):
    def __init__(self, what: str, needed: int, budget: int):
        super().__init__(f"{what}: {needed} candidates exceeds budget {budget}")
        self.needed, self.budget = needed, budget


class CodeError(ValueError):
    pass


def default_budget() -> int:
    env = os.environ.get("GQLRC_BUDGET")
    return int(float(env)) if env else DEFAULT_SWEEP_BUDGET


@dataclass
class LinearCode:
    p: int
    length: int
    gen_rows: np.ndarray
    rref_basis: np.ndarray
    pivots: list[int]
    dual_basis: np.ndarray

    @property
    def k(self) -> int:
        return self.rref_basis.shape[0]

    @cached_property
    def syndrome_columns(self) -> np.ndarray:
        """Column j of the parity-check matrix, one row per code position."""
        return np.ascontiguousarray(self.dual_basis.T, dtype=np.uint8)

    def header(self) -> dict:
        return {"p": self.p, "length": self.length, "k": self.k}


def code_from_matrix(rows, p: int) -> LinearCode:
    G = np.array(rows, dtype=np.int64)
    if G.ndim != 2 or G.size == 0:
        raise CodeError("empty generator matrix")
    G %= p
    R, pivots = rref_mod_p(G, p)
    H = nullspace_mod_p(G, p)
    return LinearCode(p=p, length=G.shape[1], gen_rows=G, rref_basis=R, pivots=pivots, dual_basis=H)


def contains(code: LinearCode, v) -> bool:
    """Membership via the parity checks."""
    v = np.asarray(v, dtype=np.int64)
    if v.shape != (code.length,):
        raise CodeError(f"vector length {v.shape} does not match code length {code.length}")
    if code.dual_basis.shape[0] == 0:
        return True
    return not ((code.dual_basis @ (v % code.p)) % code.p).any()


def word_vector(word: Word, length: int) -> np.ndarray:
    v = np.zeros(length, dtype=np.int64)
    v[list(word[0])] = word[1]
    return v


def expand_scalars(words, p: int) -> list[Word]:
    """All nonzero multiples of leading-coefficient-1 words."""
    out = []
    for support, vals in words:
        for a in range(1, p):
            out.append((tuple(support), tuple(a * x % p for x in vals)))
    return sorted(out)


@dataclass
class MinWeightReport:
    d: int | None
    words: list[Word]
    method: str
    complete: bool
    all_line_multiples: bool | None = None
    w_max: int | None = None
    note: str = ""

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "method": self.method,
            "complete": self.complete,
            "words": [[list(s), list(v)] for s, v in self.words],
            "all_line_multiples": self.all_line_multiples,
        }


def _sweep_cost(n: int, w: int, p: int) -> int:
    return math.comb(n, w) * (p - 1) ** w


def min_weight_sweep(code: LinearCode, w_max: int, budget: int | None = None,
                     workers: int = 1, backend: str | None = None) -> MinWeightReport:
    """Search all supports up to size w_max for codewords; stop at the first weight that has any.

    The word list is complete at the reported weight.  ``d is None`` means no
    nonzero codeword of weight <= w_max exists.
    """
    budget = default_budget() if budget is None else budget
    w_max = min(w_max, code.length)
    cost = _sweep_cost(code.length, w_max, code.p) if w_max > 0 else 0
    if cost > budget:
        raise BudgetExceeded(f"sweep to weight {w_max}", cost, budget)
    cols = code.syndrome_columns
    for w in range(1, w_max + 1):
        words = words_of_weight(cols, code.p, w, workers=workers, backend=backend)
        if words:
            return MinWeightReport(w, expand_scalars(words, code.p), "sweep", True, w_max=w_max)
    return MinWeightReport(None, [], "sweep", True, w_max=w_max, note=f"none <= {w_max}")


def codewords_of_weight(code: LinearCode, w: int, workers: int = 1, backend: str | None = None) -> list[Word]:
    """Every codeword of weight exactly w (all scalar multiples)."""
    return expand_scalars(words_of_weight(code.syndrome_columns, code.p, w, workers, backend), code.p)


def min_distance_exhaustive(code: LinearCode, budget: int | None = None,
                            chunk: int = 1 << 14) -> MinWeightReport:
    """Enumerate the whole row space (p**k words)."""
    budget = DEFAULT_EXHAUSTIVE_BUDGET if budget is None else budget
    p, k, n = code.p, code.k, code.length
    if k == 0:
        raise CodeError("zero code has no minimum distance")
    total = p**k
    if total > budget:
        raise BudgetExceeded("exhaustive enumeration", total, budget)
    G = code.rref_basis
    powers = p ** np.arange(k, dtype=np.int64)
    best, words = n + 1, []
    for start in range(1, total, chunk):
        ids = np.arange(start, min(start + chunk, total), dtype=np.int64)
        coeffs = (ids[:, None] // powers[None, :]) % p
        cw = (coeffs @ G) % p
        wt = np.count_nonzero(cw, axis=1)
        m = int(wt.min())
        if m < best:
            best, words = m, []
        if m == best:
            for row in cw[wt == best]:
                support = tuple(int(i) for i in np.flatnonzero(row))
                words.append((support, tuple(int(row[i]) for i in support)))
    return MinWeightReport(best, sorted(words), "exhaustive", True)


def _information_sets(G: np.ndarray, p: int) -> list[tuple[np.ndarray, int]]:
    """Systematic generators on pairwise disjoint (partial) information sets.

    Returns (generator, rank of the set); row operations preserve the code.
    """
    k, n = G.shape
    used: list[int] = []
    out = []
    while len(used) < n:
        unused = [c for c in range(n) if c not in set(used)]
        order = unused + used
        R, piv = rref_mod_p(G[:, order], p)
        rank_j = sum(1 for c in piv if c < len(unused))
        if rank_j == 0:
            break
        gen = np.zeros_like(R)
        gen[:, order] = R
        out.append((gen, rank_j))
        used.extend(order[c] for c in piv if c < len(unused))
    return out


def min_distance_bz(code: LinearCode, chunk: int = 4096) -> int:
    """Brouwer-Zimmermann style search with disjoint information sets.

    After all combinations of at most w generator rows have been tried for
    every systematic generator, any unseen codeword has more than
    w - (k - rank_j) nonzeros on each information set, which gives the lower
    bound; the search stops once it meets the best weight found.
    """
    p, k = code.p, code.k
    if k == 0:
        raise CodeError("zero code has no minimum distance")
    gens = _information_sets(code.rref_basis % p, p)
    upper = code.length
    for w in range(1, k + 1):
        for gen, _ in gens:
            patterns = np.array([(1,) + rest for rest in itertools.product(range(1, p), repeat=w - 1)],
                                dtype=np.int64)
            combos = itertools.combinations(range(k), w)
            while True:
                block = np.array(list(itertools.islice(combos, chunk)), dtype=np.int64)
                if block.size == 0:
                    break
                rows = gen[block]  # (M, w, n)
                for pat in patterns:
                    cw = np.tensordot(pat, rows, axes=([0], [1])) % p
                    wt = np.count_nonzero(cw, axis=1)
                    upper = min(upper, int(wt.min()))
        lower = sum(max(0, w + 1 - (k - r)) for _, r in gens)
        if lower >= upper:
            return upper
    return upper


def minimum_distance(code: LinearCode, method: str = "auto", w_max: int | None = None,
                     budget: int | None = None, workers: int = 1) -> MinWeightReport:
    """Method ladder: sweep, then exhaustive, then Brouwer-Zimmermann (distance only)."""
    budget = default_budget() if budget is None else budget
    w_max = code.length if w_max is None else w_max
    if method == "sweep":
        return min_weight_sweep(code, w_max, budget, workers)
    if method == "exhaustive":
        return min_distance_exhaustive(code, min(budget, DEFAULT_EXHAUSTIVE_BUDGET))
    if method == "bz":
        return MinWeightReport(min_distance_bz(code), [], "bz", False, note="distance only")
    if method != "auto":
        raise CodeError(f"unknown method {method!r}")
    try:
        report = min_weight_sweep(code, w_max, budget, workers)
        if report.d is not None or w_max >= code.length:
            return report
    except BudgetExceeded:
        pass
    try:
        return min_distance_exhaustive(code, min(budget, DEFAULT_EXHAUSTIVE_BUDGET))
    except BudgetExceeded:
        pass
    d = min_distance_bz(code)
    try:
        report = min_weight_sweep(code, d, budget, workers)
        report.method = "bz+sweep"
        return report
    except BudgetExceeded:
        return MinWeightReport(d, [], "bz", False, note="word list over budget")


def classify_min_words(report: MinWeightReport, IS) -> tuple[bool, list[Word]]:
    """True iff every word is a nonzero multiple of a line's incidence vector."""
    lines = {tuple(sorted(L)) for L in IS.lines}
    exceptions = [w for w in report.words
                  if w[0] not in lines or len(set(w[1])) != 1 or w[1][0] == 0]
    ok = not exceptions
    report.all_line_multiples = ok
    return ok, exceptions


def gq_code(IS) -> LinearCode:
    """The p-ary code spanned by the line incidence vectors (p = field characteristic)."""
    return code_from_matrix(IS.incidence_array(), IS.field.p)


# --- Lemma: differences of hyperplane-section cones lie in the dual ---

def dual_lemma_vector(U: Subspace, T: Subspace, r, space: ProjectiveSpace, p: int | None = None) -> np.ndarray:
    """Incidence vector of <U, r> minus that of <T, r>, indexed by the points of ``space``.

    U and T must be equidimensional subspaces of the hyperplane at infinity
    and r an affine point.
    """
    p = space.field.p if p is None else p
    if any(row[-1] for row in U.basis) or any(row[-1] for row in T.basis):
        raise CodeError("U and T must lie in the hyperplane at infinity")
    if U.proj_dim != T.proj_dim:
        raise CodeError("U and T must have the same dimension")
    if U.ambient_dim != space.N or not r[-1]:
        raise CodeError("r must be an affine point of the ambient space")
    v = np.zeros(len(space.points), dtype=np.int64)
    for x in span([U, r]).points:
        v[space.index[x]] += 1
    for x in span([T, r]).points:
        v[space.index[x]] -= 1
    return v % p


def orthogonal_to_rows(v, rows, p: int) -> bool:
    return not ((np.asarray(rows, dtype=np.int64) @ np.asarray(v, dtype=np.int64)) % p).any()


# --- classical minima of projective and affine space codes ---

@dataclass
class SpaceMinimaReport:
    n: int
    q: int
    t: int
    affine: bool
    expected: int
    d: int | None
    num_words: int
    num_blocks: int
    classified: bool
    gap_words: int | None = None
    code: LinearCode | None = dc_field(default=None, repr=False)

    @property
    def ok(self) -> bool:
        return (self.d == self.expected and self.classified
                and (self.gap_words is None or self.gap_words == 0))


def verify_pg_ag_minima(n: int, q: int, t: int, affine: bool = False, check_gap: bool | None = None,
                        budget: int | None = None, workers: int = 1) -> SpaceMinimaReport:
    """Sweep the code of points versus t-spaces (or t-flats) and compare with the closed forms.

    The affine check also counts words of weight q^t + 1, which must be absent.
    """
    F = field_of_order(q)
    inc = incidence_matrix_spaces(F, n, t, affine=affine)
    code = code_from_matrix(inc.matrix, F.p)
    expected = q**t if affine else (q ** (t + 1) - 1) // (q - 1)
    rep = min_weight_sweep(code, expected, budget, workers)
    blocks = {tuple(np.flatnonzero(row).tolist()) for row in inc.matrix}
    classified = (rep.d == expected and all(s in blocks and len(set(v)) == 1 for s, v in rep.words)
                  and len(rep.words) == (F.p - 1) * len(blocks))
    gap = None
    if affine if check_gap is None else check_gap:
        gap = len(codewords_of_weight(code, expected + 1, workers))
    return SpaceMinimaReport(n, q, t, affine, expected, rep.d, len(rep.words), len(blocks),
                             classified, gap, code)


def in_code(code: LinearCode, v) -> bool:
    """Membership via the RREF generator (independent of the parity checks)."""
    return in_row_space(code.rref_basis, code.pivots, v, code.p)
