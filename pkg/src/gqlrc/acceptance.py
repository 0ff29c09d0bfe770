"""Acceptance checks shared by ``gqlrc selftest`` and the test suite.

Each check returns a :class:`CheckResult`; a check whose work would exceed
the candidate budget reports status ``"budget"`` instead of failing.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

import numpy as np

from . import formats
from .codes import (
    BudgetExceeded,
    classify_min_words,
    code_from_matrix,
    dual_lemma_vector,
    gq_code,
    min_distance_bz,
    min_distance_exhaustive,
    min_weight_sweep,
    orthogonal_to_rows,
    verify_pg_ag_minima,
)
from .egg import elementary_egg_from_oval, verify_egg
from .gf import field_create
from .gq import build_gq, incidence_matrix, verify_partial_geometry
from .lrc import check_bounds, repair_profile
from .pgeom import (
    ProjectiveSpace,
    conic,
    embed_subspace,
    incidence_matrix_spaces,
    random_subspace,
    span,
)

EXHAUSTIVE_CAP = 2**22


@dataclass
class CheckResult:
    id: str
    title: str
    passed: bool
    status: str  # pass | fail | budget
    elapsed: float
    limit: float | None
    failures: list[str] = dc_field(default_factory=list)
    info: dict = dc_field(default_factory=dict)

    def line(self) -> str:
        lim = f" (limit {self.limit:g}s)" if self.limit else ""
        head = f"[{self.status.upper():6}] {self.id:<10} {self.title} {self.elapsed:.2f}s{lim}"
        return head + "".join(f"\n    - {f}" for f in self.failures)


class _Collector:
    def __init__(self):
        self.failures: list[str] = []
        self.info: dict = {}

    def expect(self, label: str, actual, expected) -> None:
        self.info[label] = actual
        if actual != expected:
            self.failures.append(f"{label}: expected {expected!r}, got {actual!r}")

    def require(self, label: str, cond: bool, detail: str = "") -> None:
        if not cond:
            self.failures.append(f"{label} failed {detail}".rstrip())


def _run(cid: str, title: str, limit: float | None, body, budget: int | None) -> CheckResult:
    col = _Collector()
    t0 = time.perf_counter()
    try:
        body(col, budget)
    except BudgetExceeded as exc:
        return CheckResult(cid, title, False, "budget", time.perf_counter() - t0, limit, [str(exc)], col.info)
    elapsed = time.perf_counter() - t0
    if limit is not None and elapsed > limit:
        col.failures.append(f"runtime {elapsed:.2f}s exceeds {limit:g}s")
    ok = not col.failures
    return CheckResult(cid, title, ok, "pass" if ok else "fail", elapsed, limit, col.failures, col.info)


# --- GQ instances (criteria 1-6) ---

@dataclass(frozen=True)
class Instance:
    id: str
    title: str
    kind: str
    q: int
    n: int
    points: int
    lines: int
    order: tuple[int, int]
    d: int
    words: int
    r: int
    a: int
    limit: float


INSTANCES = [
    Instance("q4-2", "Q(4,2) as T(E), conic egg", "te-conic", 2, 1, 15, 15, (2, 2), 3, 15, 2, 3, 1.0),
    Instance("q4-3", "Q(4,3) as T(E), conic egg", "te-conic", 3, 1, 40, 40, (3, 3), 4, 80, 3, 8, 30.0),
    Instance("q5-2", "Q(5,2) as T(E), elliptic-quadric egg", "te-ovoid", 2, 1, 27, 45, (2, 4), 3, 45, 2, 5, 5.0),
    Instance("t2star-4", "T2*(O), hyperoval in PG(2,4)", "t2star", 4, 1, 64, 96, (3, 5), 4, 96, 3, 6, 120.0),
    Instance("te-oval-4", "T(E), oval of PG(2,4) reduced to PG(5,2)", "te-conic", 2, 2, 85, 85, (4, 4), 5, 85, 4, 5, 300.0),
    Instance("h3-4", "H(3,4)", "h3", 4, 1, 45, 27, (4, 2), 5, 27, 4, 3, 60.0),
    Instance("w3-2", "W(3,2)", "w3", 2, 1, 15, 15, (2, 2), 3, 15, 2, 3, 1.0),
]
BY_ID = {inst.id: inst for inst in INSTANCES}


@lru_cache(maxsize=None)
def _structure(kind: str, q: int, n: int):
    return build_gq(kind, q, n)


def _instance_body(inst: Instance, workers: int):
    def body(c: _Collector, budget):
        if inst.id == "te-oval-4":
            big, base = field_create(2, 2), field_create(2, 1)
            egg = elementary_egg_from_oval(conic(big), big, base)
            rep = verify_egg(egg)
            c.expect("egg axioms passed", [ch.name for ch in rep.checks if ch.passed],
                     ["cardinality", "element_dimension", "triple_span", "tangent_spaces"])
        IS = build_gq(inst.kind, inst.q, inst.n)
        geo = verify_partial_geometry(IS)
        c.expect("points", IS.num_points, inst.points)
        c.expect("lines", IS.num_lines, inst.lines)
        c.expect("(s,t,alpha)", (geo.s, geo.t, geo.alpha), inst.order + (1,))
        code = gq_code(IS)
        c.info["k"] = code.k
        s = inst.order[0]
        rep = min_weight_sweep(code, s + 1, budget, workers)
        c.expect("d", rep.d, inst.d)
        c.expect("d = s+1", rep.d, s + 1)
        c.expect("minimum words", len(rep.words), inst.words)
        ok, exceptions = classify_min_words(rep, IS)
        c.require("all minimum words are line multiples", ok, f"({len(exceptions)} exceptions)")
        prof = repair_profile(code, IS, budget, workers)
        c.expect("r", prof.r, inst.r)
        c.expect("a", prof.a, inst.a)
        c.require("uniform r_i", len(set(prof.r_i)) == 1)
        c.require("uniform a_i", len(set(prof.a_i)) == 1)
    return body


# --- criterion 7 ---

def _space_minima_body(c: _Collector, budget):
    cases = [
        ("PG(2,2) t=1", 2, 2, 1, False, 3),
        ("AG(3,2) t=1", 3, 2, 1, True, 2),
        ("AG(2,3) t=1", 2, 3, 1, True, 3),
    ]
    for label, n, q, t, affine, want in cases:
        rep = verify_pg_ag_minima(n, q, t, affine=affine, budget=budget)
        c.expect(f"{label} d", rep.d, want)
        c.require(f"{label} minimum words are t-space multiples", rep.classified)
        if affine:
            c.expect(f"{label} words of weight q^t+1", rep.gap_words, 0)


# --- criterion 8 ---

def lemma_trials(N: int, dim_ut: int, n: int, trials: int, seed: int):
    """(pass count, trials) for random (U, T, r) in PG(N, 2) against all n-spaces."""
    F = field_create(2, 1)
    space = ProjectiveSpace(F, N)
    rows = incidence_matrix_spaces(F, N, n).matrix
    rng = np.random.default_rng(seed)
    hinf = space.h_infinity
    good = 0
    for _ in range(trials):
        U = random_subspace(space, dim_ut, rng, within=hinf)
        T = random_subspace(space, dim_ut, rng, within=hinf)
        r = space.affine_points[rng.integers(len(space.affine_points))]
        v = dual_lemma_vector(U, T, r, space)
        good += orthogonal_to_rows(v, rows, F.p)
    return good, trials


def egg_pair_trials(trials: int, seed: int):
    """a = <T_E, r>, b = <E, F, r> for the conic egg of PG(2,2), ambient PG(3,2)."""
    F = field_create(2, 1)
    egg = elementary_egg_from_oval(conic(F), F, F)
    space = ProjectiveSpace(F, 3)
    rows = incidence_matrix_spaces(F, 3, 1).matrix
    rng = np.random.default_rng(seed)
    good = 0
    for _ in range(trials):
        i, j = rng.choice(len(egg.elements), size=2, replace=False)
        E, G = embed_subspace(egg.elements[i]), embed_subspace(egg.elements[j])
        TE = embed_subspace(egg.tangents[i])
        r = space.affine_points[rng.integers(len(space.affine_points))]
        v = dual_lemma_vector(TE, span([E, G]), r, space)
        good += orthogonal_to_rows(v, rows, F.p)
    return good, trials


def _lemma_body(seed: int):
    def body(c: _Collector, budget):
        c.expect("PG(3,2) n=m=1", lemma_trials(3, 1, 1, 100, seed), (100, 100))
        c.expect("PG(4,2) n=1,m=2", lemma_trials(4, 2, 1, 100, seed + 1), (100, 100))
        c.expect("<E,F,r> variant", egg_pair_trials(100, seed + 2), (100, 100))
    return body


# --- criterion 9 ---

def _bounds_body(workers: int):
    def body(c: _Collector, budget):
        for inst in INSTANCES:
            IS = _structure(inst.kind, inst.q, inst.n)
            prof = repair_profile(gq_code(IS), IS, budget, workers)
            b = check_bounds(prof)
            c.info[inst.id] = b.summary()
            c.require(f"{inst.id} r <= s", b.r_le_s)
            if prof.p == 2:
                c.require(f"{inst.id} a >= t+1", b.a_ge_t1)
                c.require(f"{inst.id} tight r = s", b.tight_r)
                c.require(f"{inst.id} tight a = t+1", b.tight_a)
            else:
                c.expect(f"{inst.id} a", b.a, (b.p - 1) * (b.t + 1))
                c.expect(f"{inst.id} a tight", b.tight_a, False)
                c.require(f"{inst.id} a > t+1", b.a > b.t + 1)
    return body


# --- criterion 10 ---

def _agreement_body(workers: int):
    def body(c: _Collector, budget):
        fano = code_from_matrix(incidence_matrix_spaces(field_create(2, 1), 2, 1).matrix, 2)
        codes = [("fano", fano, None)] + [
            (inst.id, gq_code(_structure(inst.kind, inst.q, inst.n)), inst)
            for inst in INSTANCES]
        for name, code, inst in codes:
            ds = {"sweep": min_weight_sweep(code, code.length if inst is None else inst.d, budget, workers).d,
                  "bz": min_distance_bz(code)}
            if code.p ** code.k <= EXHAUSTIVE_CAP:
                ds["exhaustive"] = min_distance_exhaustive(code).d
            c.info[name] = ds
            c.require(f"{name} methods agree", len(set(ds.values())) == 1, str(ds))
        mats = [("fano", fano.gen_rows)] + [
            (inst.id, incidence_matrix(_structure(inst.kind, inst.q, inst.n)).N) for inst in INSTANCES]
        for name, M in mats:
            text = formats.to_alist(M)
            back = formats.from_alist(text)
            c.require(f"{name} alist round trip", formats.to_alist(back) == text and
                      np.array_equal(back, M))
    return body


def all_checks(workers: int = 1, seed: int = 2024) -> list[tuple[str, str, float | None, object]]:
    checks = [(inst.id, inst.title, inst.limit, _instance_body(inst, workers)) for inst in INSTANCES]
    checks += [
        ("minima", "PG/AG point-flat code minima and weight gap", 10.0, _space_minima_body),
        ("lemma", "dual-code differences of cones, 3 x 100 seeded trials", 10.0, _lemma_body(seed)),
        ("bounds", "LRC bound tightness on all instances", None, _bounds_body(workers)),
        ("agreement", "sweep / exhaustive / BZ agreement and alist round trip", None, _agreement_body(workers)),
    ]
    return checks


def run_checks(only: list[str] | None = None, budget: int | None = None, workers: int = 1,
               seed: int = 2024) -> list[CheckResult]:
    results = []
    for cid, title, limit, body in all_checks(workers, seed):
        if only and cid not in only:
            continue
        results.append(_run(cid, title, limit, body, budget))
    return results
