"""Repair degree and repair availability of the dual of a GQ code.

The locally repairable code is C = (code of the GQ)^perp, so the parity
checks that repair symbol i are the GQ codewords with a nonzero entry at i.
Only checks of weight <= r + 1 are ever materialised; they come out of the
weight sweep.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .codes import BudgetExceeded, LinearCode, Word, _sweep_cost, codewords_of_weight, default_budget


class RepairError(RuntimeError):
    pass


@dataclass
class RepairProfile:
    r_i: list[int]
    a_i: list[int]
    p: int
    s: int | None = None
    t: int | None = None
    kind: str = ""
    words: list[Word] = dc_field(default_factory=list, repr=False)
    notes: list[str] = dc_field(default_factory=list)

    @property
    def r(self) -> int:
        return max(self.r_i)

    @property
    def a(self) -> int:
        return min(self.a_i)

    def to_json(self) -> dict:
        bounds = check_bounds(self)
        return {
            "gq": {"kind": self.kind, "p": self.p, "s": self.s, "t": self.t},
            "r": self.r,
            "a": self.a,
            "tight_r": bounds.tight_r,
            "tight_a": bounds.tight_a,
            "per_symbol": [{"i": i, "r_i": r, "a_i": a}
                           for i, (r, a) in enumerate(zip(self.r_i, self.a_i))],
        }


def _covers(word: Word, i: int) -> bool:
    return i in word[0]


def omega_min(words: list[Word], i: int) -> list[Word]:
    """Checks in ``words`` (all of one weight) with a nonzero entry at position i."""
    return [w for w in words if _covers(w, i)]


def repair_profile(code: LinearCode, IS=None, budget: int | None = None,
                   workers: int = 1) -> RepairProfile:
    """Sweep weights upward until every position is covered by some GQ codeword."""
    budget = default_budget() if budget is None else budget
    n, p = code.length, code.p
    r_i: list[int | None] = [None] * n
    found: list[Word] = []
    for w in range(1, n + 1):
        cost = _sweep_cost(n, w, p)
        if cost > budget:
            raise BudgetExceeded(f"repair sweep at weight {w}", cost, budget)
        words = codewords_of_weight(code, w, workers)
        found.extend(words)
        for support, _ in words:
            for i in support:
                if r_i[i] is None:
                    r_i[i] = w - 1
        if all(x is not None for x in r_i):
            break
    missing = [i for i, x in enumerate(r_i) if x is None]
    if missing:
        raise RepairError(f"positions {missing[:5]} are zero in every codeword (unrepairable)")

    r = max(r_i)
    a_i = [0] * n
    for support, _ in found:
        if len(support) <= r + 1:
            for i in support:
                a_i[i] += 1

    prof = RepairProfile(r_i=r_i, a_i=a_i, p=p, words=found)
    if IS is not None:
        prof.kind = IS.kind
        if IS.params is not None:
            prof.s, prof.t = IS.params[0], IS.params[1]
    low = sum(1 for x in r_i if x < r)
    if low:
        prof.notes.append(f"{low} positions have r_i < r; availability counts weight <= r+1")
    return prof


def repair_degree(profile: RepairProfile) -> tuple[list[int], int]:
    return profile.r_i, profile.r


def repair_availability(profile: RepairProfile) -> tuple[list[int], int]:
    return profile.a_i, profile.a


@dataclass
class BoundsReport:
    r: int
    a: int
    s: int
    t: int
    p: int
    r_le_s: bool
    a_ge_t1: bool
    tight_r: bool
    tight_a: bool
    matches_expected: bool
    ok: bool
    violations: list[str] = dc_field(default_factory=list)

    def summary(self) -> str:
        expect_a = (self.p - 1) * (self.t + 1)
        return (f"r={self.r} (s={self.s}, {'tight' if self.tight_r else 'not tight'}), "
                f"a={self.a} (t+1={self.t + 1}, {'tight' if self.tight_a else 'not tight'}; "
                f"(p-1)(t+1)={expect_a}) -> {'matches' if self.matches_expected else 'DIFFERS from'} "
                f"r=s, a=(p-1)(t+1)")


def check_bounds(profile: RepairProfile) -> BoundsReport:
    """r <= s and a >= t+1; the availability bound is binding only for p = 2."""
    if profile.s is None or profile.t is None:
        raise RepairError("profile lacks GQ parameters (s, t)")
    s, t, p = profile.s, profile.t, profile.p
    r, a = profile.r, profile.a
    violations = []
    if r > s:
        violations.append(f"r={r} > s={s}")
    if a < t + 1:
        msg = f"a={a} < t+1={t + 1}"
        violations.append(msg if p == 2 else msg + " (informational, p > 2)")
    hard = [v for v in violations if "informational" not in v]
    return BoundsReport(
        r=r, a=a, s=s, t=t, p=p,
        r_le_s=r <= s, a_ge_t1=a >= t + 1,
        tight_r=r == s, tight_a=a == t + 1,
        matches_expected=(r == s and a == (p - 1) * (t + 1)),
        ok=not hard, violations=violations,
    )
