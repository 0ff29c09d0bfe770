"""Eggs of PG(2n+m-1, q): construction by field reduction, verification, file I/O."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field as dc_field
from pathlib import Path

from .gf import Field, field_create
from .pgeom import (
    FieldReduction,
    GeometryError,
    Subspace,
    is_arc,
    rank,
    tangent_hyperplanes,
)


class EggError(ValueError):
    pass


@dataclass
class Egg:
    n: int
    m: int
    field: Field
    elements: list[Subspace]
    tangents: list[Subspace]
    source: str = "file"

    @property
    def ambient_dim(self) -> int:
        return 2 * self.n + self.m - 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, Egg):
            return NotImplemented
        return (self.n, self.m, self.field) == (other.n, other.m, other.field) and set(
            zip(self.elements, self.tangents)) == set(zip(other.elements, other.tangents))

    def to_json(self) -> dict:
        F = self.field
        return {
            "p": F.p, "h": F.h, "n": self.n, "m": self.m,
            "modulus": list(F.modulus),
            "elements": [e.to_json() for e in self.elements],
            "tangents": [t.to_json() for t in self.tangents],
        }


@dataclass
class AxiomCheck:
    name: str
    passed: bool
    witness: tuple | None = None
    detail: str = ""


@dataclass
class EggReport:
    checks: list[AxiomCheck] = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[AxiomCheck]:
        return [c for c in self.checks if not c.passed]


def verify_egg(egg: Egg) -> EggReport:
    """Check cardinality, element dimension, the triple-span condition and tangent spaces."""
    n, m, q = egg.n, egg.m, egg.field.q
    F = egg.field
    N = egg.ambient_dim
    report = EggReport()

    want = q**m + 1
    report.checks.append(AxiomCheck(
        "cardinality", len(egg.elements) == want,
        None if len(egg.elements) == want else (len(egg.elements),),
        f"expected {want} elements"))

    bad = next((i for i, e in enumerate(egg.elements)
                if e.proj_dim != n - 1 or e.ambient_dim != N), None)
    report.checks.append(AxiomCheck(
        "element_dimension", bad is None, None if bad is None else (bad,),
        f"every element must be an ({n - 1})-space of PG({N},{q})"))

    witness = None
    for i, j, k in itertools.combinations(range(len(egg.elements)), 3):
        rows = [*egg.elements[i].basis, *egg.elements[j].basis, *egg.elements[k].basis]
        if rank(rows, F) != 3 * n:
            witness = (i, j, k)
            break
    report.checks.append(AxiomCheck(
        "triple_span", witness is None, witness,
        f"any three elements span a ({3 * n - 1})-space"))

    witness = None
    if len(egg.tangents) != len(egg.elements):
        witness = ("count", len(egg.tangents))
    else:
        for i, (E, T) in enumerate(zip(egg.elements, egg.tangents)):
            if T.proj_dim != n + m - 1 or not T.contains(E):
                witness = (i, i)
                break
            j = next((j for j, G in enumerate(egg.elements)
                      if j != i and T.meet_dim(G) >= 0), None)
            if j is not None:
                witness = (i, j)
                break
    report.checks.append(AxiomCheck(
        "tangent_spaces", witness is None, witness,
        f"T_E is an ({n + m - 1})-space containing E and missing the other elements"))
    return report


def elementary_egg_from_oval(oval, big: Field, base: Field) -> Egg:
    """Field-reduce an oval of PG(2, q^n) to an egg E_{n,n} of PG(3n-1, q)."""
    oval = list(oval)
    if len(oval) != big.q + 1:
        raise EggError(f"an oval of PG(2,{big.q}) has {big.q + 1} points, got {len(oval)}")
    if not is_arc(oval, big):
        raise EggError("input has three collinear points")
    try:
        tangents = tangent_hyperplanes(oval, big, 2)
    except GeometryError as exc:
        raise EggError(f"not an oval: {exc}") from exc
    return _reduce(oval, tangents, big, base, ratio=1, source="oval")


def elementary_egg_from_ovoid(ovoid, big: Field, base: Field) -> Egg:
    """Field-reduce an ovoid of PG(3, q^n) to an egg E_{n,2n} of PG(4n-1, q)."""
    ovoid = list(ovoid)
    if len(ovoid) != big.q**2 + 1:
        raise EggError(f"an ovoid of PG(3,{big.q}) has {big.q**2 + 1} points, got {len(ovoid)}")
    if not is_arc(ovoid, big):
        raise EggError("input has three collinear points")
    try:
        tangents = tangent_hyperplanes(ovoid, big, 3)
    except GeometryError as exc:
        raise EggError(f"not an ovoid: {exc}") from exc
    return _reduce(ovoid, tangents, big, base, ratio=2, source="ovoid")


def _reduce(pts, tangents, big: Field, base: Field, ratio: int, source: str) -> Egg:
    fr = FieldReduction(big, base)
    n = fr.e
    elements = [fr.reduce_point(P) for P in pts]
    tans = [fr.reduce_subspace(tangents[P]) for P in pts]
    return Egg(n=n, m=ratio * n, field=base, elements=elements, tangents=tans, source=source)


def save_egg(egg: Egg, path) -> None:
    Path(path).write_text(json.dumps(egg.to_json()) + "\n")


def egg_from_json(data: dict) -> Egg:
    try:
        F = field_create(int(data["p"]), int(data["h"]))
        if "modulus" in data and tuple(data["modulus"]) != F.modulus:
            F = Field(F.p, F.h, data["modulus"])
        elements = [Subspace.from_json(rows, F) for rows in data["elements"]]
        tangents = [Subspace.from_json(rows, F) for rows in data["tangents"]]
        return Egg(n=int(data["n"]), m=int(data["m"]), field=F,
                   elements=elements, tangents=tangents)
    except (KeyError, TypeError, ValueError) as exc:
        raise EggError(f"malformed egg file: {exc}") from exc


def load_egg(path, strict: bool = False) -> tuple[Egg, EggReport]:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise EggError(f"cannot parse {path}: {exc}") from exc
    egg = egg_from_json(data)
    report = verify_egg(egg)
    if strict and not report.passed:
        names = ", ".join(c.name for c in report.failures())
        raise EggError(f"egg fails: {names}")
    return egg, report
