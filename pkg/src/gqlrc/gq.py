"""Generalised quadrangles: T(E), T2*(O) and the classical families.

Every builder returns an :class:`IncidenceStructure` whose points and lines
are indexed deterministically.  T(E) is laid out in block order: type (i)
points, then type (ii), then (oo); type (a) lines before type (b).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from pathlib import Path

import numpy as np

from .egg import Egg, EggError, elementary_egg_from_oval, elementary_egg_from_ovoid, load_egg, verify_egg
from .gf import Field, field_create, field_of_order
from .pgeom import (
    GeometryError,
    ProjectiveSpace,
    conic,
    elliptic_quadric,
    embed_point,
    embed_subspace,
    hermitian_form,
    hermitian_variety,
    hyperoval,
    irreducible_quadratic,
    is_arc,
    isotropic_lines,
    span,
    sqrt_order,
    symplectic_form,
)

KINDS = ("w3", "q4", "q5", "h3", "h4", "t2star", "te-conic", "te-ovoid", "egg-file")


class StructureError(ValueError):
    pass


@dataclass
class IncidenceStructure:
    kind: str
    field: Field
    point_types: list[str]
    lines: list[tuple[int, ...]]
    line_types: list[str]
    point_labels: list = dc_field(default_factory=list)
    params: tuple[int, int, int] | None = None
    meta: dict = dc_field(default_factory=dict)

    @property
    def num_points(self) -> int:
        return len(self.point_types)

    @property
    def num_lines(self) -> int:
        return len(self.lines)

    @cached_property
    def lines_through(self) -> list[list[int]]:
        out = [[] for _ in range(self.num_points)]
        for j, pts in enumerate(self.lines):
            for i in pts:
                out[i].append(j)
        return out

    def incidence_array(self) -> np.ndarray:
        N = np.zeros((self.num_lines, self.num_points), dtype=np.uint8)
        for j, pts in enumerate(self.lines):
            N[j, list(pts)] = 1
        return N

    @property
    def order(self) -> tuple[int, int]:
        if self.params is None:
            raise StructureError("parameters not verified")
        return self.params[0], self.params[1]

    def to_json(self) -> dict:
        out = {"kind": self.kind, "field": self.field.header()}
        if self.params is not None:
            s, t, a = self.params
            out["params"] = {"s": s, "t": t, "alpha": a}
        out["points"] = [{"id": i, "type": ty} for i, ty in enumerate(self.point_types)]
        out["lines"] = [{"id": j, "type": ty, "points": list(pts)}
                        for j, (ty, pts) in enumerate(zip(self.line_types, self.lines))]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "IncidenceStructure":
        fh = data["field"]
        F = field_create(fh["p"], fh["h"])
        if tuple(fh.get("modulus", F.modulus)) != F.modulus:
            F = Field(fh["p"], fh["h"], fh["modulus"])
        params = None
        if "params" in data:
            pr = data["params"]
            params = (pr["s"], pr["t"], pr["alpha"])
        pts = sorted(data["points"], key=lambda d: d["id"])
        lines = sorted(data["lines"], key=lambda d: d["id"])
        return cls(kind=data.get("kind", "file"), field=F,
                   point_types=[d["type"] for d in pts],
                   lines=[tuple(sorted(d["points"])) for d in lines],
                   line_types=[d["type"] for d in lines], params=params)


def save_structure(IS: IncidenceStructure, path) -> None:
    Path(path).write_text(json.dumps(IS.to_json()) + "\n")


def load_structure(path) -> IncidenceStructure:
    return IncidenceStructure.from_json(json.loads(Path(path).read_text()))


# --- partial geometry axioms ---

@dataclass
class GeometryCheck:
    ok: bool
    s: int | None = None
    t: int | None = None
    alpha: int | None = None
    failed_axiom: int | None = None
    witness: tuple | None = None

    @property
    def is_gq(self) -> bool:
        return self.ok and self.alpha == 1


def verify_partial_geometry(IS: IncidenceStructure) -> GeometryCheck:
    """Exhaustive check of the four partial-geometry axioms.

    Sets ``IS.params`` when all axioms hold.
    """
    N = IS.incidence_array().astype(np.int64)
    L, P = N.shape
    if L == 0 or P == 0:
        return GeometryCheck(False, failed_axiom=2, witness=())

    meet = N @ N.T
    np.fill_diagonal(meet, 0)
    if meet.max() > 1:
        a, b = map(int, np.argwhere(meet > 1)[0])
        shared = tuple(int(x) for x in np.flatnonzero(N[a] & N[b])[:2])
        return GeometryCheck(False, failed_axiom=1, witness=(a, b) + shared)

    sizes = N.sum(axis=1)
    if (sizes != sizes[0]).any():
        return GeometryCheck(False, failed_axiom=2, witness=(int(np.flatnonzero(sizes != sizes[0])[0]),))
    degrees = N.sum(axis=0)
    if (degrees != degrees[0]).any():
        return GeometryCheck(False, failed_axiom=3, witness=(int(np.flatnonzero(degrees != degrees[0])[0]),))

    coll = (N.T @ N) > 0
    np.fill_diagonal(coll, False)
    # transversals from P to L = points of L collinear with P
    counts = N @ coll.astype(np.int64)
    outside = N == 0
    if not outside.any():
        return GeometryCheck(False, failed_axiom=4, witness=())
    vals = counts[outside]
    alpha = int(vals[0])
    if (vals != alpha).any():
        line, pt = map(int, np.argwhere(outside & (counts != alpha))[0])
        return GeometryCheck(False, failed_axiom=4, witness=(pt, line))

    s, t = int(sizes[0]) - 1, int(degrees[0]) - 1
    IS.params = (s, t, alpha)
    return GeometryCheck(True, s, t, alpha)


# --- T(E) ---

def build_TE(egg: Egg, verify: bool = True) -> IncidenceStructure:
    if verify:
        report = verify_egg(egg)
        if not report.passed:
            raise EggError("egg fails " + ", ".join(c.name for c in report.failures()))
    F = egg.field
    pi = ProjectiveSpace(F, egg.ambient_dim + 1)
    affine = pi.affine_points
    aff_index = {pt: i for i, pt in enumerate(affine)}
    elements = [embed_subspace(E) for E in egg.elements]
    tangents = [embed_subspace(T) for T in egg.tangents]

    point_types = ["i"] * len(affine)
    point_labels: list = list(affine)
    # type (ii): span(T_E, r) partitions the affine points for each E
    owner = []  # owner[j][affine idx] -> point idx of the type (ii) point
    for j, T in enumerate(tangents):
        own = [None] * len(affine)
        for r, pt in enumerate(affine):
            if own[r] is not None:
                continue
            S = span([T, pt])
            idx = len(point_types)
            point_types.append("ii")
            point_labels.append(("ii", j, S.basis))
            for x in S.points:
                if x[-1]:
                    own[aff_index[x]] = idx
        owner.append(own)
    infinity = len(point_types)
    point_types.append("oo")
    point_labels.append("oo")

    lines, line_types = [], []
    for j, E in enumerate(elements):
        seen = [False] * len(affine)
        for r, pt in enumerate(affine):
            if seen[r]:
                continue
            Lsp = span([E, pt])
            on = []
            for x in Lsp.points:
                if x[-1]:
                    k = aff_index[x]
                    seen[k] = True
                    on.append(k)
            on.append(owner[j][r])
            lines.append(tuple(sorted(on)))
            line_types.append("a")
    for j in range(len(elements)):
        on = sorted({owner[j][r] for r in range(len(affine))}) + [infinity]
        lines.append(tuple(on))
        line_types.append("b")

    q = F.q
    return IncidenceStructure(
        kind="te", field=F, point_types=point_types, lines=lines, line_types=line_types,
        point_labels=point_labels,
        meta={"n": egg.n, "m": egg.m, "q": q, "expected_order": (q**egg.n, q**egg.m),
              "source": egg.source})


def te_conic(q: int, n: int = 1) -> IncidenceStructure:
    """T(E) for the egg obtained by field-reducing the conic of PG(2, q^n) to GF(q)."""
    base = field_of_order(q)
    big = field_create(base.p, base.h * n)
    IS = build_TE(elementary_egg_from_oval(conic(big), big, base))
    IS.kind = "te-conic"
    return IS


def te_ovoid(q: int, n: int = 1) -> IncidenceStructure:
    base = field_of_order(q)
    big = field_create(base.p, base.h * n)
    IS = build_TE(elementary_egg_from_ovoid(elliptic_quadric(big), big, base))
    IS.kind = "te-ovoid"
    return IS


# --- T2*(O) ---

def build_T2star(O, F: Field) -> IncidenceStructure:
    q = F.q
    if F.p != 2:
        raise StructureError(f"T2*(O) needs q even, got q={q}")
    O = list(O)
    if len(O) != q + 2 or not is_arc(O, F):
        raise StructureError("O is not a hyperoval")
    pi = ProjectiveSpace(F, 3)
    affine = pi.affine_points
    aff_index = {pt: i for i, pt in enumerate(affine)}
    lines = []
    for o in O:
        o3 = embed_point(o)
        seen = [False] * len(affine)
        for r, pt in enumerate(affine):
            if seen[r]:
                continue
            on = []
            for x in span([o3, pt], F).points:
                if x[-1]:
                    k = aff_index[x]
                    seen[k] = True
                    on.append(k)
            lines.append(tuple(sorted(on)))
    return IncidenceStructure(
        kind="t2star", field=F, point_types=["affine"] * len(affine), lines=lines,
        line_types=["line"] * len(lines), point_labels=list(affine),
        meta={"q": q, "expected_order": (q - 1, q + 1)})


def t2star(q: int) -> IncidenceStructure:
    F = field_of_order(q)
    if F.p != 2:
        raise StructureError(f"no hyperovals for q odd (q={q})")
    return build_T2star(hyperoval(F), F)


# --- classical GQs ---

def _polar(Q, F: Field):
    def B(x, y):
        s = tuple(F.add(a, b) for a, b in zip(x, y))
        return F.sub(F.sub(Q(s), Q(x)), Q(y))
    return B


def _q4_form(F: Field):
    def Q(x):
        return F.add(F.add(F.mul(x[0], x[0]), F.mul(x[1], x[2])), F.mul(x[3], x[4]))
    return Q


def _q5_form(F: Field):
    b, c = irreducible_quadratic(F)

    def Q(x):
        f = F.add(F.add(F.mul(x[4], x[4]), F.mul(b, F.mul(x[4], x[5]))), F.mul(c, F.mul(x[5], x[5])))
        return F.add(F.add(F.mul(x[0], x[1]), F.mul(x[2], x[3])), f)
    return Q


def build_classical(kind: str, F: Field) -> IncidenceStructure:
    """W(3,q), Q(4,q), Q(5,q), H(3,q^2), H(4,q^2) from their forms.

    For H3/H4 ``F`` is GF(q^2).
    """
    kind = kind.lower()
    if kind == "w3":
        pts = ProjectiveSpace(F, 3).points
        B = symplectic_form(F)
        q = F.q
        order = (q, q)
    elif kind in ("q4", "q5"):
        N = 4 if kind == "q4" else 5
        Q = _q4_form(F) if kind == "q4" else _q5_form(F)
        pts = [x for x in ProjectiveSpace(F, N).points if Q(x) == 0]
        B = _polar(Q, F)
        q = F.q
        order = (q, q) if kind == "q4" else (q, q * q)
    elif kind in ("h3", "h4"):
        try:
            q = sqrt_order(F)
        except GeometryError as exc:
            raise StructureError(str(exc)) from exc
        N = 3 if kind == "h3" else 4
        pts = hermitian_variety(F, N)
        B = hermitian_form(F)
        order = (q * q, q) if kind == "h3" else (q * q, q**3)
    else:
        raise StructureError(f"unknown classical kind {kind!r}")
    index = {pt: i for i, pt in enumerate(pts)}
    lines = [tuple(sorted(index[x] for x in L.points)) for L in isotropic_lines(pts, B, F)]
    return IncidenceStructure(
        kind=kind, field=F, point_types=["point"] * len(pts), lines=lines,
        line_types=["line"] * len(lines), point_labels=list(pts),
        meta={"q": q, "expected_order": order})


# --- incidence matrix with block layout ---

@dataclass
class BlockMatrix:
    N: np.ndarray
    row_blocks: dict[str, slice] = dc_field(default_factory=dict)
    col_blocks: dict[str, slice] = dc_field(default_factory=dict)

    def block(self, name: str) -> np.ndarray:
        rows, cols = {
            "A": ("a", "i"), "B": ("a", "ii"), "0": ("a", "oo"),
            "O": ("b", "i"), "D": ("b", "ii"), "1": ("b", "oo"),
        }[name]
        return self.N[self.row_blocks[rows], self.col_blocks[cols]]

    def check_block_properties(self, s: int) -> dict[str, bool]:
        """Row-weight and support properties of N = [[A, B, 0], [O, D, 1]] (s = q^n)."""
        A, B, D = self.block("A"), self.block("B"), self.block("D")
        supports_disjoint = bool((D.sum(axis=0) <= 1).all())
        return {
            "A_rows_weight_s": bool((A.sum(axis=1) == s).all()),
            "B_rows_weight_1": bool((B.sum(axis=1) == 1).all()),
            "D_rows_weight_s": bool((D.sum(axis=1) == s).all()),
            "D_rows_disjoint": supports_disjoint,
            "D_rows_partition": supports_disjoint and bool((D.sum(axis=0) == 1).all()),
            "O_zero": not self.block("O").any(),
            "last_column": (not self.block("0").any()) and bool(self.block("1").all()),
        }


def incidence_matrix(IS: IncidenceStructure, ordering: str = "canonical") -> BlockMatrix:
    """Rows are lines and columns are points, in the structure's index order."""
    N = IS.incidence_array()
    if ordering == "canonical":
        return BlockMatrix(N)
    if ordering != "te_block":
        raise StructureError(f"unknown ordering {ordering!r}")
    if not IS.kind.startswith("te") and IS.kind != "egg-file":
        raise StructureError("te_block ordering needs a T(E) structure")
    rows = {ty: IS.line_types.count(ty) for ty in ("a", "b")}
    cols = {ty: IS.point_types.count(ty) for ty in ("i", "ii", "oo")}
    if IS.line_types != ["a"] * rows["a"] + ["b"] * rows["b"] or IS.point_types != (
            ["i"] * cols["i"] + ["ii"] * cols["ii"] + ["oo"] * cols["oo"]):
        raise StructureError("structure is not in T(E) block order")
    ra = rows["a"]
    ci, cii = cols["i"], cols["ii"]
    return BlockMatrix(
        N,
        row_blocks={"a": slice(0, ra), "b": slice(ra, ra + rows["b"])},
        col_blocks={"i": slice(0, ci), "ii": slice(ci, ci + cii), "oo": slice(ci + cii, ci + cii + 1)},
    )


# --- descriptors ---

def build_gq(kind: str, q: int | None = None, n: int = 1, egg_file=None,
             strict: bool = False, verify: bool = True) -> IncidenceStructure:
    """Construct a GQ from a command-line style descriptor and verify its axioms."""
    kind = kind.lower()
    if kind == "egg-file":
        if egg_file is None:
            raise StructureError("egg-file needs an input path")
        egg, report = load_egg(egg_file, strict=strict)
        if not report.passed:
            raise EggError("egg fails " + ", ".join(c.name for c in report.failures()))
        IS = build_TE(egg, verify=False)
        IS.kind = "egg-file"
    elif q is None:
        raise StructureError(f"{kind} needs a field order")
    elif kind == "te-conic":
        IS = te_conic(q, n)
    elif kind == "te-ovoid":
        IS = te_ovoid(q, n)
    elif kind == "t2star":
        IS = t2star(q)
    elif kind in ("w3", "q4", "q5", "h3", "h4"):
        IS = build_classical(kind, field_of_order(q))
    else:
        raise StructureError(f"unknown GQ kind {kind!r}")
    if verify:
        check = verify_partial_geometry(IS)
        if not check.ok:
            raise StructureError(f"axiom {check.failed_axiom} fails, witness {check.witness}")
        expected = IS.meta.get("expected_order")
        if expected is not None and (check.s, check.t) != tuple(expected):
            raise StructureError(f"order ({check.s},{check.t}) differs from expected {expected}")
    return IS


def profile(IS: IncidenceStructure) -> dict:
    """Isomorphism-invariant summary used to compare independent constructions."""
    N = IS.incidence_array().astype(np.int64)
    coll = (N.T @ N) > 0
    np.fill_diagonal(coll, False)
    return {
        "points": IS.num_points,
        "lines": IS.num_lines,
        "params": IS.params,
        "line_sizes": sorted(N.sum(axis=1).tolist()),
        "point_degrees": sorted(N.sum(axis=0).tolist()),
        "collinearity_degrees": sorted(coll.sum(axis=1).tolist()),
    }
