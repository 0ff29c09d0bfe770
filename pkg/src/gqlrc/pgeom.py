"""Projective and affine spaces over GF(q).

Points are tuples of integer-encoded field elements, normalised so the first
nonzero coordinate is 1.  Subspaces carry a reduced-row-echelon basis, which
makes equality and hashing exact.  The hyperplane at infinity is always
``{last coordinate = 0}``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import cached_property

import numpy as np

from .gf import Field, FieldError

Point = tuple[int, ...]


class GeometryError(ValueError):
    pass


# --- linear algebra over GF(q) on integer-encoded rows ---

def rref(rows, F: Field) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = F.inv(m[r][c])
        m[r] = [F.mul(inv, x) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = F.neg(m[i][c])
                m[i] = [F.add(x, F.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, F: Field) -> int:
    return len(rref(rows, F)[0])


def normalize(v, F: Field) -> Point:
    for x in v:
        if x:
            inv = F.inv(x)
            return tuple(F.mul(inv, y) for y in v)
    raise GeometryError("zero vector is not a projective point")


def combine(coeffs, rows, F: Field) -> list[int]:
    out = [0] * len(rows[0])
    for c, row in zip(coeffs, rows):
        if c:
            for j, x in enumerate(row):
                if x:
                    out[j] = F.add(out[j], F.mul(c, x))
    return out


def dot(u, v, F: Field) -> int:
    acc = 0
    for a, b in zip(u, v):
        if a and b:
            acc = F.add(acc, F.mul(a, b))
    return acc


@dataclass(frozen=True)
class Subspace:
    """Projective subspace of PG(N, q) given by an RREF basis."""

    basis: tuple[Point, ...]
    field: Field = dc_field(compare=False, repr=False)

    @classmethod
    def from_rows(cls, rows, F: Field) -> "Subspace":
        red, _ = rref(rows, F)
        if not red:
            raise GeometryError("empty span")
        return cls(tuple(tuple(r) for r in red), F)

    @property
    def ambient_dim(self) -> int:
        return len(self.basis[0]) - 1

    @property
    def proj_dim(self) -> int:
        return len(self.basis) - 1

    @cached_property
    def points(self) -> tuple[Point, ...]:
        F = self.field
        k = len(self.basis)
        pts = set()
        for coeffs in itertools.product(range(F.q), repeat=k):
            if any(coeffs):
                pts.add(normalize(combine(coeffs, self.basis, F), F))
        return tuple(sorted(pts))

    def contains_point(self, pt) -> bool:
        return rank(list(self.basis) + [list(pt)], self.field) == len(self.basis)

    def contains(self, other: "Subspace") -> bool:
        return rank(list(self.basis) + list(other.basis), self.field) == len(self.basis)

    def meet_dim(self, other: "Subspace") -> int:
        """Projective dimension of the intersection (-1 when disjoint)."""
        joined = rank(list(self.basis) + list(other.basis), self.field)
        return len(self.basis) + len(other.basis) - joined - 1

    def to_json(self) -> list:
        F = self.field
        return [[list(F.coeffs(x)) for x in row] for row in self.basis]

    @classmethod
    def from_json(cls, rows, F: Field) -> "Subspace":
        return cls.from_rows([[F.from_coeffs(c) for c in row] for row in rows], F)


def point_subspace(pt, F: Field) -> Subspace:
    return Subspace.from_rows([list(pt)], F)


def span(generators, F: Field | None = None) -> Subspace:
    """Smallest subspace containing the given points and/or subspaces."""
    generators = list(generators)
    if not generators:
        raise GeometryError("span of nothing")
    rows = []
    for g in generators:
        if isinstance(g, Subspace):
            F = F or g.field
            rows.extend(g.basis)
        else:
            rows.append(tuple(g))
    if F is None:
        raise GeometryError("field required when spanning bare points")
    if len({len(r) for r in rows}) != 1:
        raise GeometryError("generators live in different ambient spaces")
    return Subspace.from_rows(rows, F)


def subspace_points(s: Subspace) -> tuple[Point, ...]:
    return s.points


class ProjectiveSpace:
    """PG(N, q) with points in lexicographic order of their normalised coordinates."""

    def __init__(self, F: Field, N: int):
        if N < 0:
            raise GeometryError("dimension must be >= 0")
        self.field, self.N = F, N

    @cached_property
    def points(self) -> list[Point]:
        q, N = self.field.q, self.N
        pts = []
        for lead in range(N + 1):
            for tail in itertools.product(range(q), repeat=N - lead):
                pts.append((0,) * lead + (1,) + tail)
        pts.sort()
        return pts

    @cached_property
    def index(self) -> dict[Point, int]:
        return {pt: i for i, pt in enumerate(self.points)}

    @property
    def num_points(self) -> int:
        q = self.field.q
        return (q ** (self.N + 1) - 1) // (q - 1)

    @cached_property
    def affine_points(self) -> list[Point]:
        """Points off the hyperplane at infinity (last coordinate nonzero)."""
        return [pt for pt in self.points if pt[-1]]

    @cached_property
    def h_infinity(self) -> Subspace:
        rows = [[1 if j == i else 0 for j in range(self.N + 1)] for i in range(self.N)]
        return Subspace.from_rows(rows, self.field)

    def subspaces(self, t: int) -> list[Subspace]:
        return enumerate_subspaces(self, t)

    def __repr__(self) -> str:
        return f"PG({self.N},{self.field.q})"


def enumerate_points(space: ProjectiveSpace) -> list[Point]:
    return space.points


def enumerate_subspaces(space: ProjectiveSpace, t: int) -> list[Subspace]:
    """All t-dimensional subspaces, generated directly as RREF matrices."""
    F, ncols, k = space.field, space.N + 1, t + 1
    if not 0 <= t <= space.N:
        raise GeometryError(f"t={t} outside [0, {space.N}]")
    out = []
    for pivots in itertools.combinations(range(ncols), k):
        free = [(r, c) for r in range(k) for c in range(pivots[r] + 1, ncols) if c not in pivots]
        for vals in itertools.product(range(F.q), repeat=len(free)):
            m = [[0] * ncols for _ in range(k)]
            for r, c in enumerate(pivots):
                m[r][c] = 1
            for (r, c), v in zip(free, vals):
                m[r][c] = v
            out.append(Subspace(tuple(tuple(r) for r in m), F))
    out.sort(key=lambda s: s.basis)
    return out


def embed_point(pt) -> Point:
    return tuple(pt) + (0,)


def embed_subspace(s: Subspace) -> Subspace:
    return Subspace(tuple(embed_point(r) for r in s.basis), s.field)


def embed_in_hyperplane(inner: ProjectiveSpace) -> tuple[ProjectiveSpace, Subspace]:
    """PG(N,q) -> (PG(N+1,q), H_inf) with H_inf = {last coordinate = 0}."""
    outer = ProjectiveSpace(inner.field, inner.N + 1)
    return outer, outer.h_infinity


def random_subspace(space: ProjectiveSpace, t: int, rng, within: Subspace | None = None) -> Subspace:
    """Uniformly random t-subspace (of ``within`` if given) by rejection sampling of spanning points."""
    pool = list(within.points) if within is not None else space.points
    while True:
        pick = [pool[i] for i in rng.choice(len(pool), size=t + 1, replace=False)]
        s = span(pick, space.field)
        if s.proj_dim == t:
            return s


# --- classical point sets ---

def _zeros(space: ProjectiveSpace, form) -> list[Point]:
    return [pt for pt in space.points if form(pt) == 0]


def conic(F: Field) -> list[Point]:
    """Zeros of X0*X2 - X1^2 in PG(2,q)."""
    return _zeros(ProjectiveSpace(F, 2), lambda x: F.sub(F.mul(x[0], x[2]), F.mul(x[1], x[1])))


def irreducible_quadratic(F: Field) -> tuple[int, int]:
    """Least (b, c) with t^2 + b t + c irreducible over F."""
    for b in range(F.q):
        for c in range(1, F.q):
            if all(F.add(F.add(F.mul(t, t), F.mul(b, t)), c) for t in range(F.q)):
                return b, c
    raise FieldError("no irreducible quadratic")


def elliptic_form(F: Field):
    """Q(x) = x0*x1 + f(x2, x3) with f irreducible."""
    b, c = irreducible_quadratic(F)

    def Q(x):
        f = F.add(F.add(F.mul(x[2], x[2]), F.mul(b, F.mul(x[2], x[3]))), F.mul(c, F.mul(x[3], x[3])))
        return F.add(F.mul(x[0], x[1]), f)

    return Q


def elliptic_quadric(F: Field) -> list[Point]:
    return _zeros(ProjectiveSpace(F, 3), elliptic_form(F))


def tangent_hyperplanes(point_set, F: Field, N: int) -> dict[Point, Subspace]:
    """For each point of an arc/cap, the hyperplanes through it meeting the set only there.

    Raises if some point has no such hyperplane or more than one.
    """
    space = ProjectiveSpace(F, N)
    pts = list(point_set)
    out = {}
    for P in pts:
        found = []
        for a in space.points:
            if dot(a, P, F):
                continue
            if sum(1 for X in pts if dot(a, X, F) == 0) == 1:
                found.append(a)
        if len(found) != 1:
            raise GeometryError(f"point {P} has {len(found)} tangent hyperplanes")
        out[P] = hyperplane(found[0], F)
    return out


def hyperplane(a, F: Field) -> Subspace:
    """The hyperplane sum a_i x_i = 0."""
    n = len(a)
    piv = next(i for i, x in enumerate(a) if x)
    inv = F.inv(a[piv])
    rows = []
    for j in range(n):
        if j == piv:
            continue
        r = [0] * n
        r[j] = 1
        r[piv] = F.neg(F.mul(inv, a[j]))
        rows.append(r)
    return Subspace.from_rows(rows, F)


def nucleus(oval, F: Field) -> Point:
    if F.p != 2:
        raise GeometryError("ovals have a nucleus only in even characteristic")
    tangents = list(tangent_hyperplanes(oval, F, 2).values())
    common = set(tangents[0].points)
    for t in tangents[1:]:
        common &= set(t.points)
    if len(common) != 1:
        raise GeometryError("tangents are not concurrent")
    return common.pop()


def hyperoval(F: Field) -> list[Point]:
    """Conic plus nucleus, q even."""
    if F.p != 2:
        raise GeometryError(f"hyperovals exist only for q even (q={F.q})")
    c = conic(F)
    return sorted(c + [nucleus(c, F)])


def is_arc(point_set, F: Field) -> bool:
    """No three points on a line (works for caps in higher dimension as well)."""
    pts = list(point_set)
    for a, b, c in itertools.combinations(pts, 3):
        if rank([a, b, c], F) < 3:
            return False
    return True


def sqrt_order(F: Field) -> int:
    if F.h % 2:
        raise GeometryError(f"GF({F.q}) is not a quadratic extension")
    return F.p ** (F.h // 2)


def hermitian_form(F: Field):
    """h(x, y) = sum x_i * y_i^q over GF(q^2)."""
    q = sqrt_order(F)

    def h(x, y):
        acc = 0
        for a, b in zip(x, y):
            if a and b:
                acc = F.add(acc, F.mul(a, F.pow(b, q)))
        return acc

    return h


def hermitian_variety(F: Field, N: int) -> list[Point]:
    if N not in (3, 4):
        raise GeometryError("Hermitian varieties supported for N in {3, 4}")
    h = hermitian_form(F)
    return _zeros(ProjectiveSpace(F, N), lambda x: h(x, x))


def symplectic_form(F: Field):
    def B(x, y):
        t1 = F.sub(F.mul(x[0], y[1]), F.mul(x[1], y[0]))
        t2 = F.sub(F.mul(x[2], y[3]), F.mul(x[3], y[2]))
        return F.add(t1, t2)

    return B


def isotropic_lines(points, B, F: Field) -> list[Subspace]:
    """Lines spanned by pairs of mutually orthogonal points that lie entirely in ``points``."""
    pts = list(points)
    pset = set(pts)
    lines = set()
    for i, P in enumerate(pts):
        for Q in pts[i + 1:]:
            if B(P, Q) == 0:
                L = span([P, Q], F)
                if L not in lines and all(x in pset for x in L.points):
                    lines.add(L)
    return sorted(lines, key=lambda s: s.basis)


def symplectic_lines(F: Field) -> list[Subspace]:
    return isotropic_lines(ProjectiveSpace(F, 3).points, symplectic_form(F), F)


# --- field reduction ---

class FieldReduction:
    """F_q-linear coordinates for GF(q^e) using the basis 1, w, ..., w^(e-1).

    ``w`` is the primitive element of the large field; the small field is
    embedded by sending its generator to a root of its own modulus.
    """

    def __init__(self, big: Field, base: Field):
        if big.p != base.p or big.h % base.h:
            raise GeometryError(f"GF({base.q}) is not a subfield of GF({big.q})")
        self.big, self.base = big, base
        self.e = big.h // base.h
        self.embed = self._embedding()
        w = big.generator if big.h > 1 else 1
        self.basis = [big.pow(w, i) for i in range(self.e)]
        coords = {}
        for cs in itertools.product(range(base.q), repeat=self.e):
            v = 0
            for c, b in zip(cs, self.basis):
                v = big.add(v, big.mul(self.embed[c], b))
            coords[v] = cs
        if len(coords) != big.q:
            raise GeometryError("reduction basis is not independent")
        self.coords = coords

    def _embedding(self) -> list[int]:
        big, base = self.big, self.base
        if base.h == 1:
            return list(range(base.q))
        # find a root of base.modulus in big, then map polynomials in x
        for beta in range(big.q):
            acc = 0
            for i, c in enumerate(base.modulus):
                acc = big.add(acc, big.mul(c, big.pow(beta, i)))
            if acc == 0:
                break
        else:
            raise GeometryError("no root of the subfield modulus")
        table = []
        for a in range(base.q):
            v = 0
            for i, c in enumerate(base.coeffs(a)):
                v = big.add(v, big.mul(c, big.pow(beta, i)))
            table.append(v)
        return table

    def expand(self, vec) -> list[int]:
        out = []
        for a in vec:
            out.extend(self.coords[a])
        return out

    def reduce_rows(self, rows) -> Subspace:
        big = self.big
        expanded = []
        for row in rows:
            for b in self.basis:
                expanded.append(self.expand([big.mul(b, x) for x in row]))
        return Subspace.from_rows(expanded, self.base)

    def reduce_subspace(self, s: Subspace) -> Subspace:
        return self.reduce_rows(s.basis)

    def reduce_point(self, pt) -> Subspace:
        return self.reduce_rows([pt])


def field_reduce(point_set, big: Field, base: Field) -> list[Subspace]:
    fr = FieldReduction(big, base)
    return [fr.reduce_point(pt) for pt in point_set]


# --- incidence matrices of points versus t-spaces ---

@dataclass
class SpaceIncidence:
    matrix: np.ndarray  # rows = t-spaces, columns = points
    blocks: list[Subspace]
    points: list[Point]


def incidence_matrix_spaces(F: Field, n: int, t: int, affine: bool = False) -> SpaceIncidence:
    """Points versus t-spaces of PG(n,q), or t-flats of AG(n,q) when ``affine``.

    AG(n,q) is PG(n,q) minus the hyperplane at infinity; its t-flats are the
    t-spaces not contained in that hyperplane, restricted to affine points.
    """
    space = ProjectiveSpace(F, n)
    if affine:
        if not 1 <= t <= n - 1:
            raise GeometryError(f"AG flats need 1 <= t <= n-1 (t={t}, n={n})")
        pts = space.affine_points
    else:
        if not 0 <= t <= n - 1:
            raise GeometryError(f"PG spaces need 0 <= t <= n-1 (t={t}, n={n})")
        pts = space.points
    col = {pt: j for j, pt in enumerate(pts)}
    blocks = []
    rows = []
    for s in space.subspaces(t):
        idx = [col[x] for x in s.points if x in col]
        if affine and len(idx) == 0:
            continue
        if affine and all(r[-1] == 0 for r in s.basis):
            continue
        blocks.append(s)
        rows.append(idx)
    m = np.zeros((len(rows), len(pts)), dtype=np.uint8)
    for i, idx in enumerate(rows):
        m[i, idx] = 1
    return SpaceIncidence(m, blocks, list(pts))
