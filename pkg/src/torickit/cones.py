"""Rational polyhedral cones with both generator and facet descriptions.

Conversions between the two descriptions use the double description method
(the dual form of Fourier-Motzkin elimination) with an algebraic adjacency
test, all over the integers.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, prod
from typing import Iterable, Sequence

from .errors import NotPointed
from .lattice import (IntMatrix, dot, invariant_factors, orthogonal_complement_basis,
                      primitive, primitive_from_rational, rank, saturated_span_basis,
                      solve_rational)

Vector = tuple[int, ...]


def _double_description(constraints: Sequence[Sequence[int]], dim: int) -> tuple[list[Vector], list[Vector]]:
    """Generators of {y in R^dim : a.y >= 0 for every row a}.

    Returns (lineality, rays): the cone is span(lineality) + cone(rays).
    Rays are extreme modulo the lineality space but not yet canonical.
    """
    lin: list[Vector] = [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    rays: list[Vector] = []
    done: list[Sequence[int]] = []
    for a in constraints:
        if not any(a):
            continue
        k = next((i for i, l in enumerate(lin) if dot(a, l) != 0), None)
        if k is not None:
            pivot = lin.pop(k)
            if dot(a, pivot) < 0:
                pivot = tuple(-x for x in pivot)
            ap = dot(a, pivot)
            lin = [primitive(tuple(ap * x - dot(a, l) * y for x, y in zip(l, pivot)))
                   for l in lin]
            rays = [primitive(tuple(ap * x - dot(a, r) * y for x, y in zip(r, pivot)))
                    for r in rays]
            rays.append(pivot)
            done.append(a)
            continue
        pos, zero, neg = [], [], []
        for r in rays:
            v = dot(a, r)
            (pos if v > 0 else neg if v < 0 else zero).append((r, v))
        new = [r for r, _ in pos] + [r for r, _ in zero]
        if pos and neg:
            target = dim - len(lin) - 2
            zsets = {r: frozenset(i for i, b in enumerate(done) if dot(b, r) == 0)
                     for r, _ in pos + neg}
            for (p, vp), (n, vn) in itertools.product(pos, neg):
                common = zsets[p] & zsets[n]
                if len(common) < target:
                    continue
                if (rank([done[i] for i in common]) if common else 0) != target:
                    continue
                new.append(primitive(tuple(vp * x - vn * y for x, y in zip(n, p))))
        rays = new
        done.append(a)
    return lin, rays


def _project_away(v: Sequence[int], basis: Sequence[Sequence[int]]) -> tuple[Fraction, ...]:
    """Euclidean projection of v onto the orthogonal complement of span(basis)."""
    if not basis:
        return tuple(Fraction(x) for x in v)
    gram = [[dot(b, c) for c in basis] for b in basis]
    coef = solve_rational(gram, [dot(b, v) for b in basis])
    return tuple(Fraction(x) - sum(c * b[i] for c, b in zip(coef, basis))
                 for i, x in enumerate(v))


def _canonical(vectors: Iterable[Sequence[int]], away: Sequence[Sequence[int]]) -> tuple[Vector, ...]:
    out = set()
    for v in vectors:
        w = _project_away(v, away)
        if any(w):
            out.add(primitive_from_rational(w))
    return tuple(sorted(out))


@dataclass(frozen=True)
class Cone:
    """cone(rays) + span(lineality) = {x : E x = 0, F x >= 0}.

    `rays` are primitive extreme rays taken orthogonal to the lineality space;
    `facet_normals` are primitive inward normals taken inside the linear span
    (so they are unique). Both are sorted, which makes == a geometric test.
    """

    ambient_rank: int
    rays: tuple[Vector, ...]
    facet_normals: tuple[Vector, ...]
    lineality: tuple[Vector, ...] = ()
    equations: tuple[Vector, ...] = ()

    @property
    def dim(self) -> int:
        return self.ambient_rank - len(self.equations)

    @property
    def is_pointed(self) -> bool:
        return not self.lineality

    @property
    def is_full_dimensional(self) -> bool:
        return not self.equations

    @property
    def is_simplicial(self) -> bool:
        return self.is_pointed and len(self.rays) == self.dim

    def contains(self, x: Sequence) -> bool:
        return (all(dot(e, x) == 0 for e in self.equations)
                and all(dot(u, x) >= 0 for u in self.facet_normals))

    def relative_interior_contains(self, x: Sequence) -> bool:
        return (all(dot(e, x) == 0 for e in self.equations)
                and all(dot(u, x) > 0 for u in self.facet_normals))

    def generators(self) -> list[Vector]:
        """Generators as a plain cone (lineality entered with both signs)."""
        return list(self.rays) + list(self.lineality) + [tuple(-x for x in l) for l in self.lineality]

    def __repr__(self):
        extra = f", lineality={list(self.lineality)}" if self.lineality else ""
        return f"Cone(rays={list(self.rays)}{extra})"


def cone_from_rays(rays: Iterable[Sequence[int]], ambient_rank: int | None = None,
                   require_pointed: bool = False) -> Cone:
    """Cone generated by integer vectors, with both descriptions computed."""
    gens = [tuple(int(x) for x in r) for r in rays]
    if ambient_rank is None:
        if not gens:
            raise ValueError("ambient_rank required for an empty generator list")
        ambient_rank = len(gens[0])
    n = ambient_rank
    if any(len(g) != n for g in gens):
        raise ValueError("generators of mixed length")
    gens = [primitive(g) for g in gens if any(g)]
    equations = orthogonal_complement_basis(gens, n)
    if not gens:
        return Cone(n, (), (), (), equations)
    _, normals = _double_description(gens, n)
    # second pass recovers the extreme rays and the lineality space
    cons = list(normals) + list(equations) + [tuple(-x for x in e) for e in equations]
    lin_raw, ext = _double_description(cons, n)
    lineality = saturated_span_basis(lin_raw, n)
    if require_pointed and lineality:
        raise NotPointed(f"cone generated by {gens} contains the line spanned by {lineality[0]}")
    return Cone(
        ambient_rank=n,
        rays=_canonical(ext, lineality),
        facet_normals=_canonical(normals, equations),
        lineality=lineality,
        equations=equations)


def cone_from_inequalities(normals: Iterable[Sequence[int]], ambient_rank: int,
                           equations: Iterable[Sequence[int]] = ()) -> Cone:
    """Cone {x : E x = 0, u.x >= 0 for u in normals}."""
    eqs = [tuple(e) for e in equations]
    cons = [tuple(u) for u in normals] + eqs + [tuple(-x for x in e) for e in eqs]
    lin, ext = _double_description(cons, ambient_rank)
    return cone_from_rays(list(ext) + list(lin) + [tuple(-x for x in l) for l in lin],
                          ambient_rank)


def dual_cone(c: Cone) -> Cone:
    """Dual cone in the dual lattice, recomputed from the facet description."""
    return cone_from_rays(c.facet_normals + c.equations + tuple(tuple(-x for x in e) for e in c.equations),
                          c.ambient_rank)


def intersect(c: Cone, d: Cone) -> Cone:
    return cone_from_inequalities(c.facet_normals + d.facet_normals, c.ambient_rank,
                                  c.equations + d.equations)


def face_index_sets(c: Cone) -> list[frozenset[int]]:
    """Every face of c as the set of indices (into c.rays) of its rays."""
    all_rays = frozenset(range(len(c.rays)))
    zero_sets = [frozenset(i for i, r in enumerate(c.rays) if dot(u, r) == 0)
                 for u in c.facet_normals]
    found = {all_rays}
    frontier = [all_rays]
    while frontier:
        f = frontier.pop()
        for z in zero_sets:
            g = f & z
            if g not in found:
                found.add(g)
                frontier.append(g)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def face_dimension(c: Cone, index_set: Iterable[int]) -> int:
    vecs = [c.rays[i] for i in index_set] + list(c.lineality)
    return rank(vecs) if vecs else 0


def faces(c: Cone, dim: int) -> list[Cone]:
    """All faces of dimension `dim`, ordered lexicographically by sorted ray indices."""
    if not 0 <= dim <= c.dim:
        raise ValueError(f"face dimension {dim} outside 0..{c.dim}")
    picked = sorted((tuple(sorted(s)) for s in face_index_sets(c) if face_dimension(c, s) == dim))
    return [cone_from_rays([c.rays[i] for i in s] + list(c.lineality)
                           + [tuple(-x for x in l) for l in c.lineality], c.ambient_rank)
            for s in picked]


@dataclass(frozen=True)
class Regularity:
    """Smooth, simplicial of index > 1, or non-simplicial."""

    kind: str
    index: int | None = None

    @property
    def is_smooth(self) -> bool:
        return self.kind == "Smooth"

    @property
    def is_simplicial(self) -> bool:
        return self.kind != "NonSimplicial"

    def __str__(self):
        if self.kind == "SimplicialOfIndex":
            return f"SimplicialOfIndex({self.index})"
        return self.kind


SMOOTH = Regularity("Smooth", 1)
NON_SIMPLICIAL = Regularity("NonSimplicial")


def multiplicity(rays: Sequence[Sequence[int]]) -> int:
    """Index of the lattice spanned by linearly independent rays in its saturation."""
    if not rays:
        return 1
    return prod(d for d in invariant_factors(IntMatrix.from_rows(rays)) if d)


def cone_regularity(c: Cone) -> Regularity:
    if not c.is_pointed:
        raise NotPointed("regularity is only defined for pointed cones")
    if len(c.rays) != c.dim:
        return NON_SIMPLICIAL
    m = multiplicity(c.rays)
    return SMOOTH if m == 1 else Regularity("SimplicialOfIndex", m)


def lattice_points_in_polytope(vertices: Sequence[Sequence]) -> list[Vector]:
    """Integer points of conv(vertices); vertices may be rational."""
    verts = [tuple(Fraction(x) for x in v) for v in vertices]
    if not verts:
        return []
    n = len(verts[0])
    lifted = [primitive_from_rational(v + (Fraction(1),)) for v in verts]
    hull = cone_from_rays(lifted, n + 1)
    lo = [floor(min(v[i] for v in verts)) for i in range(n)]
    hi = [ceil(max(v[i] for v in verts)) for i in range(n)]
    pts = []
    for x in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if hull.contains(x + (1,)):
            pts.append(tuple(x))
    return pts
