"""Wall relations, Mori and nef cones, and positivity of toric divisors.

For a complete simplicial fan each wall gives a torus-invariant curve C whose
intersection numbers with the prime divisors are proportional to the unique
relation among the n+1 rays of the two adjacent cones. D is nef (ample) iff
D.C >= 0 (> 0) for every wall curve.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Sequence

from .class_groups import ClassGroup, ToricDivisor, class_group
from .cones import Cone, cone_from_inequalities, cone_from_rays, dual_cone
from .errors import NotComplete, NotSimplicial
from .fans import Fan, Wall, is_complete, walls
from .lattice import IntMatrix, dot, kernel_basis, rank, solve_rational


@dataclass(frozen=True)
class WallRelation:
    """sum a_rho v_rho = 0 over all rays, supported on the two adjacent cones.

    Primitive, with positive coefficients on the two rays off the wall.
    """

    wall: Wall
    coefficients: tuple[int, ...]

    def pair(self, d: ToricDivisor | Sequence[int]) -> int:
        coeffs = d.coefficients if isinstance(d, ToricDivisor) else d
        return dot(self.coefficients, coeffs)

    @property
    def anticanonical_degree(self) -> int:
        return sum(self.coefficients)


def wall_relation(f: Fan, w: Wall) -> WallRelation:
    """The normalized relation among the rays of the two cones adjacent to w.

    Only the two adjacent cones need to be simplicial, so this also serves
    local (non-complete) fans.
    """
    i, j = w.cones
    support = sorted(set(f.max_cones[i]) | set(f.max_cones[j]))
    if len(support) != f.ambient_rank + 1 or rank(f.rays_of(support)) != f.ambient_rank:
        raise NotSimplicial(f"cones {w.cones} adjacent to the wall are not simplicial")
    K = kernel_basis(IntMatrix.from_rows(f.rays_of(support)).transpose())
    rel = K.col(0)
    off = [k for k, idx in enumerate(support) if idx not in w.face]
    if rel[off[0]] < 0:
        rel = tuple(-x for x in rel)
    if any(rel[k] <= 0 for k in off):
        raise NotSimplicial(f"degenerate relation across wall {w.face}")
    full = [0] * len(f.rays)
    for k, idx in enumerate(support):
        full[idx] = rel[k]
    return WallRelation(w, tuple(full))


def _require_complete_simplicial(f: Fan):
    if not f.is_simplicial:
        raise NotSimplicial("nef and Mori cones are computed for simplicial fans")
    if not is_complete(f):
        raise NotComplete("nef and Mori cones are computed for complete fans")


@lru_cache(maxsize=128)
def _wall_relations(f: Fan) -> tuple[WallRelation, ...]:
    _require_complete_simplicial(f)
    return tuple(wall_relation(f, w) for w in walls(f))


def wall_relations(f: Fan) -> list[WallRelation]:
    return list(_wall_relations(f))


def curve_class(cg: ClassGroup, relation: WallRelation) -> tuple[int, ...]:
    """Coordinates of a wall curve dual to the free part of the Cl basis.

    The relation vector a lies in the span of the free rows F of the class
    transform, a = c F, so D.C = a.d = c.(F d) pairs with class coordinates.
    """
    c = solve_rational([list(col) for col in zip(*cg.free_rows)], relation.coefficients)
    return tuple(int(x) for x in c)


@dataclass(frozen=True)
class MoriNef:
    class_group: ClassGroup
    relations: tuple[WallRelation, ...]
    curve_classes: tuple[tuple[int, ...], ...]
    mori: Cone
    nef: Cone


def mori_cone(f: Fan) -> Cone:
    return mori_and_nef(f).mori


def nef_cone(f: Fan) -> Cone:
    return mori_and_nef(f).nef


def mori_and_nef(f: Fan) -> MoriNef:
    rels = wall_relations(f)
    cg = class_group(f)
    classes = tuple(curve_class(cg, r) for r in rels)
    k = cg.structure.free_rank
    mori = cone_from_rays(classes, k)
    return MoriNef(cg, tuple(rels), classes, mori, dual_cone(mori))


@dataclass(frozen=True)
class Positivity:
    kind: str  # Ample, NefNotAmple, NotNef
    witness: Wall | None = None
    degrees: tuple[int, ...] = ()

    def __str__(self):
        return self.kind


def positivity(f: Fan, d: ToricDivisor) -> Positivity:
    d.check_length(f)
    rels = _wall_relations(f)
    degrees = tuple(r.pair(d) for r in rels)
    neg = next((r for r, x in zip(rels, degrees) if x < 0), None)
    if neg is not None:
        return Positivity("NotNef", neg.wall, degrees)
    zero = next((r for r, x in zip(rels, degrees) if x == 0), None)
    if zero is not None:
        return Positivity("NefNotAmple", zero.wall, degrees)
    return Positivity("Ample", None, degrees)


def divisor_polytope(f: Fan, d: ToricDivisor) -> list[tuple[Fraction, ...]]:
    """Vertices of {m : <m, v_rho> >= -d_rho}, sorted."""
    n = f.ambient_rank
    # homogenize: (m, t) with <m, v> + d t >= 0 and t >= 0
    ineqs = [tuple(v) + (c,) for v, c in zip(f.rays, d.coefficients)]
    ineqs.append((0,) * n + (1,))
    hom = cone_from_inequalities(ineqs, n + 1)
    if hom.lineality:
        raise ValueError("divisor polytope is unbounded")
    verts = [tuple(Fraction(x, r[-1]) for x in r[:-1]) for r in hom.rays if r[-1] > 0]
    return sorted(verts)


@dataclass(frozen=True)
class FanoStatus:
    kind: str  # Fano, WeakFano, Neither
    vertices: tuple[tuple[Fraction, ...], ...]
    positivity: Positivity

    def __str__(self):
        return self.kind


def fano_status(f: Fan) -> FanoStatus:
    """Fano if -K is ample; weak Fano if -K is nef and its polytope is full-dimensional."""
    anti = ToricDivisor.anticanonical(f)
    pos = positivity(f, anti)
    verts = tuple(divisor_polytope(f, anti))
    if pos.kind == "Ample":
        kind = "Fano"
    elif pos.kind == "NefNotAmple":
        base = verts[0]
        diffs = [tuple(x - y for x, y in zip(v, base)) for v in verts[1:]]
        dim = _rational_rank(diffs)
        kind = "WeakFano" if dim == f.ambient_rank else "Neither"
    else:
        kind = "Neither"
    return FanoStatus(kind, verts, pos)


def _rational_rank(vectors) -> int:
    if not vectors:
        return 0
    rows = []
    for v in vectors:
        den = lcm(*(Fraction(x).denominator for x in v))
        rows.append([int(Fraction(x) * den) for x in v])
    return rank(rows)


def class_in_nef_interior(mn: MoriNef, cls_free: Sequence[int]) -> str:
    """Locate a class relative to the nef cone: interior, boundary or outside."""
    c = mn.nef
    if not c.contains(cls_free):
        return "outside"
    return "interior" if c.relative_interior_contains(cls_free) and c.is_full_dimensional else "boundary"
