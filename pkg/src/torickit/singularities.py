"""Discrepancy classes of toric singularities and the Reid-Tai age test.

A Q-Gorenstein cone has a rational functional m with <m, v> = 1 on every
ray. It is terminal when the only lattice points of conv(0, rays) are the
origin and the rays, and canonical when no nonzero lattice point sits at
level < 1.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd
from typing import Sequence

from .cones import cone_from_rays, cone_regularity, face_dimension, face_index_sets
from .errors import NotQGorenstein
from .fans import Fan
from .lattice import (IntMatrix, coordinates_in_basis, det, dot, gcd_list, lcm_list,
                      saturated_span_basis, smith_normal_form, solve_rational)

KINDS = ("Smooth", "Terminal", "Canonical", "KltOnly")
MAX_QUOTIENT_ORDER = 10**6


def intrinsic_coordinates(rays: Sequence[Sequence[int]], ambient_rank: int):
    """(basis, coords): a basis of span(rays) ∩ Z^n and the rays written in it."""
    basis = saturated_span_basis(rays, ambient_rank)
    coords = []
    for r in rays:
        c = coordinates_in_basis(basis, r)
        coords.append(tuple(int(x) for x in c))
    return basis, coords


@dataclass(frozen=True)
class QGorensteinData:
    """Level-one functionals per maximal cone.

    `functionals[i]` is the minimal-norm rational covector in the span of
    cone i that is 1 on its rays; `local_indices[i]` is the least r making
    the functional integral on the lattice of that span.
    """

    functionals: tuple[tuple[Fraction, ...], ...]
    local_indices: tuple[int, ...]

    @property
    def gorenstein_index(self) -> int:
        return lcm_list(self.local_indices)


def _level_functional(coords: Sequence[Sequence[int]]) -> tuple[Fraction, ...] | None:
    return solve_rational(coords, [1] * len(coords))


def _lift(basis: Sequence[Sequence[int]], y: Sequence[Fraction], n: int) -> tuple[Fraction, ...]:
    gram = [[dot(a, b) for b in basis] for a in basis]
    lam = solve_rational(gram, y)
    return tuple(sum((l * b[i] for l, b in zip(lam, basis)), Fraction(0)) for i in range(n))


def q_gorenstein_data(f: Fan) -> QGorensteinData:
    funcs, idx = [], []
    for i, cone in enumerate(f.max_cones):
        basis, coords = intrinsic_coordinates(f.rays_of(cone), f.ambient_rank)
        y = _level_functional(coords)
        if y is None:
            raise NotQGorenstein(i)
        funcs.append(_lift(basis, y, f.ambient_rank))
        idx.append(lcm_list(x.denominator for x in y))
    return QGorensteinData(tuple(funcs), tuple(idx))


def _simplex_kind(coords: Sequence[Sequence[int]]) -> str:
    """Terminal/Canonical/KltOnly for a full-dimensional simplicial cone in Z^k.

    Nonzero classes of Z^k / (ray lattice) are exactly the lattice points of
    the half-open parallelepiped; with ray coordinates lambda, such a point
    lies in conv(0, rays) at level sum(lambda). The classes come from the
    SNF: lambda = t D^{-1} U for 0 <= t_i < d_i.
    """
    snf = smith_normal_form(IntMatrix.from_rows(coords))
    d = snf.invariant_factors
    order = 1
    for x in d:
        order *= x
    if order > MAX_QUOTIENT_ORDER:
        raise ValueError(f"cone multiplicity {order} exceeds the cap {MAX_QUOTIENT_ORDER}")
    U = snf.U.to_rows()
    k = len(coords)
    kind = "Terminal"
    for t in itertools.product(*(range(x) for x in d)):
        if not any(t):
            continue
        lam = [sum((Fraction(t[i] * U[i][j], d[i]) for i in range(k)), Fraction(0)) for j in range(k)]
        level = sum((x - floor(x) for x in lam), Fraction(0))
        if level < 1:
            return "KltOnly"
        if level == 1:
            kind = "Canonical"
    return kind


def _pulling_triangulation(c, index_set: frozenset[int], dim: int, faces_by_dim) -> list[frozenset[int]]:
    """Simplicial cones on the rays of a face, without new rays (pull the lowest ray)."""
    if len(index_set) == dim:
        return [index_set]
    v0 = min(index_set)
    out = []
    for facet in faces_by_dim[dim - 1]:
        if facet < index_set and v0 not in facet:
            out.extend(t | {v0} for t in _pulling_triangulation(c, facet, dim - 1, faces_by_dim))
    return out


def cone_discrepancy_kind(rays: Sequence[Sequence[int]], ambient_rank: int) -> str:
    """Strongest of Smooth/Terminal/Canonical/KltOnly for one Q-Gorenstein cone.

    Non-simplicial cones are split into simplicial cones on the same rays;
    the level-one functional restricts to each piece, so the lattice-point
    test can be run piece by piece.
    """
    basis, coords = intrinsic_coordinates(rays, ambient_rank)
    if _level_functional(coords) is None:
        raise NotQGorenstein(-1)
    k = len(basis)
    if len(coords) == k:
        if abs(det(IntMatrix.from_rows(coords))) == 1:
            return "Smooth"
        return _simplex_kind(coords)
    c = cone_from_rays(coords, k)
    faces_by_dim = defaultdict(list)
    for fs in face_index_sets(c):
        faces_by_dim[face_dimension(c, fs)].append(fs)
    worst = 1  # Terminal
    for simplex in _pulling_triangulation(c, frozenset(range(len(c.rays))), k, faces_by_dim):
        kind = _simplex_kind([c.rays[i] for i in sorted(simplex)])
        worst = max(worst, KINDS.index(kind))
        if kind == "KltOnly":
            break
    return KINDS[worst]


@dataclass(frozen=True)
class SingularityClass:
    kind: str
    gorenstein_index: int
    is_q_factorial: bool
    cone_kinds: tuple[str, ...] = ()

    @property
    def is_terminal(self) -> bool:
        return self.kind in ("Smooth", "Terminal")

    @property
    def is_canonical(self) -> bool:
        return self.kind != "KltOnly"

    def __str__(self):
        return self.kind


def classify(f: Fan) -> SingularityClass:
    data = q_gorenstein_data(f)
    kinds = tuple(cone_discrepancy_kind(f.rays_of(c), f.ambient_rank) for c in f.max_cones)
    worst = max(KINDS.index(k) for k in kinds)
    return SingularityClass(
        kind=KINDS[worst],
        gorenstein_index=data.gorenstein_index,
        is_q_factorial=f.is_simplicial,
        cone_kinds=kinds)


@dataclass(frozen=True)
class CyclicQuotient:
    """The quotient A^n / mu_r with mu_r acting by weights (a_1, ..., a_n)."""

    order: int
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(a) for a in self.weights))
        if self.order < 1:
            raise ValueError("order must be positive")
        if not self.weights:
            raise ValueError("at least one weight required")
        if any(not 0 <= a < self.order for a in self.weights):
            raise ValueError(f"weights must lie in [0, {self.order})")
        if gcd_list((self.order,) + self.weights) != 1:
            raise ValueError(f"gcd of order and weights must be 1 for 1/{self.order}{self.weights}")

    def without_reflections(self) -> CyclicQuotient:
        """Equivalent quotient by a group containing no quasi-reflections.

        Elements acting only on x_i generate a subgroup of order
        g_i = gcd(r, a_j : j != i); dividing them out replaces x_i by x_i^g_i
        and leaves a cyclic group of order r / prod(g_i).
        """
        q = self
        while True:
            r, a = q.order, q.weights
            g = [gcd(r, gcd_list(a[:i] + a[i + 1:])) for i in range(len(a))]
            total = 1
            for x in g:
                total *= x
            if total == 1:
                return q
            r2 = r // total
            new = []
            for i, ai in enumerate(a):
                others = total // g[i]
                new.append((ai // others) % r2 if r2 > 1 else 0)
            q = CyclicQuotient(r2, tuple(new))

    def __str__(self):
        return f"1/{self.order}({','.join(map(str, self.weights))})"


@dataclass(frozen=True)
class ReidTaiResult:
    kind: str  # Terminal, Canonical or Neither
    gorenstein: bool
    ages: tuple[Fraction, ...]
    reduced: CyclicQuotient


def reid_tai(q: CyclicQuotient) -> ReidTaiResult:
    if q.order > MAX_QUOTIENT_ORDER:
        raise ValueError(f"order {q.order} exceeds the cap {MAX_QUOTIENT_ORDER}")
    red = q.without_reflections()
    r, a = red.order, red.weights
    ages = tuple(sum((Fraction(k * ai % r, r) for ai in a), Fraction(0)) for k in range(1, r))
    if all(x > 1 for x in ages):
        kind = "Terminal"
    elif all(x >= 1 for x in ages):
        kind = "Canonical"
    else:
        kind = "Neither"
    return ReidTaiResult(kind, sum(a) % r == 0, ages, red)


def cone_quotient(rays: Sequence[Sequence[int]], ambient_rank: int) -> CyclicQuotient | None:
    """The cyclic quotient presenting a simplicial cone, or None if not cyclic.

    The group is the lattice of the span modulo the sublattice spanned by the
    rays; weights are listed in the order of `rays`.
    """
    basis, coords = intrinsic_coordinates(rays, ambient_rank)
    k = len(basis)
    if len(coords) != k:
        return None
    B = IntMatrix.from_rows(coords)
    snf = smith_normal_form(B)
    nontrivial = [d for d in snf.invariant_factors if d != 1]
    if not nontrivial:
        return CyclicQuotient(1, (0,) * k)
    if len(nontrivial) > 1:
        return None
    m = nontrivial[0]
    pos = snf.invariant_factors.index(m)
    e = [int(i == pos) for i in range(k)]
    # generator x with x V = e_pos, then its coordinates in the ray basis
    x = solve_rational(snf.V.transpose().to_rows(), e)
    c = solve_rational(B.transpose().to_rows(), x)
    return CyclicQuotient(m, tuple(int(ci * m) % m for ci in c))


def regularity_kind_for_reid_tai(kind: str) -> str:
    """Map classify() kinds onto the Reid-Tai vocabulary."""
    return {"Smooth": "Terminal", "Terminal": "Terminal",
            "Canonical": "Canonical", "KltOnly": "Neither"}[kind]


__all__ = [
    "QGorensteinData", "SingularityClass", "CyclicQuotient", "ReidTaiResult",
    "q_gorenstein_data", "classify", "reid_tai", "cone_quotient",
    "cone_discrepancy_kind", "regularity_kind_for_reid_tai", "cone_regularity",
]
