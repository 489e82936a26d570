"""Fans: validated collections of cones sharing a ray list."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .cones import (Cone, Regularity, cone_from_rays, cone_regularity, face_dimension,
                    face_index_sets, intersect)
from .errors import NotComplete, RayOutsideSupport
from .lattice import gcd_list, primitive, rank

Vector = tuple[int, ...]
IndexSet = tuple[int, ...]


@dataclass(frozen=True)
class Fan:
    """A fan given by its rays and the ray-index sets of its maximal cones.

    Construction only checks structure (primitive distinct rays, indices in
    range, every ray used). Geometric compatibility is the job of
    `validate_fan`.
    """

    ambient_rank: int
    rays: tuple[Vector, ...]
    max_cones: tuple[IndexSet, ...]

    def __post_init__(self):
        rays = tuple(tuple(int(x) for x in r) for r in self.rays)
        cones = tuple(tuple(sorted(set(int(i) for i in c))) for c in self.max_cones)
        object.__setattr__(self, "rays", rays)
        object.__setattr__(self, "max_cones", cones)
        n = self.ambient_rank
        if n < 1:
            raise ValueError("ambient rank must be positive")
        for r in rays:
            if len(r) != n:
                raise ValueError(f"ray {r} does not live in Z^{n}")
            if gcd_list(r) != 1:
                raise ValueError(f"ray {r} is zero or not primitive")
        if len(set(rays)) != len(rays):
            raise ValueError("duplicate rays")
        if not cones:
            raise ValueError("a fan needs at least one maximal cone")
        used = set()
        for c in cones:
            if not c:
                raise ValueError("empty maximal cone")
            for i in c:
                if not 0 <= i < len(rays):
                    raise ValueError(f"ray index {i} out of range")
            used.update(c)
        if used != set(range(len(rays))):
            raise ValueError(f"rays {sorted(set(range(len(rays))) - used)} lie in no maximal cone")

    @classmethod
    def affine(cls, rays: Sequence[Sequence[int]]) -> Fan:
        """The fan of one cone and its faces."""
        rays = [primitive(r) for r in rays]
        return cls(len(rays[0]), tuple(rays), (tuple(range(len(rays))),))

    def cone(self, index: int) -> Cone:
        return self.max_cone_objects[index]

    @cached_property
    def max_cone_objects(self) -> tuple[Cone, ...]:
        return tuple(cone_from_rays([self.rays[i] for i in c], self.ambient_rank)
                     for c in self.max_cones)

    def rays_of(self, index_set: Sequence[int]) -> list[Vector]:
        return [self.rays[i] for i in index_set]

    @cached_property
    def cones(self) -> dict[IndexSet, int]:
        """Every cone of the fan (as a sorted ray-index tuple) with its dimension.

        The origin appears as the empty tuple.
        """
        lookup = {r: i for i, r in enumerate(self.rays)}
        out: dict[IndexSet, int] = {}
        for c in self.max_cone_objects:
            for s in face_index_sets(c):
                key = tuple(sorted(lookup[c.rays[i]] for i in s))
                if key not in out:
                    out[key] = face_dimension(c, s)
        return out

    def cones_of_dim(self, d: int) -> list[IndexSet]:
        return sorted(k for k, dim in self.cones.items() if dim == d)

    @cached_property
    def is_simplicial(self) -> bool:
        return all(len(c.rays) == c.dim for c in self.max_cone_objects)

    @cached_property
    def is_smooth(self) -> bool:
        return all(cone_regularity(c).is_smooth for c in self.max_cone_objects)

    def cone_containing(self, v: Sequence[int]) -> int | None:
        """Index of the first maximal cone containing v."""
        return next((i for i, c in enumerate(self.max_cone_objects) if c.contains(v)), None)

    def to_dict(self) -> dict:
        return {"ambient_rank": self.ambient_rank,
                "rays": [list(r) for r in self.rays],
                "max_cones": [list(c) for c in self.max_cones]}

    @classmethod
    def from_dict(cls, data: dict) -> Fan:
        return cls(int(data["ambient_rank"]),
                   tuple(tuple(r) for r in data["rays"]),
                   tuple(tuple(c) for c in data["max_cones"]))


@dataclass(frozen=True)
class Violation:
    cones: tuple[int, ...]
    message: str

    def __str__(self):
        return f"cones {list(self.cones)}: {self.message}"


def validate_fan(f: Fan) -> list[Violation]:
    """Geometric validity problems of f; an empty list means the fan is valid."""
    out = []
    cones = f.max_cone_objects
    for i, (idx, c) in enumerate(zip(f.max_cones, cones)):
        if not c.is_pointed:
            out.append(Violation((i,), "cone is not pointed"))
            continue
        listed = set(f.rays_of(idx))
        if listed != set(c.rays):
            extra = sorted(listed - set(c.rays))
            out.append(Violation((i,), f"listed rays {extra} are not extreme rays"))
    if out:
        return out
    face_sets = [set(tuple(sorted(idx[k] for k in s)) for s in face_index_sets(c))
                 for idx, c in zip(f.max_cones, cones)]
    for i in range(len(cones)):
        for j in range(i + 1, len(cones)):
            common = tuple(sorted(set(f.max_cones[i]) & set(f.max_cones[j])))
            if common not in face_sets[i] or common not in face_sets[j]:
                out.append(Violation((i, j), f"shared rays {list(common)} do not form a common face"))
                continue
            meet = intersect(cones[i], cones[j])
            expected = cone_from_rays(f.rays_of(common), f.ambient_rank)
            if meet != expected:
                out.append(Violation((i, j), "cones overlap beyond their common face"))
            elif set(f.max_cones[i]) <= set(f.max_cones[j]) or set(f.max_cones[j]) <= set(f.max_cones[i]):
                out.append(Violation((i, j), "one maximal cone is a face of the other"))
    return out


def _facet_incidence(f: Fan) -> dict[IndexSet, list[int]]:
    """Codimension-one faces of maximal cones mapped to the maximal cones containing them."""
    inc: dict[IndexSet, list[int]] = defaultdict(list)
    for ci, (idx, c) in enumerate(zip(f.max_cones, f.max_cone_objects)):
        for s in face_index_sets(c):
            if face_dimension(c, s) == c.dim - 1:
                inc[tuple(sorted(idx[k] for k in s))].append(ci)
    return inc


def is_complete(f: Fan) -> bool:
    """Support is all of R^n, decided by facet pairing."""
    n = f.ambient_rank
    if any(c.dim != n for c in f.max_cone_objects):
        return False
    inc = _facet_incidence(f)
    if any(len(v) != 2 for v in inc.values()):
        return False
    # wall graph must be connected
    adj = defaultdict(set)
    for a, b in inc.values():
        adj[a].add(b)
        adj[b].add(a)
    seen = {0}
    stack = [0]
    while stack:
        for nb in adj[stack.pop()]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(f.max_cones)


@dataclass(frozen=True)
class RegularityProfile:
    """Per-dimension regularity of the cones of a fan; index d-1 holds dimension d."""

    smooth: tuple[bool, ...]
    simplicial: tuple[bool, ...]

    def smooth_in_codim(self, k: int) -> bool:
        return all(self.smooth[:k])

    def qfactorial_in_codim(self, k: int) -> bool:
        return all(self.simplicial[:k])


def regularity_profile(f: Fan) -> RegularityProfile:
    smooth, simplicial = [], []
    for d in range(1, f.ambient_rank + 1):
        regs = [cone_regularity(cone_from_rays(f.rays_of(s), f.ambient_rank))
                for s in f.cones_of_dim(d)]
        smooth.append(all(r.is_smooth for r in regs))
        simplicial.append(all(r.is_simplicial for r in regs))
    return RegularityProfile(tuple(smooth), tuple(simplicial))


def cone_regularities(f: Fan) -> list[Regularity]:
    return [cone_regularity(c) for c in f.max_cone_objects]


def star_subdivision(f: Fan, ray: Sequence[int]) -> Fan:
    """Stellar subdivision of f at a lattice vector of its support."""
    v = primitive(tuple(int(x) for x in ray))
    if not any(v):
        raise ValueError("cannot subdivide at the origin")
    if v in f.rays:
        return f
    hit = [i for i, c in enumerate(f.max_cone_objects) if c.contains(v)]
    if not hit:
        raise RayOutsideSupport(f"{v} is not in the support of the fan")
    new_index = len(f.rays)
    new_cones = []
    for i, (idx, c) in enumerate(zip(f.max_cones, f.max_cone_objects)):
        if i not in hit:
            new_cones.append(idx)
            continue
        for s in face_index_sets(c):
            if face_dimension(c, s) != c.dim - 1:
                continue
            facet = cone_from_rays([c.rays[k] for k in s], f.ambient_rank)
            if facet.contains(v):
                continue
            lookup = {r: g for g, r in zip(idx, f.rays_of(idx))}
            new_cones.append(tuple(sorted(lookup[c.rays[k]] for k in s)) + (new_index,))
    seen = []
    for c in new_cones:
        if c not in seen:
            seen.append(c)
    return Fan(f.ambient_rank, f.rays + (v,), tuple(seen))


@dataclass(frozen=True)
class Wall:
    cones: tuple[int, int]
    face: IndexSet


def walls(f: Fan) -> list[Wall]:
    """Interior codimension-one cones with their two adjacent maximal cones."""
    n = f.ambient_rank
    if any(c.dim != n for c in f.max_cone_objects):
        raise NotComplete("walls need all maximal cones full-dimensional")
    out = [Wall(tuple(sorted(cs)), face) for face, cs in _facet_incidence(f).items() if len(cs) == 2]
    return sorted(out, key=lambda w: (w.cones, w.face))


def max_cone_facet_count(f: Fan) -> int:
    return sum(len(v) for v in _facet_incidence(f).values())


def spans(f: Fan) -> bool:
    return rank(list(f.rays)) == f.ambient_rank
