"""Fans of the toric varieties that come up in the verification suite."""
from __future__ import annotations

import itertools
import warnings
from typing import Sequence

from .errors import IllFormedWeights
from .fans import Fan, star_subdivision
from .lattice import (IntMatrix, coordinates_in_basis, gcd_list, hermite_normal_form,
                      primitive, relation_embedding)
from .singularities import CyclicQuotient


def _unit(n: int, i: int) -> tuple[int, ...]:
    return tuple(int(j == i) for j in range(n))


def _all_proper_subsets(m: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(j for j in range(m) if j != i) for i in range(m))


def projective_space(n: int) -> Fan:
    """P^n: rays e_1..e_n and -(e_1+...+e_n) (the last ray)."""
    if n < 1:
        raise ValueError("projective_space needs n >= 1")
    rays = [_unit(n, i) for i in range(n)] + [tuple(-1 for _ in range(n))]
    return Fan(n, tuple(rays), _all_proper_subsets(n + 1))


def product(f: Fan, g: Fan) -> Fan:
    """Product fan; rays of f come first, padded with zeros."""
    n, m = f.ambient_rank, g.ambient_rank
    rays = [r + (0,) * m for r in f.rays] + [(0,) * n + r for r in g.rays]
    shift = len(f.rays)
    cones = [a + tuple(shift + j for j in b) for a, b in itertools.product(f.max_cones, g.max_cones)]
    return Fan(n + m, tuple(rays), tuple(cones))


def well_formed(weights: Sequence[int]) -> tuple[int, ...]:
    """Reduce weights until no n of the n+1 share a common factor."""
    w = [int(x) for x in weights]
    g = gcd_list(w)
    w = [x // g for x in w]
    changed = True
    while changed:
        changed = False
        for i in range(len(w)):
            d = gcd_list(w[:i] + w[i + 1:])
            if d > 1:
                w = [x if j == i else x // d for j, x in enumerate(w)]
                changed = True
    return tuple(w)


def weighted_projective(weights: Sequence[int]) -> Fan:
    """P(w_0, ..., w_n): n+1 rays in Z^n with sum w_i v_i = 0.

    Ill-formed weights are reduced first (with a warning); the result is
    isomorphic to the requested space.
    """
    w = tuple(int(x) for x in weights)
    if len(w) < 2 or any(x <= 0 for x in w):
        raise IllFormedWeights(f"weights {w} must be at least two positive integers")
    wf = well_formed(w)
    if wf != w:
        warnings.warn(f"weights {w} reduced to well-formed {wf}", stacklevel=2)
    rays = relation_embedding(wf)
    return Fan(len(wf) - 1, rays, _all_proper_subsets(len(wf)))


def blowup_linear_subspace(n: int, k: int) -> Fan:
    """Blow-up of P^n along the coordinate P^k where x_{k+1} = ... = x_n = 0.

    The center is the orbit closure of cone(e_{k+1}, ..., e_n); the new ray
    e_{k+1} + ... + e_n comes last.
    """
    if not 0 <= k <= n - 2:
        raise ValueError("need 0 <= k <= n-2")
    center = tuple(int(j >= k) for j in range(n))
    return star_subdivision(projective_space(n), center)


def split_bundle_projectivization(n: int, twists: Sequence[int]) -> Fan:
    """P(O(a_1) + ... + O(a_r)) over P^n, of rank n + r - 1.

    Ray order: e_1..e_n, the twisted base ray (-1,...,-1, a_1-a_r, ..., a_{r-1}-a_r),
    then the fiber simplex f_1..f_{r-1}, -(f_1+...+f_{r-1}).
    """
    a = [int(x) for x in twists]
    r = len(a)
    if n < 1 or r < 2:
        raise ValueError("need a base P^n with n >= 1 and at least two twists")
    dim = n + r - 1
    base = [_unit(dim, i) for i in range(n)]
    base.append(tuple([-1] * n + [a[j] - a[-1] for j in range(r - 1)]))
    fiber = [_unit(dim, n + j) for j in range(r - 1)]
    fiber.append(tuple([0] * n + [-1] * (r - 1)))
    rays = base + fiber
    cones = []
    for b in _all_proper_subsets(n + 1):
        for f in _all_proper_subsets(r):
            cones.append(b + tuple(n + 1 + j for j in f))
    return Fan(dim, tuple(rays), tuple(cones))


def hirzebruch(a: int) -> Fan:
    return split_bundle_projectivization(1, (0, a))


def cyclic_quotient_cone(order: int, weights: Sequence[int]) -> Fan:
    """Affine fan of A^n / mu_r with weights a.

    The lattice is Z^n + Z*(a/r); coordinates come from its HNF basis, and
    each ray is the primitive generator of cone(e_i) in that lattice.
    """
    q = CyclicQuotient(order, tuple(weights))
    r, a = q.order, q.weights
    n = len(a)
    gens = [tuple(r * x for x in _unit(n, i)) for i in range(n)] + [a]
    H, _ = hermite_normal_form(IntMatrix.from_rows(gens))
    basis = [row for row in H.row_tuples() if any(row)]
    rays = []
    for i in range(n):
        c = coordinates_in_basis(basis, tuple(r * x for x in _unit(n, i)))
        rays.append(primitive([int(x) for x in c]))
    return Fan(n, tuple(rays), (tuple(range(n)),))


def node_cone() -> Fan:
    """Affine 3-fold node: the cone over the unit square at height one."""
    return Fan.affine([(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)])


def quadric_threefold_node() -> Fan:
    """Projective cone over a smooth quadric surface (a quadric 3-fold with one node).

    The node cone plus four smooth cones joining each edge of the square to
    the ray -(1, 1, 2) opposite the square's center.
    """
    rays = ((0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1), (-1, -1, -2))
    cones = ((0, 1, 2, 3), (0, 1, 4), (1, 3, 4), (2, 3, 4), (0, 2, 4))
    return Fan(3, rays, cones)


def quadric_surface_node() -> Fan:
    """The quadric cone surface, which is P(1,1,2)."""
    return weighted_projective((1, 1, 2))


BUILDERS = {
    "projective_space": projective_space,
    "weighted_projective": weighted_projective,
    "blowup_linear_subspace": blowup_linear_subspace,
    "split_bundle_projectivization": split_bundle_projectivization,
    "hirzebruch": hirzebruch,
    "cyclic_quotient_cone": cyclic_quotient_cone,
    "node_cone": node_cone,
    "quadric_threefold_node": quadric_threefold_node,
    "product_projective": lambda a, b: product(projective_space(a), projective_space(b)),
}
