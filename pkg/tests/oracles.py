"""Slow, independent reference computations used to cross-check the engine.

Nothing here imports torickit: determinants are Leibniz sums, facets come
from enumerating hyperplanes through n-1 rays, and simplex membership uses
the adjugate.
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction
from math import gcd


def det_leibniz(M):
    n = len(M)
    if n == 0:
        return 1
    total = 0
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inv % 2 else 1
        for i, p in enumerate(perm):
            term *= M[i][p]
            if term == 0:
                break
        total += term
    return total


def determinantal_divisors(A):
    """gcd of all k x k minors for k = 1..min(m, n), stopping at the first zero."""
    m, n = len(A), len(A[0])
    out = []
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in itertools.combinations(range(m), k):
            for cols in itertools.combinations(range(n), k):
                g = gcd(g, det_leibniz([[A[i][j] for j in cols] for i in rows]))
        if g == 0:
            break
        out.append(g)
    return out


def invariant_factors_oracle(A):
    dd = determinantal_divisors(A)
    prev, out = 1, []
    for d in dd:
        out.append(d // prev)
        prev = d
    return out


def primitive(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    return tuple(x // g for x in v) if g else tuple(v)


def cofactor_normal(vectors, n):
    """Vector orthogonal to n-1 vectors in Q^n (generalized cross product)."""
    out = []
    for i in range(n):
        minor = [[v[j] for j in range(n) if j != i] for v in vectors]
        out.append((-1) ** i * det_leibniz(minor))
    return tuple(out)


def brute_force_facets(rays, n):
    """Primitive inner facet normals of a full-dimensional pointed cone."""
    facets = set()
    for sub in itertools.combinations(rays, n - 1):
        u = cofactor_normal(sub, n)
        if not any(u):
            continue
        vals = [sum(a * b for a, b in zip(u, r)) for r in rays]
        if all(x >= 0 for x in vals):
            facets.add(primitive(u))
        elif all(x <= 0 for x in vals):
            facets.add(primitive(tuple(-x for x in u)))
    # drop hyperplanes that only touch a lower-dimensional face
    real = set()
    for u in facets:
        on = [r for r in rays if sum(a * b for a, b in zip(u, r)) == 0]
        if _rank(on) == n - 1:
            real.add(u)
    return real


def _rank(rows):
    M = [[Fraction(x) for x in r] for r in rows]
    rk = 0
    cols = len(M[0]) if M else 0
    for c in range(cols):
        piv = next((i for i in range(rk, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[rk], M[piv] = M[piv], M[rk]
        for i in range(len(M)):
            if i != rk and M[i][c] != 0:
                f = M[i][c] / M[rk][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[rk])]
        rk += 1
    return rk


def _adjugate(A):
    n = len(A)
    return [[(-1) ** (i + j) * det_leibniz([r[:i] + r[i + 1:] for k, r in enumerate(A) if k != j])
             for j in range(n)] for i in range(n)]


def box_scan_simplex(vertices):
    """Integer points of a full-dimensional simplex: barycentric coordinates via the adjugate."""
    n = len(vertices[0])
    A = [[v[i] for v in vertices] for i in range(n)] + [[1] * (n + 1)]
    sign = 1 if det_leibniz(A) > 0 else -1
    adj = [[sign * x for x in row] for row in _adjugate(A)]
    lo = [min(v[i] for v in vertices) for i in range(n)]
    hi = [max(v[i] for v in vertices) for i in range(n)]
    pts = []
    for x in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        b = x + (1,)
        if all(sum(c * y for c, y in zip(row, b)) >= 0 for row in adj):
            pts.append(x)
    return sorted(pts)


def random_unimodular(rng: random.Random, n: int, steps: int = 6):
    """Product of random elementary matrices and a signed permutation."""
    M = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        k = rng.choice([-2, -1, 1, 2])
        M[i] = [a + k * b for a, b in zip(M[i], M[j])]
    perm = list(range(n))
    rng.shuffle(perm)
    signs = [rng.choice([-1, 1]) for _ in range(n)]
    return [[s * x for x in M[p]] for p, s in zip(perm, signs)]


def apply(M, v):
    return tuple(sum(M[i][j] * v[j] for j in range(len(v))) for i in range(len(M)))


def cokernel_order_by_counting(A):
    """|Z^m / A Z^n| for a square nonsingular A, by counting box points of the lattice.

    The sublattice A Z^n contains |det A| Z^m, so residues of Z^m mod it are
    the points of the box [0, |det|)^m; count those lying in A Z^n.
    """
    m = len(A)
    d = abs(det_leibniz(A))
    if d == 0:
        raise ValueError("singular")
    count = 0
    for x in itertools.product(range(d), repeat=m):
        # x in A Z^n  iff  A^{-1} x integral (Cramer)
        ok = True
        for k in range(m):
            Ak = [row[:k] + [x[i]] + row[k + 1:] for i, row in enumerate(A)]
            if det_leibniz(Ak) % d:
                ok = False
                break
        if ok:
            count += 1
    return d ** m // count
