"""Exact integer linear algebra: Smith/Hermite normal forms, kernels, cokernels.

Everything here works over Python ints (and `fractions.Fraction` where a
rational solve is unavoidable); there is no floating point anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


def gcd_list(values: Iterable[int]) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g


def lcm_list(values: Iterable[int]) -> int:
    out = 1
    for v in values:
        if v:
            out = out * abs(v) // gcd(out, v)
    return out


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries."""
    g = gcd_list(v)
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


def primitive_from_rational(v: Sequence[Fraction | int]) -> tuple[int, ...]:
    """Smallest positive integer multiple of a rational vector, made primitive."""
    den = lcm_list(Fraction(x).denominator for x in v)
    return primitive([int(Fraction(x) * den) for x in v])


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}")
        for x in self.entries:
            if not isinstance(x, int) or isinstance(x, bool):
                raise TypeError(f"matrix entries must be int, got {type(x).__name__}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [tuple(int(x) for x in r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cannot infer column count of an empty matrix")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int | None = None) -> IntMatrix:
        if not columns:
            if rows is None:
                raise ValueError("cannot infer row count of an empty matrix")
            return cls(rows, 0, ())
        return cls.from_rows(columns).transpose()

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple[int, ...]:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def row_tuples(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.row(i) for i in range(self.rows))

    def col_tuples(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.col(j) for j in range(self.cols))

    def transpose(self) -> IntMatrix:
        return IntMatrix(self.cols, self.rows,
                         tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    T = property(transpose)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        ocols = other.col_tuples()
        return IntMatrix(self.rows, other.cols, tuple(
            dot(self.row(i), c) for i in range(self.rows) for c in ocols))

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        """Matrix-vector product A @ v."""
        return tuple(dot(self.row(i), v) for i in range(self.rows))

    def is_diagonal(self) -> bool:
        return all(self[i, j] == 0 for i in range(self.rows) for j in range(self.cols) if i != j)

    def __repr__(self):
        return f"IntMatrix({self.to_rows()})"


def _bareiss(rows: list[list], cols: int) -> tuple[int, list[list]]:
    """Fraction-free elimination; returns (rank, reduced rows)."""
    m = [list(r) for r in rows]
    rank = 0
    prev = 1
    for c in range(cols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][c]
        for i in range(rank + 1, len(m)):
            for j in range(c + 1, cols):
                m[i][j] = (m[i][j] * p - m[rank][j] * m[i][c]) // prev
            m[i][c] = 0
        prev = p
        rank += 1
    return rank, m


def rank(A: IntMatrix | Sequence[Sequence[int]]) -> int:
    if isinstance(A, IntMatrix):
        rows, cols = A.to_rows(), A.cols
    else:
        rows = [list(r) for r in A]
        cols = len(rows[0]) if rows else 0
    if not rows or cols == 0:
        return 0
    return _bareiss(rows, cols)[0]


def det(A: IntMatrix) -> int:
    if A.rows != A.cols:
        raise ValueError("determinant of a non-square matrix")
    n = A.rows
    if n == 0:
        return 1
    m = A.to_rows()
    sign = 1
    prev = 1
    for k in range(n):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def solve_rational(A: Sequence[Sequence], b: Sequence) -> tuple[Fraction, ...] | None:
    """One rational solution of A x = b (free variables set to 0), or None.

    A is given as a list of rows; the solution length is the column count.
    """
    rows = [[Fraction(x) for x in r] + [Fraction(bi)] for r, bi in zip(A, b)]
    if not rows:
        return None
    ncols = len(rows[0]) - 1
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        rows[r] = [x / p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if any(rows[i][-1] != 0 for i in range(r, len(rows))):
        return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = rows[i][-1]
    return tuple(x)


@dataclass(frozen=True)
class SnfDecomposition:
    """U @ A @ V == D with U, V unimodular and D in Smith normal form."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    invariant_factors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.invariant_factors if d != 0)


def smith_normal_form(A: IntMatrix) -> SnfDecomposition:
    """Smith normal form with transforms.

    Pivot choice is fixed (smallest absolute nonzero entry of the active block,
    row-major tie-break) so the decomposition is a deterministic function of A.
    `invariant_factors` has length min(rows, cols); trailing zeros mark the
    rank deficiency.
    """
    if A.rows == 0 or A.cols == 0:
        raise ValueError("smith_normal_form needs a nonempty matrix")
    m, n = A.rows, A.cols
    D = A.to_rows()
    U = IntMatrix.identity(m).to_rows()
    V = IntMatrix.identity(n).to_rows()

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in D:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, k):  # row_dst += k * row_src
        D[dst] = [a + k * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + k * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, k):  # col_dst += k * col_src
        for r in D:
            r[dst] += k * r[src]
        for r in V:
            r[dst] += k * r[src]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = D[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        _, pi, pj = best
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            p = D[t][t]
            dirty = False
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
                    dirty = dirty or D[i][t] != 0
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
                    dirty = dirty or D[t][j] != 0
            if dirty:
                # a remainder is smaller than the pivot; move it into place
                best = None
                for i in range(t, m):
                    if D[i][t] and (best is None or abs(D[i][t]) < best[0]):
                        best = (abs(D[i][t]), i, t)
                for j in range(t, n):
                    if D[t][j] and (best is None or abs(D[t][j]) < best[0]):
                        best = (abs(D[t][j]), t, j)
                _, bi, bj = best
                swap_rows(t, bi)
                swap_cols(t, bj)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if D[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
        t += 1

    factors = tuple(D[i][i] for i in range(min(m, n)))
    return SnfDecomposition(
        U=IntMatrix.from_rows(U, m), D=IntMatrix.from_rows(D, n),
        V=IntMatrix.from_rows(V, n), invariant_factors=factors)


def invariant_factors(A: IntMatrix) -> tuple[int, ...]:
    return smith_normal_form(A).invariant_factors


def hermite_normal_form(A: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row-style HNF: returns (H, W) with W unimodular and H = W @ A.

    H is in row echelon form, pivots positive, entries above each pivot
    reduced into [0, pivot). Zero rows are at the bottom.
    """
    m, n = A.rows, A.cols
    H = A.to_rows()
    W = IntMatrix.identity(m).to_rows()
    r = 0
    for c in range(n):
        if r >= m:
            break
        while True:
            nz = [i for i in range(r, m) if H[i][c] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: (abs(H[i][c]), i))
            H[r], H[i0] = H[i0], H[r]
            W[r], W[i0] = W[i0], W[r]
            done = True
            for i in range(r + 1, m):
                if H[i][c]:
                    q = H[i][c] // H[r][c]
                    H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                    W[i] = [a - q * b for a, b in zip(W[i], W[r])]
                    if H[i][c]:
                        done = False
            if done:
                break
        if all(H[i][c] == 0 for i in range(r, m)):
            continue
        if H[r][c] < 0:
            H[r] = [-x for x in H[r]]
            W[r] = [-x for x in W[r]]
        for i in range(r):
            q = H[i][c] // H[r][c]
            if q:
                H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                W[i] = [a - q * b for a, b in zip(W[i], W[r])]
        r += 1
    return IntMatrix.from_rows(H, n), IntMatrix.from_rows(W, m)


def lattice_basis(vectors: Sequence[Sequence[int]], dim: int) -> tuple[tuple[int, ...], ...]:
    """HNF basis (as rows) of the lattice generated by `vectors` in Z^dim."""
    if not vectors:
        return ()
    H, _ = hermite_normal_form(IntMatrix.from_rows(vectors, dim))
    return tuple(r for r in H.row_tuples() if any(r))


def kernel_basis(A: IntMatrix) -> IntMatrix:
    """Columns form a Z-basis of {x in Z^cols : A x = 0}, in HNF-normalized form."""
    snf = smith_normal_form(A)
    r = snf.rank
    cols = [snf.V.col(j) for j in range(r, A.cols)]
    if not cols:
        return IntMatrix(A.cols, 0, ())
    basis = lattice_basis(cols, A.cols)
    return IntMatrix.from_rows(basis).transpose()


@dataclass(frozen=True)
class AbelianGroupStructure:
    """Z^free_rank + Z/t_1 + ... + Z/t_k with t_1 | t_2 | ... | t_k."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion {self.torsion} is not a divisibility chain")
        if any(t <= 1 for t in self.torsion):
            raise ValueError("torsion factors must exceed 1")

    @property
    def order(self) -> int | None:
        """Group order, or None if infinite."""
        if self.free_rank:
            return None
        out = 1
        for t in self.torsion:
            out *= t
        return out

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


def cokernel_structure(A: IntMatrix) -> AbelianGroupStructure:
    """Structure of Z^rows / A Z^cols."""
    snf = smith_normal_form(A)
    return AbelianGroupStructure(
        free_rank=A.rows - snf.rank,
        torsion=tuple(d for d in snf.invariant_factors if d > 1))


def saturated_span_basis(vectors: Sequence[Sequence[int]], dim: int) -> tuple[tuple[int, ...], ...]:
    """Basis (rows) of span_R(vectors) intersected with Z^dim."""
    vectors = [v for v in vectors if any(v)]
    if not vectors:
        return ()
    orth = kernel_basis(IntMatrix.from_rows(vectors, dim))
    if orth.cols == 0:
        return tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim))
    span = kernel_basis(orth.transpose())
    return span.col_tuples()


def orthogonal_complement_basis(vectors: Sequence[Sequence[int]], dim: int) -> tuple[tuple[int, ...], ...]:
    """Integer basis (rows) of {u : <u, v> = 0 for all v in vectors}."""
    vectors = [v for v in vectors if any(v)]
    if not vectors:
        return tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim))
    return kernel_basis(IntMatrix.from_rows(vectors, dim)).col_tuples()


def relation_embedding(coefficients: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Primitive images of e_1..e_m in the lattice Z^m / Z*c.

    Returns m vectors in Z^(m-1), generating it, with sum c_i v_i = 0 as the
    only relation. Coordinates are fixed by HNF so the output is canonical.
    """
    c = list(coefficients)
    if gcd_list(c) != 1:
        raise ValueError(f"relation {c} is not primitive")
    k = kernel_basis(IntMatrix.from_rows([c]))
    # rows of the kernel basis are the images; HNF the transpose for coordinates
    H, _ = hermite_normal_form(k.transpose())
    return H.col_tuples()


def coordinates_in_basis(basis: Sequence[Sequence[int]], v: Sequence[int]) -> tuple[Fraction, ...] | None:
    """Rational coefficients c with sum c_i basis_i = v, or None if v not in the span."""
    cols = list(zip(*basis)) if basis else []
    if not basis:
        return () if not any(v) else None
    return solve_rational(cols, v)
