"""Class groups, Picard groups and Cartier tests of toric varieties.

Cl(X) is the cokernel of M -> Z^{rays}, m -> (<m, v_rho>)_rho. Pic(X) is the
subgroup of classes of divisors that are locally principal on every
maximal cone.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NotComplete, RaysDoNotSpan
from .fans import Fan, is_complete
from .lattice import (AbelianGroupStructure, IntMatrix, cokernel_structure, dot,
                      hermite_normal_form, kernel_basis, lattice_basis, lcm_list,
                      smith_normal_form, solve_rational)
from .singularities import intrinsic_coordinates


@dataclass(frozen=True)
class ToricDivisor:
    """Integer combination sum d_rho D_rho of the torus-invariant prime divisors."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))

    @classmethod
    def anticanonical(cls, f: Fan) -> ToricDivisor:
        return cls((1,) * len(f.rays))

    @classmethod
    def prime(cls, f: Fan, index: int) -> ToricDivisor:
        return cls(tuple(int(i == index) for i in range(len(f.rays))))

    @classmethod
    def principal(cls, f: Fan, m: Sequence[int]) -> ToricDivisor:
        return cls(tuple(dot(m, v) for v in f.rays))

    def check_length(self, f: Fan):
        if len(self.coefficients) != len(f.rays):
            raise ValueError(f"divisor has {len(self.coefficients)} coefficients, fan has {len(f.rays)} rays")

    def __add__(self, other):
        return ToricDivisor(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other):
        return ToricDivisor(tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def __rmul__(self, k: int):
        return ToricDivisor(tuple(k * a for a in self.coefficients))

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            terms.append(f"{sign} {mag}D{i}")
        if not terms:
            return "0"
        s = " ".join(terms)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


@dataclass(frozen=True)
class DivisorClass:
    free: tuple[int, ...]
    torsion: tuple[int, ...] = ()

    def __str__(self):
        return f"{list(self.free)}" + (f" (torsion {list(self.torsion)})" if self.torsion else "")


@dataclass(frozen=True)
class ClassGroup:
    """Cl(X) with a fixed SNF-derived basis.

    `free_rows` are linear forms on divisor space giving the free coordinates
    (HNF-normalized); `torsion_rows[i]` is read modulo `structure.torsion[i]`.
    """

    structure: AbelianGroupStructure
    free_rows: tuple[tuple[int, ...], ...]
    torsion_rows: tuple[tuple[int, ...], ...]
    transform: IntMatrix  # unimodular: SNF row transform with HNF free block
    torsion_positions: tuple[int, ...] = ()

    def project(self, d: ToricDivisor | Sequence[int]) -> DivisorClass:
        coeffs = d.coefficients if isinstance(d, ToricDivisor) else tuple(d)
        free = tuple(dot(r, coeffs) for r in self.free_rows)
        tors = tuple(dot(r, coeffs) % t for r, t in zip(self.torsion_rows, self.structure.torsion))
        return DivisorClass(free, tors)

    def lift(self, cls: DivisorClass) -> ToricDivisor:
        """Some torus-invariant divisor in the given class."""
        m = self.transform.rows
        target = [0] * m
        for pos, t in zip(self.torsion_positions, cls.torsion):
            target[pos] = t
        first_free = m - len(self.free_rows)
        for k, v in enumerate(cls.free):
            target[first_free + k] = v
        x = solve_rational(self.transform.to_rows(), target)
        return ToricDivisor(tuple(int(c) for c in x))

    def ray_classes(self, f: Fan) -> list[DivisorClass]:
        return [self.project(ToricDivisor.prime(f, i)) for i in range(len(f.rays))]


def _ray_matrix(f: Fan) -> IntMatrix:
    return IntMatrix.from_rows(f.rays)


def class_group(f: Fan) -> ClassGroup:
    R = _ray_matrix(f)
    n = f.ambient_rank
    snf = smith_normal_form(R)
    if snf.rank < n:
        raise RaysDoNotSpan(f"rays span a rank-{snf.rank} sublattice of Z^{n}")
    U = snf.U.to_rows()
    factors = snf.invariant_factors
    free_block = U[n:]
    if free_block:
        H, _ = hermite_normal_form(IntMatrix.from_rows(free_block))
        U[n:] = H.to_rows()
    torsion_idx = [i for i in range(n) if factors[i] > 1]
    return ClassGroup(
        structure=cokernel_structure(R),
        free_rows=tuple(tuple(r) for r in U[n:]),
        torsion_rows=tuple(tuple(U[i]) for i in torsion_idx),
        transform=IntMatrix.from_rows(U, len(f.rays)),
        torsion_positions=tuple(torsion_idx))


@dataclass(frozen=True)
class CartierStatus:
    kind: str  # Cartier, QCartier, NotQCartier
    index: int | None = None

    @property
    def is_q_cartier(self) -> bool:
        return self.kind != "NotQCartier"

    def __str__(self):
        if self.kind == "QCartier":
            return f"QCartierOfIndex({self.index})"
        return self.kind


def local_cartier_data(f: Fan, d: ToricDivisor, cone_index: int) -> tuple[Fraction, ...] | None:
    """Intrinsic m_sigma with <m_sigma, v> = -d_v on the rays of one maximal cone."""
    idx = f.max_cones[cone_index]
    _, coords = intrinsic_coordinates(f.rays_of(idx), f.ambient_rank)
    return solve_rational(coords, [-d.coefficients[i] for i in idx])


def cartier_test(f: Fan, d: ToricDivisor) -> CartierStatus:
    d.check_length(f)
    dens = []
    for i in range(len(f.max_cones)):
        m = local_cartier_data(f, d, i)
        if m is None:
            return CartierStatus("NotQCartier")
        dens.extend(x.denominator for x in m)
    index = lcm_list(dens)
    return CartierStatus("Cartier", 1) if index == 1 else CartierStatus("QCartier", index)


def _intersect_lattices(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], dim: int):
    if not a or not b:
        return ()
    M = IntMatrix.from_rows(list(a) + [tuple(-x for x in r) for r in b], dim).transpose()
    K = kernel_basis(M)
    gens = []
    for col in K.col_tuples():
        u = col[:len(a)]
        gens.append(tuple(sum(c * r[j] for c, r in zip(u, a)) for j in range(dim)))
    return lattice_basis(gens, dim)


def cartier_divisor_lattice(f: Fan) -> tuple[tuple[int, ...], ...]:
    """Basis of the torus-invariant Cartier divisors inside Z^{rays}."""
    m = len(f.rays)
    lattice = tuple(tuple(int(i == j) for j in range(m)) for i in range(m))
    for idx in f.max_cones:
        _, coords = intrinsic_coordinates(f.rays_of(idx), f.ambient_rank)
        gens = []
        for k in range(len(coords[0])):
            v = [0] * m
            for pos, ray in zip(idx, coords):
                v[pos] = ray[k]
            gens.append(tuple(v))
        for j in range(m):
            if j not in idx:
                gens.append(tuple(int(i == j) for i in range(m)))
        lattice = _intersect_lattices(lattice, lattice_basis(gens, m), m)
    return lattice


def picard_group(f: Fan) -> AbelianGroupStructure:
    if not is_complete(f):
        raise NotComplete("the Picard group is computed for complete fans only")
    basis = cartier_divisor_lattice(f)
    n = f.ambient_rank
    coeff_rows = []
    for i in range(n):
        p = [v[i] for v in f.rays]
        c = solve_rational([list(col) for col in zip(*basis)], p)
        coeff_rows.append([int(x) for x in c])
    # Pic = Z^k / (principal divisors written in the Cartier basis)
    return cokernel_structure(IntMatrix.from_rows(coeff_rows, len(basis)).transpose())
