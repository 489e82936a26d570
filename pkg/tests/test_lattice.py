import random

import pytest

from oracles import cokernel_order_by_counting, det_leibniz
from torickit.lattice import (AbelianGroupStructure, IntMatrix, cokernel_structure, det,
                              hermite_normal_form, kernel_basis, lattice_basis, primitive, rank,
                              relation_embedding, smith_normal_form, solve_rational)

N_CASES = 1000


def random_matrix(rng, m=None, n=None, lo=-6, hi=6):
    m = m or rng.randint(1, 4)
    n = n or rng.randint(1, 4)
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(m)]


def test_snf_small_known():
    snf = smith_normal_form(IntMatrix.from_rows([[2, 4], [6, 8]]))
    assert snf.invariant_factors == (2, 4)


def test_hnf_property_suite():
    rng = random.Random(7)
    for _ in range(N_CASES):
        A = IntMatrix.from_rows(random_matrix(rng))
        H, W = hermite_normal_form(A)
        assert (W @ A) == H
        assert abs(det(W)) == 1
        last_pivot = -1
        for row in H.row_tuples():
            if not any(row):
                last_pivot = A.cols
                continue
            assert last_pivot < A.cols, "zero rows must come last"
            p = next(j for j, x in enumerate(row) if x)
            assert p > last_pivot and row[p] > 0
            last_pivot = p


def test_kernel_basis_is_saturated_kernel():
    rng = random.Random(11)
    for _ in range(N_CASES // 2):
        A = IntMatrix.from_rows(random_matrix(rng, lo=-3, hi=3))
        K = kernel_basis(A)
        assert K.cols == A.cols - rank(A.to_rows())
        for col in K.col_tuples():
            assert A.apply(col) == (0,) * A.rows
        if K.cols:
            # saturated: all invariant factors of the basis are 1
            assert set(smith_normal_form(K).invariant_factors) <= {1}


def test_cokernel_order_matches_box_count():
    rng = random.Random(3)
    checked = 0
    while checked < 60:
        A = random_matrix(rng, 2, 2, -4, 4)
        d = det_leibniz(A)
        if d == 0 or abs(d) > 12:
            continue
        s = cokernel_structure(IntMatrix.from_rows(A))
        assert s.free_rank == 0
        assert s.order == abs(d) == cokernel_order_by_counting(A)
        checked += 1


def test_det_matches_leibniz():
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randint(1, 4)
        A = random_matrix(rng, n, n)
        assert det(IntMatrix.from_rows(A)) == det_leibniz(A)


def test_group_structure_strings():
    assert str(AbelianGroupStructure(1, ())) == "Z"
    assert str(AbelianGroupStructure(2, ())) == "Z^2"
    assert str(AbelianGroupStructure(0, ())) == "0"
    assert str(AbelianGroupStructure(1, (2,))) == "Z + Z/2"


def test_relation_embedding():
    rays = relation_embedding([1, 1, 2, -1, -1, -1])
    assert len(rays) == 6 and all(len(r) == 5 for r in rays)
    sums = [rays[0][k] + rays[1][k] + 2 * rays[2][k] - rays[3][k] - rays[4][k] - rays[5][k]
            for k in range(5)]
    assert sums == [0] * 5
    assert set(smith_normal_form(IntMatrix.from_rows(rays)).invariant_factors) == {1}


def test_solve_rational_inconsistent():
    assert solve_rational([[1, 1], [2, 2]], [1, 3]) is None
    assert solve_rational([[2, 0], [0, 4]], [1, 1]) is not None


def test_lattice_basis_and_primitive():
    assert primitive((4, -6, 2)) == (2, -3, 1)
    assert len(lattice_basis([(2, 0), (0, 2), (1, 1)], 2)) == 2


@pytest.mark.parametrize("rows", [[[0, 0]], [[1, 2, 3]]])
def test_degenerate_shapes(rows):
    snf = smith_normal_form(IntMatrix.from_rows(rows))
    assert (snf.U @ IntMatrix.from_rows(rows) @ snf.V) == snf.D
