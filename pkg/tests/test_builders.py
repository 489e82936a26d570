import itertools
import random
import warnings

import pytest

from torickit.builders import (BUILDERS, blowup_linear_subspace, cyclic_quotient_cone, hirzebruch,
                               node_cone, product, projective_space, quadric_threefold_node,
                               split_bundle_projectivization, weighted_projective, well_formed)
from torickit.class_groups import ToricDivisor, class_group
from torickit.errors import IllFormedWeights
from torickit.fans import cone_regularities, is_complete, regularity_profile, validate_fan
from torickit.nef_mori import positivity
from torickit.singularities import CyclicQuotient, classify, regularity_kind_for_reid_tai, reid_tai

COMPLETE = [
    projective_space(1), projective_space(2), projective_space(4),
    product(projective_space(1), projective_space(1)),
    product(projective_space(3), projective_space(2)),
    weighted_projective((1, 1, 2)), weighted_projective((1, 2, 3)),
    weighted_projective((1, 1, 1, 1, 3)),
    blowup_linear_subspace(2, 0), blowup_linear_subspace(3, 0), blowup_linear_subspace(4, 1),
    split_bundle_projectivization(3, (0, 3)), hirzebruch(0), hirzebruch(2),
    quadric_threefold_node(),
]


@pytest.mark.parametrize("fan", COMPLETE, ids=lambda f: f"rank{f.ambient_rank}-{len(f.rays)}rays")
def test_complete_builders_validate(fan):
    assert validate_fan(fan) == []
    assert is_complete(fan)


def test_affine_builders_validate():
    for f in (node_cone(), cyclic_quotient_cone(2, (1, 1)), cyclic_quotient_cone(3, (1, 1, 1, 1))):
        assert validate_fan(f) == []


def test_projective_space_counts():
    f = projective_space(1)
    assert len(f.rays) == 2 and len(f.max_cones) == 2
    g = product(projective_space(3), projective_space(2))
    assert g.ambient_rank == 5 and len(g.rays) == 7
    assert class_group(g).structure.free_rank == len(g.rays) - g.ambient_rank == 2


def test_weighted_relation_and_reduction():
    w = (1, 1, 1, 1, 3)
    f = weighted_projective(w)
    for k in range(f.ambient_rank):
        assert sum(wi * r[k] for wi, r in zip(w, f.rays)) == 0
    assert well_formed((2, 4, 6)) == (1, 2, 3)
    assert well_formed((1, 2, 2)) == (1, 1, 1)
    assert well_formed((3, 4)) == (1, 1)
    with pytest.warns(UserWarning):
        weighted_projective((1, 2, 2))
    with pytest.raises(IllFormedWeights):
        weighted_projective((0, 1, 1))
    with pytest.raises(IllFormedWeights):
        weighted_projective((1,))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_unit_weights_agree_with_projective_space(n):
    a, b = weighted_projective((1,) * (n + 1)), projective_space(n)
    assert class_group(a).structure == class_group(b).structure
    assert regularity_profile(a) == regularity_profile(b)


def test_p112_has_one_index_two_cone():
    regs = sorted(str(r) for r in cone_regularities(weighted_projective((1, 1, 2))))
    assert regs == ["SimplicialOfIndex(2)", "Smooth", "Smooth"]


def test_split_bundle_trivial_twist_is_p1xp1():
    f = split_bundle_projectivization(1, (0, 0))
    assert sorted(f.rays) == sorted(product(projective_space(1), projective_space(1)).rays)


def test_split_bundle_shape():
    f = split_bundle_projectivization(3, (0, 3))
    assert f.ambient_rank == 4 and len(f.rays) == 6 and f.is_smooth


def test_blowups_rank_two_and_exceptional_not_nef():
    for n, k in [(2, 0), (3, 0), (3, 1), (4, 1), (4, 2)]:
        f = blowup_linear_subspace(n, k)
        assert len(f.rays) == n + 2 and f.is_smooth
        assert class_group(f).structure.free_rank == 2
        exc = ToricDivisor.prime(f, len(f.rays) - 1)
        assert positivity(f, exc).kind == "NotNef"


def test_cyclic_quotient_a1_cone():
    f = cyclic_quotient_cone(2, (1, 1))
    assert str(classify(f).kind) == "Canonical"


def _weight_tuples(r, n):
    for w in itertools.combinations_with_replacement(range(1, r), n):
        try:
            yield CyclicQuotient(r, w)
        except ValueError:
            continue


def _agree(q):
    lattice = regularity_kind_for_reid_tai(classify(cyclic_quotient_cone(q.order, q.weights)).kind)
    assert reid_tai(q).kind == lattice, q


def test_reid_tai_agrees_with_lattice_test_on_grid():
    """All sorted tuples for n = 2 (r <= 12) and n = 3 (r <= 8); a seeded sample for n = 4, r <= 12."""
    count = 0
    for r, n in [(r, 2) for r in range(2, 13)] + [(r, 3) for r in range(2, 9)]:
        for q in _weight_tuples(r, n):
            _agree(q)
            count += 1
    four = [q for r in range(2, 13) for q in _weight_tuples(r, 4)]
    for q in random.Random(12).sample(four, 80):
        _agree(q)
        count += 1
    assert count > 450


def test_registry_names():
    assert {"projective_space", "weighted_projective", "blowup_linear_subspace",
            "split_bundle_projectivization", "cyclic_quotient_cone"} <= set(BUILDERS)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        BUILDERS["product_projective"](1, 2)
