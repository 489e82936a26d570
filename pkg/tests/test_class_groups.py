import random

import pytest

from torickit.builders import (blowup_linear_subspace, cyclic_quotient_cone, hirzebruch, node_cone,
                               product, projective_space, quadric_threefold_node,
                               weighted_projective)
from torickit.class_groups import (DivisorClass, ToricDivisor, cartier_test, class_group,
                                   picard_group)
from torickit.errors import NotComplete, RaysDoNotSpan
from torickit.fans import Fan

P1xP1 = product(projective_space(1), projective_space(1))


@pytest.mark.parametrize("fan, expected", [
    (projective_space(3), "Z"),
    (weighted_projective((1, 1, 2)), "Z"),
    (P1xP1, "Z^2"),
    (quadric_threefold_node(), "Z^2"),
    (blowup_linear_subspace(4, 1), "Z^2"),
    (cyclic_quotient_cone(2, (1, 1)), "Z/2"),
    (cyclic_quotient_cone(3, (1, 1, 1, 1)), "Z/3"),
    (node_cone(), "Z"),
])
def test_class_group_structures(fan, expected):
    assert str(class_group(fan).structure) == expected


@pytest.mark.parametrize("fan, expected", [
    (projective_space(2), "Z"),
    (weighted_projective((1, 1, 2)), "Z"),
    (P1xP1, "Z^2"),
    (quadric_threefold_node(), "Z"),
    (product(projective_space(3), projective_space(2)), "Z^2"),
])
def test_picard_groups(fan, expected):
    assert str(picard_group(fan)) == expected


def test_p112_ray_classes():
    f = weighted_projective((1, 1, 2))
    cg = class_group(f)
    assert sorted(c.free for c in cg.ray_classes(f)) == [(1,), (1,), (2,)]


def test_principal_divisors_have_zero_class():
    rng = random.Random(17)
    for f in (hirzebruch(3), quadric_threefold_node(), cyclic_quotient_cone(5, (1, 2, 3))):
        cg = class_group(f)
        zero = DivisorClass((0,) * cg.structure.free_rank, (0,) * len(cg.structure.torsion))
        for _ in range(50):
            m = [rng.randint(-5, 5) for _ in range(f.ambient_rank)]
            assert cg.project(ToricDivisor.principal(f, m)) == zero


def test_lift_inverts_project():
    rng = random.Random(18)
    f = cyclic_quotient_cone(6, (1, 5))
    cg = class_group(f)
    for _ in range(50):
        d = ToricDivisor(tuple(rng.randint(-4, 4) for _ in f.rays))
        assert cg.project(cg.lift(cg.project(d))) == cg.project(d)


def test_cartier_statuses():
    node = node_cone()
    assert str(cartier_test(node, ToricDivisor.prime(node, 0))) == "NotQCartier"
    assert str(cartier_test(node, ToricDivisor.anticanonical(node))) == "Cartier"
    f = weighted_projective((1, 1, 2))
    two_index = [i for i, c in enumerate(class_group(f).ray_classes(f)) if c.free == (1,)][0]
    assert str(cartier_test(f, ToricDivisor.prime(f, two_index))) == "QCartierOfIndex(2)"
    q = cyclic_quotient_cone(2, (1, 1, 1, 1, 1))
    assert str(cartier_test(q, ToricDivisor.anticanonical(q))) == "QCartierOfIndex(2)"


def test_errors():
    with pytest.raises(RaysDoNotSpan):
        class_group(Fan(2, ((1, 0),), ((0,),)))
    with pytest.raises(NotComplete):
        picard_group(node_cone())
    with pytest.raises(ValueError):
        cartier_test(P1xP1, ToricDivisor((1, 2)))


def test_divisor_arithmetic_and_text():
    d = ToricDivisor((1, 0, 0, -2))
    assert str(d) == "D0 - 2*D3"
    assert str(ToricDivisor((0, 0))) == "0"
    assert (d + d) == 2 * d
    assert (d - d).coefficients == (0, 0, 0, 0)
