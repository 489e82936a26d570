"""
Class groups that jump in a family
==================================

A quadric surface degenerating to a cone, and a quadric threefold acquiring
a node: the toric fibers make the jump in Cl visible, and Pic shows which
classes stop being Cartier.
"""
from torickit import (ToricDivisor, cartier_test, class_group, classify, node_cone,
                      picard_group, product, projective_space, quadric_threefold_node,
                      weighted_projective)

smooth_quadric = product(projective_space(1), projective_space(1))
quadric_cone = weighted_projective((1, 1, 2))

for name, f in [("P1 x P1", smooth_quadric), ("P(1,1,2)", quadric_cone)]:
    cg = class_group(f)
    print(f"{name:10s} Cl = {cg.structure}   ray classes {[c.free for c in cg.ray_classes(f)]}")

# the nodal quadric threefold: one square cone over the node
q3 = quadric_threefold_node()
print()
print("nodal quadric: Cl =", class_group(q3).structure, " Pic =", picard_group(q3))
print("singularity:", classify(q3).kind)

# locally at the node a plane through it is a Weil divisor that is not Q-Cartier
node = node_cone()
print("plane through the node:", cartier_test(node, ToricDivisor.prime(node, 0)))
print("the node itself:", classify(node).kind, "gorenstein index", classify(node).gorenstein_index)
