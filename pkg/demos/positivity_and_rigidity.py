"""
Nef cones, Fano tests and the rigidity hypotheses
=================================================

Wall relations give the curves of a complete simplicial toric variety;
everything here is an exact integer computation on those relations.
"""
from torickit import (blowup_linear_subspace, fano_status, hirzebruch, product,
                      projective_space, quadric_threefold_node, regularity_profile,
                      split_bundle_projectivization, weighted_projective)
from torickit.nef_mori import mori_and_nef

bl = blowup_linear_subspace(4, 1)   # P^4 blown up along a line
mn = mori_and_nef(bl)
print("ray classes:", [c.free for c in mn.class_group.ray_classes(bl)])
print("nef cone rays:", mn.nef.rays)
print("mori cone rays:", mn.mori.rays)

for name, f in [("P^4", projective_space(4)),
                ("Bl_line P^4", bl),
                ("P(O+O(3)) over P^3", split_bundle_projectivization(3, (0, 3))),
                ("F_2", hirzebruch(2)),
                ("F_3", hirzebruch(3))]:
    st = fano_status(f)
    print(f"{name:20s} {st.kind:9s} -K wall degrees {st.positivity.degrees}")

# smooth in codimension 2 and Q-factorial in codimension 3
print()
for name, f in [("P^3 x P^2", product(projective_space(3), projective_space(2))),
                ("P(1,1,2)", weighted_projective((1, 1, 2))),
                ("nodal quadric 3-fold", quadric_threefold_node())]:
    p = regularity_profile(f)
    print(f"{name:22s} smooth_in_codim(2)={p.smooth_in_codim(2)!s:5s} "
          f"qfactorial_in_codim(3)={p.qfactorial_in_codim(3)}")
