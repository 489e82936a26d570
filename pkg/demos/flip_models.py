"""
Local toric flips from a single ray relation
============================================

A relation a_1 v_1 + ... + a_p v_p = b_1 w_1 + ... + b_q w_q among n+1
vectors spanning Z^n gives two fans on the same support. Here we build the
two classical 5-fold examples and read off what gets contracted.
"""
from torickit import ReidRelation, analyze_flip, flip_fans

# e1 + e2 + 2e3 = e4 + e5 + e6 in the lattice Z^6 / Z(1,1,2,-1,-1,-1)
r = ReidRelation((1, 1, 2), (1, 1, 1))
print(r, "in Z^%d" % r.ambient_rank)

fan_x, fan_y = flip_fans(r)
print("X side cones:", fan_x.max_cones)
print("Y side cones:", fan_y.max_cones)

rep = analyze_flip(r)
print("contracted on X:", rep.x_locus, " on Y:", rep.y_locus)
print("X cones:", rep.x_side.cone_quotients)   # one 1/2(1,1,1,1,1) point
print("singularities:", rep.x_side.singularity, "/", rep.y_side.singularity)
print("K . C on the X side:", rep.k_degree)

# the certificate divisor is negative on the X walls, nonnegative on the Y walls
print("certificate:", rep.certificate)
print("wall degrees X:", rep.x_side.wall_degrees_of_certificate,
      "Y:", rep.y_side.wall_degrees_of_certificate)

# e1 + 4e2 = e3 + ... + e6: a curve flipped to a 3-space
r7 = ReidRelation((1, 4), (1, 1, 1, 1))
rep7 = analyze_flip(r7)
print()
print(r7)
print("X locus", rep7.x_locus, "from raw weights", rep7.x_locus.raw_weights)
print("Y locus", rep7.y_locus)
print("terminal on both sides:", rep7.both_terminal)

# equal weights on both sides: K is trivial on the curve, a flop
print()
print(analyze_flip(ReidRelation((1, 1), (1, 1))).label)
