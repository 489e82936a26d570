"""Exact toric geometry: cones, fans, singularities, class groups and local flip models."""

__version__ = "0.1.0"

from .builders import (blowup_linear_subspace, cyclic_quotient_cone, hirzebruch, node_cone,
                       product, projective_space, quadric_threefold_node,
                       split_bundle_projectivization, weighted_projective)
from .class_groups import ToricDivisor, cartier_test, class_group, picard_group
from .cones import Cone, cone_from_inequalities, cone_from_rays, cone_regularity, dual_cone
from .errors import ToricError
from .fans import Fan, is_complete, regularity_profile, validate_fan, walls
from .lattice import IntMatrix, hermite_normal_form, kernel_basis, smith_normal_form
from .local_models import ReidRelation, analyze_flip, contracted_locus, flip_fans, modification_type
from .nef_mori import fano_status, mori_cone, nef_cone, positivity
from .singularities import CyclicQuotient, classify, reid_tai

__all__ = [
    "Cone", "CyclicQuotient", "Fan", "IntMatrix", "ReidRelation", "ToricDivisor", "ToricError",
    "analyze_flip", "blowup_linear_subspace", "cartier_test", "class_group", "classify",
    "cone_from_inequalities", "cone_from_rays", "cone_regularity", "contracted_locus",
    "cyclic_quotient_cone", "dual_cone", "fano_status", "flip_fans", "hermite_normal_form",
    "hirzebruch", "is_complete", "kernel_basis", "modification_type", "mori_cone", "nef_cone",
    "node_cone", "picard_group", "positivity", "product", "projective_space",
    "quadric_threefold_node", "regularity_profile", "reid_tai", "smith_normal_form",
    "split_bundle_projectivization", "validate_fan", "walls", "weighted_projective",
]
