"""Acceptance criteria 1-9, one test each; every test records a PASS/FAIL line.

All comparisons are exact (integers, rationals, strings); there are no
floating-point tolerances anywhere in the engine.
"""
import subprocess
import sys

import property_suites
from torickit.builders import (blowup_linear_subspace, cyclic_quotient_cone, hirzebruch,
                               node_cone, product, projective_space, quadric_threefold_node,
                               split_bundle_projectivization, weighted_projective)
from torickit.class_groups import ToricDivisor, cartier_test, class_group, picard_group
from torickit.fans import regularity_profile
from torickit.local_models import ReidRelation, analyze_flip
from torickit.nef_mori import fano_status, mori_and_nef
from torickit.singularities import (CyclicQuotient, classify, regularity_kind_for_reid_tai,
                                    reid_tai)

RESULTS: dict[int, str] = {}


def verdict(number: int, title: str, checks: dict[str, bool]):
    failed = [name for name, ok in checks.items() if not ok]
    line = f"criterion {number} [{title}]: {'PASS' if not failed else 'FAIL'}"
    if failed:
        line += " (failed: " + "; ".join(failed) + ")"
    RESULTS[number] = line
    print(line)
    assert not failed, line


def test_criterion_1_section2_flip():
    rep = analyze_flip(ReidRelation((1, 1, 2), (1, 1, 1)))
    verdict(1, "e1+e2+2e3=e4+e5+e6 flip", {
        "Flipping": rep.modification == "Flipping",
        "X-locus P(1,1,2)": str(rep.x_locus) == "P(1,1,2)",
        "Y-locus P^2": str(rep.y_locus) == "P^2",
        "X terminal": rep.x_side.terminal,
        "Y terminal": rep.y_side.terminal,
        "K-degree +1": rep.k_degree == 1,
        "certificate found": rep.certificate is not None,
    })


def test_criterion_2_section7_flip():
    rep = analyze_flip(ReidRelation((1, 4), (1, 1, 1, 1)))
    verdict(2, "e1+4e2=e3+e4+e5+e6 flip", {
        "Flipping": rep.modification == "Flipping",
        "X-locus P^1": str(rep.x_locus) == "P^1",
        "raw weights (1,4)": rep.x_locus.raw_weights == (1, 4),
        "Y-locus P^3": str(rep.y_locus) == "P^3",
        "both terminal": rep.both_terminal,
    })


def test_criterion_3_node_model():
    f = node_cone()
    c = classify(f)
    verdict(3, "3-fold node cone", {
        "Terminal": c.kind == "Terminal",
        "Gorenstein index 1": c.gorenstein_index == 1,
        "not Q-factorial": not c.is_q_factorial,
        "ray divisor NotQCartier": str(cartier_test(f, ToricDivisor.prime(f, 0))) == "NotQCartier",
    })


def test_criterion_4_class_group_jumps():
    node = quadric_threefold_node()
    verdict(4, "class groups", {
        "Cl P(1,1,2) = Z": str(class_group(weighted_projective((1, 1, 2))).structure) == "Z",
        "Cl P1xP1 = Z^2": str(class_group(product(projective_space(1), projective_space(1))).structure) == "Z^2",
        "Cl node quadric = Z^2": str(class_group(node).structure) == "Z^2",
        "Pic rank node quadric = 1": picard_group(node).free_rank == 1,
    })


def test_criterion_5_rigidity_hypotheses():
    checks = {}
    for n in (1, 2, 3, 4, 5):
        p = regularity_profile(projective_space(n))
        checks[f"P^{n} passes"] = p.smooth_in_codim(2) and p.qfactorial_in_codim(3)
    p = regularity_profile(product(projective_space(3), projective_space(2)))
    checks["P3xP2 passes"] = p.smooth_in_codim(2) and p.qfactorial_in_codim(3)
    checks["P(1,1,2) fails smooth_in_codim(2)"] = \
        not regularity_profile(weighted_projective((1, 1, 2))).smooth_in_codim(2)
    q = regularity_profile(quadric_threefold_node())
    checks["node passes smooth_in_codim(2)"] = q.smooth_in_codim(2)
    checks["node fails qfactorial_in_codim(3)"] = not q.qfactorial_in_codim(3)
    verdict(5, "smooth in codim 2 / Q-factorial in codim 3", checks)


def test_criterion_6_quotients():
    table = [
        (2, (1, 1, 1, 1, 1), "Terminal", False),
        (3, (1, 1, 1, 1), "Terminal", None),
        (4, (1, 1, 1, 1, 3), "Terminal", None),
        (2, (1, 1), "Canonical", None),
    ]
    checks = {}
    for r, w, kind, gorenstein in table:
        q = CyclicQuotient(r, w)
        res = reid_tai(q)
        name = str(q)
        checks[f"{name} {kind}"] = res.kind == kind
        if gorenstein is not None:
            checks[f"{name} Gorenstein={gorenstein}"] = res.gorenstein == gorenstein
        lattice = regularity_kind_for_reid_tai(classify(cyclic_quotient_cone(r, w)).kind)
        checks[f"{name} agrees with classify"] = lattice == res.kind
    verdict(6, "quotient singularities", checks)


def _nef_is_product_orthant(a, b):
    f = product(projective_space(a), projective_space(b))
    mn = mori_and_nef(f)
    h1 = mn.class_group.project(ToricDivisor.prime(f, 0)).free
    h2 = mn.class_group.project(ToricDivisor.prime(f, a + 1)).free
    unimodular = abs(h1[0] * h2[1] - h1[1] * h2[0]) == 1
    return set(mn.nef.rays) == {h1, h2} and unimodular


def test_criterion_7_nef_and_mori():
    bl = blowup_linear_subspace(4, 1)
    verdict(7, "nef/Mori and Fano tests", {
        "Nef(P1xP1) orthant": _nef_is_product_orthant(1, 1),
        "Nef(P3xP2) orthant": _nef_is_product_orthant(3, 2),
        "Bl_line P4 Fano": fano_status(bl).kind == "Fano",
        "Bl_line P4 nef has 2 generators": len(mori_and_nef(bl).nef.rays) == 2,
        "P(O+O(3)) over P3 Fano": fano_status(split_bundle_projectivization(3, (0, 3))).kind == "Fano",
        "F2 WeakFano": fano_status(hirzebruch(2)).kind == "WeakFano",
    })


def test_criterion_8_property_suites():
    checks = {}
    for name, suite in property_suites.SUITES.items():
        try:
            ran = suite()
        except AssertionError:
            checks[name] = False
        else:
            checks[f"{name} ({ran} cases)"] = ran >= 1000
    verdict(8, "randomized property suites", checks)


def test_criterion_9_determinism():
    cmd = [sys.executable, "-m", "torickit", "paper-suite", "--json", "--deterministic"]
    first = subprocess.run(cmd, capture_output=True)
    second = subprocess.run(cmd, capture_output=True)
    verdict(9, "deterministic paper-suite JSON", {
        "exit code 0": first.returncode == 0 and second.returncode == 0,
        "byte-identical": first.stdout == second.stdout and len(first.stdout) > 0,
    })
