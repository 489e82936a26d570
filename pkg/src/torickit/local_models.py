"""Local toric models of flips and divisorial contractions from one ray relation.

A relation sum a_i v_i = sum b_j w_j among n+1 primitive vectors spanning
Z^n has exactly two simplicial subdivisions of cone(v, w): drop one v_i from
each maximal cone (the X side), or drop one w_j (the Y side). On the X side
the cones containing all the w_j meet in the orbit closure P(a); on the Y
side the exceptional locus is P(b).
"""
from __future__ import annotations

from dataclasses import dataclass

from .builders import well_formed
from .class_groups import ToricDivisor
from .cones import cone_from_rays, cone_regularity
from .errors import NotFlipping
from .fans import Fan, validate_fan, walls
from .lattice import gcd_list, rank, relation_embedding
from .nef_mori import wall_relation
from .singularities import (classify, cone_discrepancy_kind, cone_quotient,
                            reid_tai, regularity_kind_for_reid_tai)

Vector = tuple[int, ...]


@dataclass(frozen=True)
class ReidRelation:
    """sum a_i v_i = sum b_j w_j with positive integer weights.

    When `positive_rays`/`negative_rays` are omitted the vectors are the
    images of the standard basis in Z^(p+q) / Z*(a, -b).
    """

    positive_weights: tuple[int, ...]
    negative_weights: tuple[int, ...]
    positive_rays: tuple[Vector, ...] = ()
    negative_rays: tuple[Vector, ...] = ()

    def __post_init__(self):
        a = tuple(int(x) for x in self.positive_weights)
        b = tuple(int(x) for x in self.negative_weights)
        object.__setattr__(self, "positive_weights", a)
        object.__setattr__(self, "negative_weights", b)
        if any(x <= 0 for x in a + b):
            raise ValueError("relation weights must be positive")
        if not a and not b:
            raise ValueError("empty relation")
        if not self.positive_rays and not self.negative_rays:
            if gcd_list(a + b) != 1:
                raise ValueError(f"relation weights {a}, {b} are not coprime")
            rays = relation_embedding(a + tuple(-x for x in b))
            object.__setattr__(self, "positive_rays", rays[:len(a)])
            object.__setattr__(self, "negative_rays", rays[len(a):])
        else:
            pos = tuple(tuple(int(x) for x in r) for r in self.positive_rays)
            neg = tuple(tuple(int(x) for x in r) for r in self.negative_rays)
            object.__setattr__(self, "positive_rays", pos)
            object.__setattr__(self, "negative_rays", neg)
        self._check()

    def _check(self):
        a, b = self.positive_weights, self.negative_weights
        pos, neg = self.positive_rays, self.negative_rays
        if len(pos) != len(a) or len(neg) != len(b):
            raise ValueError("one ray per weight required")
        rays = pos + neg
        n = len(rays[0])
        if any(len(r) != n for r in rays):
            raise ValueError("rays of mixed length")
        if len(rays) != n + 1:
            raise ValueError(f"{len(rays)} rays in Z^{n}; a single relation needs n+1")
        if any(gcd_list(r) != 1 for r in rays) or len(set(rays)) != len(rays):
            raise ValueError("rays must be primitive and distinct")
        if rank(rays) != n:
            raise ValueError("rays do not span")
        lhs = [sum(w * r[k] for w, r in zip(a, pos)) for k in range(n)]
        rhs = [sum(w * r[k] for w, r in zip(b, neg)) for k in range(n)]
        if lhs != rhs:
            raise ValueError("the rays do not satisfy the stated relation")

    @property
    def ambient_rank(self) -> int:
        return len(self.rays[0])

    @property
    def rays(self) -> tuple[Vector, ...]:
        return self.positive_rays + self.negative_rays

    @property
    def p(self) -> int:
        return len(self.positive_weights)

    @property
    def q(self) -> int:
        return len(self.negative_weights)

    @property
    def coefficients(self) -> tuple[int, ...]:
        """Signed relation vector over `rays`: (a, -b)."""
        return self.positive_weights + tuple(-x for x in self.negative_weights)

    @property
    def k_degree(self) -> int:
        """-K evaluated on the X-side relation: sum(a) - sum(b)."""
        return sum(self.positive_weights) - sum(self.negative_weights)

    def __str__(self):
        def side(ws, start):
            return " + ".join((f"{w}" if w != 1 else "") + f"e{start + i}" for i, w in enumerate(ws))
        return f"{side(self.positive_weights, 1)} = {side(self.negative_weights, self.p + 1)}"


def modification_type(r: ReidRelation) -> str:
    if r.p == 0 or r.q == 0:
        return "FiberType"
    if r.p == 1 or r.q == 1:
        return "Divisorial"
    return "Flipping"


def _require_flipping(r: ReidRelation):
    kind = modification_type(r)
    if kind != "Flipping":
        raise NotFlipping(f"relation {r} is {kind}, not a flip")


def flip_fans(r: ReidRelation) -> tuple[Fan, Fan]:
    """(fan_X, fan_Y): the subdivisions dropping one positive / one negative ray."""
    _require_flipping(r)
    n, p, m = r.ambient_rank, r.p, r.p + r.q
    x_cones = tuple(tuple(k for k in range(m) if k != i) for i in range(p))
    y_cones = tuple(tuple(k for k in range(m) if k != j) for j in range(p, m))
    return Fan(n, r.rays, x_cones), Fan(n, r.rays, y_cones)


@dataclass(frozen=True)
class WeightedProjectiveLabel:
    raw_weights: tuple[int, ...]
    weights: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.weights) - 1

    def __str__(self):
        if all(w == 1 for w in self.weights):
            return f"P^{self.dimension}"
        return "P(" + ",".join(map(str, self.weights)) + ")"


def contracted_locus(r: ReidRelation, side: str) -> WeightedProjectiveLabel:
    """Exceptional locus of the contraction from the X or Y side."""
    _require_flipping(r)
    if side.upper() == "X":
        raw = r.positive_weights
    elif side.upper() == "Y":
        raw = r.negative_weights
    else:
        raise ValueError("side must be 'X' or 'Y'")
    return WeightedProjectiveLabel(raw, well_formed(raw))


@dataclass(frozen=True)
class SideReport:
    singularity: str
    terminal: bool
    cone_regularities: tuple[str, ...]
    cone_quotients: tuple[str | None, ...]
    reid_tai_agrees: bool
    wall_degrees_of_certificate: tuple[int, ...]


@dataclass(frozen=True)
class FlipReport:
    relation: str
    modification: str
    x_locus: WeightedProjectiveLabel
    y_locus: WeightedProjectiveLabel
    x_side: SideReport
    y_side: SideReport
    k_degree: int
    label: str  # flip or flop
    certificate: ToricDivisor | None

    @property
    def both_terminal(self) -> bool:
        return self.x_side.terminal and self.y_side.terminal

    def to_dict(self) -> dict:
        def side(s: SideReport):
            return {"singularity": s.singularity, "terminal": s.terminal,
                    "cone_regularities": list(s.cone_regularities),
                    "cone_quotients": list(s.cone_quotients),
                    "reid_tai_agrees": s.reid_tai_agrees,
                    "certificate_wall_degrees": list(s.wall_degrees_of_certificate)}
        return {
            "relation": self.relation,
            "modification": self.modification,
            "x_locus": {"label": str(self.x_locus), "raw_weights": list(self.x_locus.raw_weights),
                        "weights": list(self.x_locus.weights), "dimension": self.x_locus.dimension},
            "y_locus": {"label": str(self.y_locus), "raw_weights": list(self.y_locus.raw_weights),
                        "weights": list(self.y_locus.weights), "dimension": self.y_locus.dimension},
            "x_side": side(self.x_side),
            "y_side": side(self.y_side),
            "k_degree": self.k_degree,
            "label": self.label,
            "certificate": None if self.certificate is None else list(self.certificate.coefficients),
            "classification_source": "sign pattern of the relation (p, q >= 2 is a flip)",
        }


def _side_report(f: Fan, certificate: ToricDivisor | None) -> SideReport:
    cls = classify(f)
    regs, quots, agree = [], [], True
    for idx in f.max_cones:
        rays = f.rays_of(idx)
        regs.append(str(cone_regularity(cone_from_rays(rays, f.ambient_rank))))
        q = cone_quotient(rays, f.ambient_rank)
        quots.append(None if q is None else str(q))
        if q is not None:
            lattice_kind = regularity_kind_for_reid_tai(cone_discrepancy_kind(rays, f.ambient_rank))
            agree = agree and reid_tai(q).kind == lattice_kind
    degrees = ()
    if certificate is not None:
        degrees = tuple(wall_relation(f, w).pair(certificate) for w in walls(f))
    return SideReport(cls.kind, cls.is_terminal, tuple(regs), tuple(quots), agree, degrees)


def asymmetry_certificate(r: ReidRelation, fan_x: Fan, fan_y: Fan) -> ToricDivisor | None:
    """A divisor nef on every Y-side wall but negative on some X-side wall.

    Candidates are the sign-reversed relation itself and, when the flip is
    not a flop, K; the first that passes is returned.
    """
    candidates = [ToricDivisor(tuple(-c for c in r.coefficients))]
    if r.k_degree > 0:
        candidates.append(ToricDivisor((-1,) * len(r.rays)))
    elif r.k_degree < 0:
        candidates.append(ToricDivisor((1,) * len(r.rays)))
    x_rel = [wall_relation(fan_x, w) for w in walls(fan_x)]
    y_rel = [wall_relation(fan_y, w) for w in walls(fan_y)]
    for d in candidates:
        if all(rel.pair(d) >= 0 for rel in y_rel) and any(rel.pair(d) < 0 for rel in x_rel):
            return d
    return None


def analyze_flip(r: ReidRelation) -> FlipReport:
    _require_flipping(r)
    fan_x, fan_y = flip_fans(r)
    for f in (fan_x, fan_y):
        problems = validate_fan(f)
        if problems:
            raise AssertionError(f"local fan failed validation: {problems}")
    cert = asymmetry_certificate(r, fan_x, fan_y)
    return FlipReport(
        relation=str(r),
        modification=modification_type(r),
        x_locus=contracted_locus(r, "X"),
        y_locus=contracted_locus(r, "Y"),
        x_side=_side_report(fan_x, cert),
        y_side=_side_report(fan_y, cert),
        k_degree=r.k_degree,
        label="flop" if r.k_degree == 0 else "flip",
        certificate=cert)
