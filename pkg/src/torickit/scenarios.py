"""Scenario files, the operation registry they refer to, and JSON reports.

A scenario names a subject (builder call, explicit fan, relation or cyclic
quotient) and a list of checks. Each check runs one registered operation
and compares its canonical JSON value with the expected one; a dict
expectation only constrains the keys it lists.
"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from datetime import datetime, timezone
from importlib import resources
from pathlib import Path
from typing import Any, Callable

from . import __version__
from .builders import BUILDERS
from .class_groups import ToricDivisor, cartier_test, class_group, picard_group
from .cones import cone_regularity
from .errors import ParseError, ScenarioError, ToricError, UnknownOperation
from .fans import Fan, is_complete, regularity_profile, validate_fan, walls
from .local_models import ReidRelation, analyze_flip, contracted_locus, flip_fans, modification_type
from .nef_mori import fano_status, mori_and_nef, positivity
from .singularities import CyclicQuotient, classify, q_gorenstein_data, reid_tai

log = logging.getLogger(__name__)

SCENARIO_SCHEMA = "torickit.scenario/1"
REPORT_SCHEMA = "torickit.report/1"
MAX_SAFE_INT = 2**53 - 1


@dataclass(frozen=True)
class Operation:
    module: str
    subject: str  # fan, relation or quotient
    func: Callable[[Any, dict], Any]


def _divisor(f: Fan, args: dict) -> ToricDivisor:
    if "divisor" in args:
        return ToricDivisor(tuple(args["divisor"]))
    if "prime" in args:
        return ToricDivisor.prime(f, int(args["prime"]))
    if args.get("anticanonical"):
        return ToricDivisor.anticanonical(f)
    raise ScenarioError("divisor argument missing: give 'divisor', 'prime' or 'anticanonical'")


def _fan_cone_regularities(f: Fan, args: dict):
    return [str(cone_regularity(c)) for c in f.max_cone_objects]


def _profile(f: Fan, args: dict):
    p = regularity_profile(f)
    return {"smooth": list(p.smooth), "simplicial": list(p.simplicial)}


def _class_group(f: Fan, args: dict):
    return str(class_group(f).structure)


def _ray_classes(f: Fan, args: dict):
    cg = class_group(f)
    return [list(c.free) + list(c.torsion) for c in cg.ray_classes(f)]


def _nef(f: Fan, args: dict):
    return [list(r) for r in mori_and_nef(f).nef.rays]


def _mori(f: Fan, args: dict):
    return [list(r) for r in mori_and_nef(f).mori.rays]


def _reid_tai(q: CyclicQuotient, args: dict):
    r = reid_tai(q)
    return {"kind": r.kind, "gorenstein": r.gorenstein}


def _flip(r: ReidRelation, args: dict):
    d = analyze_flip(r).to_dict()
    d["certificate_found"] = d["certificate"] is not None
    return d


OPERATIONS: dict[str, Operation] = {
    # fan_kit
    "validate_fan": Operation("fan_kit", "fan",
                              lambda f, a: "ok" if not validate_fan(f) else [str(v) for v in validate_fan(f)]),
    "is_complete": Operation("fan_kit", "fan", lambda f, a: is_complete(f)),
    "regularity_profile": Operation("fan_kit", "fan", _profile),
    "smooth_in_codim": Operation("fan_kit", "fan",
                                 lambda f, a: regularity_profile(f).smooth_in_codim(int(a["k"]))),
    "qfactorial_in_codim": Operation("fan_kit", "fan",
                                     lambda f, a: regularity_profile(f).qfactorial_in_codim(int(a["k"]))),
    "wall_count": Operation("fan_kit", "fan", lambda f, a: len(walls(f))),
    "ray_count": Operation("fan_kit", "fan", lambda f, a: len(f.rays)),
    # cone_engine
    "cone_regularity": Operation("cone_engine", "fan", _fan_cone_regularities),
    # singularity_classifier
    "classify": Operation("singularity_classifier", "fan", lambda f, a: classify(f).kind),
    "gorenstein_index": Operation("singularity_classifier", "fan",
                                  lambda f, a: q_gorenstein_data(f).gorenstein_index),
    "is_q_factorial": Operation("singularity_classifier", "fan", lambda f, a: classify(f).is_q_factorial),
    "reid_tai": Operation("singularity_classifier", "quotient", _reid_tai),
    # class_groups
    "class_group": Operation("class_groups", "fan", _class_group),
    "ray_classes": Operation("class_groups", "fan", _ray_classes),
    "picard_group": Operation("class_groups", "fan", lambda f, a: str(picard_group(f))),
    "picard_rank": Operation("class_groups", "fan", lambda f, a: picard_group(f).free_rank),
    "cartier_test": Operation("class_groups", "fan", lambda f, a: str(cartier_test(f, _divisor(f, a)))),
    # nef_mori
    "mori_cone": Operation("nef_mori", "fan", _mori),
    "mori_extremal_rays": Operation("nef_mori", "fan", lambda f, a: len(mori_and_nef(f).mori.rays)),
    "nef_cone": Operation("nef_mori", "fan", _nef),
    "nef_generators": Operation("nef_mori", "fan", lambda f, a: len(mori_and_nef(f).nef.rays)),
    "positivity": Operation("nef_mori", "fan", lambda f, a: positivity(f, _divisor(f, a)).kind),
    "fano_status": Operation("nef_mori", "fan", lambda f, a: fano_status(f).kind),
    # local_models
    "modification_type": Operation("local_models", "relation", lambda r, a: modification_type(r)),
    "contracted_locus": Operation("local_models", "relation",
                                  lambda r, a: str(contracted_locus(r, a.get("side", "X")))),
    "flip_cone_counts": Operation("local_models", "relation",
                                  lambda r, a: [len(g.max_cones) for g in flip_fans(r)]),
    "analyze_flip": Operation("local_models", "relation", _flip),
}


@dataclass(frozen=True)
class Check:
    id: str
    op: str
    args: dict
    expected: Any
    anchor: str = ""


@dataclass(frozen=True)
class Scenario:
    name: str
    source: dict
    checks: tuple[Check, ...] = ()
    tags: tuple[str, ...] = ()

    def subject(self, kind: str):
        src = self.source
        if kind == "fan":
            if "builder" in src:
                name = src["builder"]
                if name not in BUILDERS:
                    raise ScenarioError(f"unknown builder {name!r}")
                return BUILDERS[name](*src.get("args", []))
            if "fan" in src:
                return Fan.from_dict(src["fan"])
            if "cyclic_quotient" in src:
                q = src["cyclic_quotient"]
                return BUILDERS["cyclic_quotient_cone"](q["order"], q["weights"])
            if "reid_relation" in src:
                raise ScenarioError("a relation has two fans; use local_models operations")
        if kind == "relation" and "reid_relation" in src:
            r = src["reid_relation"]
            return ReidRelation(tuple(r["positive_weights"]), tuple(r["negative_weights"]),
                                tuple(tuple(v) for v in r.get("positive_rays", ())),
                                tuple(tuple(v) for v in r.get("negative_rays", ())))
        if kind == "quotient" and "cyclic_quotient" in src:
            q = src["cyclic_quotient"]
            return CyclicQuotient(int(q["order"]), tuple(q["weights"]))
        raise ScenarioError(f"scenario {self.name!r} has no {kind} subject")


def _parse_check(raw: dict, scenario: str) -> Check:
    if not isinstance(raw, dict) or not ("op" in raw or "operation" in raw):
        raise ParseError(f"check in scenario {scenario!r} must be an object with an 'op' field")
    op = raw.get("op", raw.get("operation"))
    if op not in OPERATIONS:
        raise UnknownOperation(f"unknown operation {op!r} in scenario {scenario!r}")
    return Check(id=str(raw.get("id", op)), op=op, args=dict(raw.get("args", raw.get("arguments", {}))),
                 expected=raw.get("expected"), anchor=str(raw.get("anchor", "")))


def parse_scenarios(data: Any) -> list[Scenario]:
    """Scenarios from decoded JSON: a single scenario or {"scenarios": [...]}."""
    if not isinstance(data, dict):
        raise ParseError("scenario document must be a JSON object")
    schema = data.get("schema", SCENARIO_SCHEMA)
    if schema != SCENARIO_SCHEMA:
        raise ParseError(f"unsupported schema {schema!r}; expected {SCENARIO_SCHEMA!r}")
    items = data["scenarios"] if "scenarios" in data else [data]
    out = []
    for item in items:
        if "name" not in item or "source" not in item:
            raise ParseError("scenario needs 'name' and 'source'")
        checks = tuple(_parse_check(c, item["name"]) for c in item.get("checks", []))
        out.append(Scenario(item["name"], dict(item["source"]), checks, tuple(item.get("tags", []))))
    return out


def load_scenarios(path: str | Path) -> list[Scenario]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ScenarioError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
    return parse_scenarios(data)


def _jsonable(value: Any) -> Any:
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value) if abs(value) > MAX_SAFE_INT else value
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return str(value)


def matches(computed: Any, expected: Any) -> bool:
    if isinstance(expected, dict) and isinstance(computed, dict):
        return all(k in computed and matches(computed[k], v) for k, v in expected.items())
    return computed == expected


@dataclass
class Report:
    results: list[dict] = field(default_factory=list)

    @property
    def summary(self) -> dict:
        status = [r["status"] for r in self.results]
        return {"total": len(status), "passed": status.count("pass"),
                "failed": status.count("fail"), "errors": status.count("error")}

    @property
    def ok(self) -> bool:
        s = self.summary
        return s["failed"] == 0 and s["errors"] == 0

    def to_dict(self, deterministic: bool = False) -> dict:
        out = {"schema": REPORT_SCHEMA, "engine_version": __version__,
               "results": sorted(self.results, key=lambda r: (r["scenario"], r["check"])),
               "summary": self.summary}
        if not deterministic:
            out["generated_at"] = datetime.now(timezone.utc).isoformat()
        return out

    def to_json(self, deterministic: bool = False) -> str:
        return json.dumps(self.to_dict(deterministic), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        lines = []
        for r in sorted(self.results, key=lambda r: (r["scenario"], r["check"])):
            tag = r["status"].upper()
            line = f"{tag:5} {r['scenario']} :: {r['check']}  computed={json.dumps(r['computed'])}"
            if r["status"] != "pass":
                line += f" expected={json.dumps(r['expected'])}"
            if r.get("error"):
                line += f" error={r['error']}"
            lines.append(line)
        s = self.summary
        lines.append(f"{s['passed']}/{s['total']} checks passed, {s['failed']} failed, {s['errors']} errors")
        return "\n".join(lines) + "\n"


def run_checks(scenarios: list[Scenario]) -> Report:
    report = Report()
    for sc in scenarios:
        for check in sc.checks:
            op = OPERATIONS[check.op]
            entry = {"scenario": sc.name, "check": check.id, "op": check.op, "module": op.module,
                     "anchor": check.anchor, "expected": _jsonable(check.expected)}
            try:
                computed = _jsonable(op.func(sc.subject(op.subject), check.args))
            except (ToricError, ValueError, KeyError) as exc:
                log.debug("check %s/%s raised", sc.name, check.id, exc_info=True)
                entry.update(computed=None, status="error", error=f"{type(exc).__name__}: {exc}")
            else:
                entry.update(computed=computed,
                             status="pass" if matches(computed, entry["expected"]) else "fail")
            report.results.append(entry)
    return report


def run_scenario(path: str | Path) -> Report:
    return run_checks(load_scenarios(path))


def builtin_scenarios() -> list[Scenario]:
    text = resources.files("torickit").joinpath("data/paper_suite.json").read_text()
    return parse_scenarios(json.loads(text))


def paper_suite(filter_tag: str | None = None) -> Report:
    scenarios = builtin_scenarios()
    if filter_tag:
        scenarios = [s for s in scenarios if filter_tag in s.tags]
    return run_checks(scenarios)
