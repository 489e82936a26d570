"""Command-line front end: analyze scenario files, run the built-in suite, inspect builder fans."""
from __future__ import annotations

import argparse
import json
import logging
import sys
import warnings

from . import __version__
from .builders import BUILDERS
from .errors import ScenarioError, ToricError
from .scenarios import OPERATIONS, Report, _jsonable, paper_suite, run_scenario

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

DEFAULT_SHOW = ("ray_count", "is_complete", "classify", "class_group")

# how the comma-separated integers after "builder=" map onto positional arguments
_ARG_SHAPES = {
    "projective_space": lambda xs: xs,
    "weighted_projective": lambda xs: [xs],
    "blowup_linear_subspace": lambda xs: xs,
    "split_bundle_projectivization": lambda xs: [xs[0], xs[1:]],
    "hirzebruch": lambda xs: xs,
    "cyclic_quotient_cone": lambda xs: [xs[0], xs[1:]],
    "node_cone": lambda xs: xs,
    "quadric_threefold_node": lambda xs: xs,
    "product_projective": lambda xs: xs,
}


def parse_builder_spec(spec: str):
    """'weighted_projective=1,1,2' -> (name, positional args)."""
    name, _, raw = spec.partition("=")
    if name not in BUILDERS:
        raise ScenarioError(f"unknown builder {name!r}; choose from {', '.join(sorted(BUILDERS))}")
    raw = raw.strip()
    if raw.startswith("["):
        try:
            args = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ScenarioError(f"bad builder arguments {raw!r}: {exc.msg}") from exc
        return name, list(args)
    try:
        xs = [int(x) for x in raw.split(",") if x.strip()]
    except ValueError as exc:
        raise ScenarioError(f"builder arguments must be integers: {raw!r}") from exc
    return name, _ARG_SHAPES[name](xs)


def _fan_command(args) -> tuple[int, str]:
    name, bargs = parse_builder_spec(args.builder)
    fan = BUILDERS[name](*bargs)
    show = [s for s in args.show.split(",") if s] if args.show else list(DEFAULT_SHOW)
    values = {}
    for op_name in show:
        op = OPERATIONS.get(op_name)
        if op is None or op.subject != "fan":
            raise ScenarioError(f"{op_name!r} is not a fan invariant")
        # invariants needing arguments get the natural defaults
        defaults = {"k": 2} if op_name in ("smooth_in_codim", "qfactorial_in_codim") else {"anticanonical": True}
        try:
            values[op_name] = _jsonable(op.func(fan, defaults))
        except ToricError as exc:
            values[op_name] = f"error: {type(exc).__name__}: {exc}"
    if args.json:
        doc = {"builder": name, "args": _jsonable(bargs), "fan": fan.to_dict(), "invariants": values,
               "engine_version": __version__}
        return EXIT_OK, json.dumps(doc, indent=2, sort_keys=True) + "\n"
    lines = [f"{name}({', '.join(map(str, bargs))}): rank {fan.ambient_rank}, "
             f"{len(fan.rays)} rays, {len(fan.max_cones)} maximal cones"]
    lines += [f"  {k}: {json.dumps(v)}" for k, v in values.items()]
    return EXIT_OK, "\n".join(lines) + "\n"


def _emit_report(report: Report, args) -> tuple[int, str]:
    text = report.to_json(args.deterministic) if args.json else report.to_text()
    return (EXIT_OK if report.ok else EXIT_FAIL), text


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit machine-readable JSON")
    common.add_argument("--deterministic", action="store_true", help="omit the timestamp from JSON reports")
    common.add_argument("--verbose", action="store_true", help="log progress to stderr")
    p = argparse.ArgumentParser(prog="torickit", parents=[common],
                                description="Exact toric geometry checks.")
    p.add_argument("--version", action="version", version=f"torickit {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    a = sub.add_parser("analyze", parents=[common], help="run the checks of a scenario file")
    a.add_argument("scenario")
    s = sub.add_parser("paper-suite", parents=[common], help="run the built-in verification suite")
    s.add_argument("--filter", default=None, help="only scenarios carrying this tag")
    f = sub.add_parser("fan", parents=[common], help="build a fan and print invariants")
    f.add_argument("builder", help="builder=args, e.g. weighted_projective=1,1,2")
    f.add_argument("--show", default="", help="comma-separated invariant names")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    warnings.simplefilter("default")
    try:
        if args.command == "analyze":
            code, out = _emit_report(run_scenario(args.scenario), args)
        elif args.command == "paper-suite":
            code, out = _emit_report(paper_suite(args.filter), args)
        else:
            code, out = _fan_command(args)
    except ScenarioError as exc:
        print(f"torickit: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ToricError, ValueError) as exc:
        print(f"torickit: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
