"""
Command-line front door.

Subcommands::

    belieffusion combine --rule <id> <bba1> <bba2> [-o <out>]
    belieffusion conflict <bba1> <bba2>
    belieffusion betp <bba>
    belieffusion scenario --config <file> --out <dir> [--rules <csv>] [--seed <u64>]
    belieffusion rules

Exit codes: 0 success, 2 parse/validation/config failure, 3 frame mismatch,
4 Dempster total conflict. Diagnostics go to stderr, data to stdout.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .core import FrameMismatchError, MassFunction, validate
from .massio import MassFormatError, mass_to_dict, read_mass, write_mass
from .rules import RULES, TotalConflictError
from .scenario import (
    ScenarioConfig,
    ScenarioError,
    run_scenario,
    write_metadata,
    write_trajectory_csv,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_FRAME_MISMATCH = 3
EXIT_TOTAL_CONFLICT = 4


def _fail(code: int, message: str) -> int:
    print(f"belieffusion: {message}", file=sys.stderr)
    return code


def _load_closed_world(path: str) -> MassFunction:
    m = read_mass(path)
    report = validate(m)
    if not report.ok:
        raise MassFormatError(f"{path}: " + "; ".join(report.violations))
    if m.open_world:
        raise MassFormatError(f"{path}: combination inputs must be closed-world")
    return m


def _cmd_combine(args: argparse.Namespace) -> int:
    try:
        m1 = _load_closed_world(args.bba1)
        m2 = _load_closed_world(args.bba2)
    except MassFormatError as exc:
        return _fail(EXIT_INPUT, str(exc))
    try:
        fused = RULES[args.rule](m1, m2)
    except FrameMismatchError as exc:
        return _fail(EXIT_FRAME_MISMATCH, str(exc))
    except TotalConflictError as exc:
        return _fail(EXIT_TOTAL_CONFLICT, str(exc))
    if args.output:
        write_mass(args.output, fused)
    else:
        json.dump(mass_to_dict(fused), sys.stdout, ensure_ascii=False, indent=2)
        print()
    return EXIT_OK


def _cmd_conflict(args: argparse.Namespace) -> int:
    from .core import conflict

    try:
        m1 = _load_closed_world(args.bba1)
        m2 = _load_closed_world(args.bba2)
    except MassFormatError as exc:
        return _fail(EXIT_INPUT, str(exc))
    try:
        decomposition = conflict(m1, m2)
    except FrameMismatchError as exc:
        return _fail(EXIT_FRAME_MISMATCH, str(exc))
    print(repr(decomposition.total))
    for x, y, product in decomposition.pairs:
        print(f"{x.label(m1.frame)},{y.label(m1.frame)},{product!r}")
    return EXIT_OK


def _cmd_betp(args: argparse.Namespace) -> int:
    from .decision import betp

    try:
        m = _load_closed_world(args.bba)
    except MassFormatError as exc:
        return _fail(EXIT_INPUT, str(exc))
    p = betp(m)
    for label, prob in zip(m.frame.labels, p.probs):
        print(f"{label},{prob!r}")
    return EXIT_OK


def _parse_scenario_config(path: str) -> ScenarioConfig:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ScenarioError(f"{path}: line {exc.lineno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ScenarioError(f"{path}: top level must be an object")
    known = {
        "n_targets",
        "n_emitters",
        "emitters_per_target",
        "truth_index",
        "pfa",
        "n_reports",
        "report_mass",
        "rule",
        "seed",
        "similar_target",
    }
    unknown = set(doc) - known
    if unknown:
        raise ScenarioError(f"{path}: unknown config keys: {sorted(unknown)}")
    try:
        ept = doc["emitters_per_target"]
        return ScenarioConfig(
            n_targets=int(doc["n_targets"]),
            n_emitters=int(doc["n_emitters"]),
            emitters_per_target=(int(ept[0]), int(ept[1])),
            truth_index=int(doc["truth_index"]),
            pfa=float(doc.get("pfa", 0.3)),
            n_reports=int(doc.get("n_reports", 25)),
            report_mass=float(doc.get("report_mass", 0.8)),
            rule=str(doc.get("rule", "pcr")),
            seed=int(doc.get("seed", 0)),
            similar_target=(
                None if doc.get("similar_target") is None else int(doc["similar_target"])
            ),
        )
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise ScenarioError(f"{path}: bad config: {exc}") from None


def _cmd_scenario(args: argparse.Namespace) -> int:
    try:
        config = _parse_scenario_config(args.config)
        rule_list = (
            [r.strip() for r in args.rules.split(",")] if args.rules else [config.rule]
        )
        for rule in rule_list:
            if rule not in RULES:
                raise ScenarioError(f"unknown rule {rule!r}")
        if args.seed is not None:
            config = ScenarioConfig(
                **{**config.__dict__, "seed": args.seed}
            )
        config.check()
    except ScenarioError as exc:
        return _fail(EXIT_INPUT, str(exc))

    os.makedirs(args.out, exist_ok=True)
    for rule in rule_list:
        run_config = ScenarioConfig(**{**config.__dict__, "rule": rule})
        try:
            result = run_scenario(run_config)
        except ScenarioError as exc:
            return _fail(EXIT_INPUT, str(exc))
        stem = os.path.join(args.out, f"trajectory_{rule}_seed{run_config.seed}")
        write_trajectory_csv(stem + ".csv", result)
        write_metadata(stem + ".meta.json", result)
        if result.failed_at is not None:
            print(
                f"belieffusion: rule {rule!r} hit total conflict at step "
                f"{result.failed_at}; trajectory truncated",
                file=sys.stderr,
            )
    return EXIT_OK


def _cmd_rules(_args: argparse.Namespace) -> int:
    for name in RULES:
        print(name)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="belieffusion",
        description="Combine belief mass functions, inspect conflict, compute "
        "pignistic probabilities, and run identification scenarios.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("combine", help="fuse two bba files under a rule")
    p.add_argument("--rule", required=True, choices=sorted(RULES))
    p.add_argument("bba1")
    p.add_argument("bba2")
    p.add_argument("-o", "--output", help="output file (default: stdout)")
    p.set_defaults(func=_cmd_combine)

    p = sub.add_parser("conflict", help="print k12 and its disjoint-pair decomposition")
    p.add_argument("bba1")
    p.add_argument("bba2")
    p.set_defaults(func=_cmd_conflict)

    p = sub.add_parser("betp", help="print the pignistic distribution of a bba")
    p.add_argument("bba")
    p.set_defaults(func=_cmd_betp)

    p = sub.add_parser("scenario", help="run a target-identification scenario sweep")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--rules", help="comma-separated rule list overriding the config")
    p.add_argument("--seed", type=int, help="seed overriding the config")
    p.set_defaults(func=_cmd_scenario)

    p = sub.add_parser("rules", help="list available combination rules")
    p.set_defaults(func=_cmd_rules)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
