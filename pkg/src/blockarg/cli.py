"""Command line interface: ``blockarg solve|check|flatten|dot|encode-aba|random``."""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import aba as aba_mod
from .acceptability import semantics_report
from .config import MODES, S_DOMINANCE, SCOPES, SolverConfig, parse_constraints
from .constrained import is_complete_under_c
from .constraints import constraint_report
from .dot import export_dot
from .errors import BlockArgError, SizeCapExceeded, SolverTimeout
from .flatrep import flatten
from .generate import random_aba, random_framework
from .io import dumps, load_fixture, load_path
from .labelling import Labelling
from .model import validate
from .standard import is_standard_complete_labelling

EXIT_OK, EXIT_INPUT, EXIT_EMPTY, EXIT_CAP, EXIT_VIOLATIONS = 0, 1, 2, 3, 4

SEMANTICS = ("complete", "grounded", "semi-grounded", "preferred", "all")


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("-i", "--input", type=Path, help="framework file (.json or .bba)")
    src.add_argument("--fixture", help="name of a bundled fixture, e.g. fig_a")


def _add_config(p: argparse.ArgumentParser) -> None:
    p.add_argument("--constraints", default="none", help="none or a comma list of G,S,STAR")
    p.add_argument("--mode", choices=MODES, default="fixpoint")
    p.add_argument("--scope", choices=SCOPES, default="local")
    p.add_argument("--s-dominance", choices=S_DOMINANCE, default="depth")
    p.add_argument("--collapse-eq", action="store_true", help="merge Eq-equal root children")
    p.add_argument("--max-occurrences", type=int, default=64)
    p.add_argument("--timeout", type=float, default=None, help="seconds")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="blockarg", description="Block bipolar argumentation solver")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute root-level extensions")
    _add_input(p)
    _add_config(p)
    p.add_argument("--semantics", choices=SEMANTICS, default="all")
    p.add_argument("--engine", choices=("search", "oracle"), default="search")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--labellings", action="store_true", help="include full labellings in JSON output")

    p = sub.add_parser("check", help="check a labelling")
    _add_input(p)
    _add_config(p)
    p.add_argument("-l", "--labelling", type=Path, required=True, help="labelling JSON file")
    p.add_argument("--format", choices=("json", "text"), default="text")

    p = sub.add_parser("flatten", help="list every occurrence with its position")
    _add_input(p)
    p.add_argument("--max-occurrences", type=int, default=64)
    p.add_argument("--format", choices=("json", "text"), default="text")

    p = sub.add_parser("dot", help="export Graphviz DOT")
    _add_input(p)
    p.add_argument("--max-occurrences", type=int, default=64)
    p.add_argument("-l", "--labelling", type=Path, help="colour nodes by this labelling")
    p.add_argument("-o", "--output", type=Path)

    p = sub.add_parser("encode-aba", help="encode an ABA document as a block framework")
    p.add_argument("-i", "--input", type=Path, required=True)
    p.add_argument("-o", "--output", type=Path)

    p = sub.add_parser("random", help="print a random framework or ABA document")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--kind", choices=("bba", "aba"), default="bba")
    return parser


def _load(args):
    doc = load_fixture(args.fixture) if args.fixture else load_path(args.input)
    return doc


def _config(args) -> SolverConfig:
    return SolverConfig(
        parse_constraints(args.constraints),
        mode=args.mode,
        s_dominance=args.s_dominance,
        scope=args.scope,
        collapse_eq=args.collapse_eq,
        max_occurrences=args.max_occurrences,
        timeout=args.timeout,
    )


def _fmt_set(s) -> str:
    return "{" + ", ".join(sorted(s)) + "}"


def _emit(text: str, path: Path | None = None) -> None:
    if path is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        path.write_text(text, encoding="utf-8")


def cmd_solve(args) -> int:
    config = _config(args)
    result = semantics_report(validate(_load(args)), config, engine=args.engine)
    data = result.to_json(with_labellings=args.labellings)
    wanted = SEMANTICS[:-1] if args.semantics == "all" else (args.semantics,)
    keys = [w.replace("-", "_") for w in wanted]
    if args.format == "json":
        keep = {"config", "notes", "labellings", *keys}
        if "grounded" in keys:
            keep.add("grounded_is_complete")
        if "semi_grounded" in keys:
            keep.add("semi_grounded_count")
        _emit(json.dumps({k: v for k, v in data.items() if k in keep}, indent=2))
    else:
        lines = []
        for key in keys:
            value = result.family(key)
            if key == "grounded":
                shown = "none" if value is None else _fmt_set(value)
                if value is not None and not result.grounded_is_complete:
                    shown += "  (not complete)"
            else:
                shown = ", ".join(_fmt_set(s) for s in value) or "none"
            lines.append(f"{key.replace('_', '-'):>14}: {shown}")
        for note in result.notes:
            lines.append(f"divergence ({note['field']}): reference {note['reference']}, derived {note['derived']}")
        _emit("\n".join(lines))
    if config.mode == "fixpoint" and not result.labellings:
        return EXIT_EMPTY
    return EXIT_OK


def cmd_check(args) -> int:
    config = _config(args)
    flat = flatten(validate(_load(args)), config.max_occurrences)
    lab = Labelling.from_json(json.loads(args.labelling.read_text(encoding="utf-8")))
    if set(lab) != set(flat.positions):
        raise BlockArgError("labelling does not cover exactly the framework's positions")
    if config.constraints:
        verdict = is_complete_under_c(flat, lab, config)
    else:
        verdict = is_standard_complete_labelling(flat, lab)
    violations = constraint_report(flat, lab, config=config)
    data = {
        "complete": verdict.ok,
        "condition_failures": [v.to_json() for v in verdict.violations],
        "constraint_violations": [v.to_json() for v in violations],
    }
    if args.format == "json":
        _emit(json.dumps(data, indent=2))
    else:
        lines = [f"complete: {'yes' if verdict.ok else 'no'}"]
        for v in verdict.violations:
            lines.append(f"  condition {v.rule} fails at {'.'.join(map(str, v.position))}: {v.detail}")
        for v in violations:
            lines.append(f"  {v.rule} violated at {'.'.join(map(str, v.position))}: {v.detail}")
        _emit("\n".join(lines))
    return EXIT_OK if verdict.ok and not violations else EXIT_VIOLATIONS


def cmd_flatten(args) -> int:
    flat = flatten(validate(_load(args)), args.max_occurrences)
    if args.format == "json":
        _emit(json.dumps(flat.to_json(), indent=2))
    else:
        _emit("\n".join(f"{'.'.join(map(str, p))}\t{flat.name(p)}" for p in flat.positions))
    return EXIT_OK


def cmd_dot(args) -> int:
    flat = flatten(validate(_load(args)), args.max_occurrences)
    lab = None
    if args.labelling:
        lab = Labelling.from_json(json.loads(args.labelling.read_text(encoding="utf-8")))
    _emit(export_dot(flat, lab), args.output)
    return EXIT_OK


def cmd_encode_aba(args) -> int:
    aba = aba_mod.load_aba(args.input.read_text(encoding="utf-8"))
    doc = aba_mod.encode_to_bba(aba)
    validate(doc)
    _emit(dumps(doc), args.output)
    return EXIT_OK


def cmd_random(args) -> int:
    rng = random.Random(args.seed)
    if args.kind == "aba":
        _emit(json.dumps(aba_mod.aba_to_json(random_aba(rng)), indent=2))
    else:
        _emit(dumps(random_framework(rng)))
    return EXIT_OK


COMMANDS = {
    "solve": cmd_solve,
    "check": cmd_check,
    "flatten": cmd_flatten,
    "dot": cmd_dot,
    "encode-aba": cmd_encode_aba,
    "random": cmd_random,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (SizeCapExceeded, SolverTimeout) as exc:
        print(f"blockarg: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (BlockArgError, OSError, ValueError) as exc:
        print(f"blockarg: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
