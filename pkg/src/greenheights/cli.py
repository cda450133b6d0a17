"""Command-line front end: analyze tables, build constructions, stream the
census, run the claim sweep, and export Hasse diagrams.

Exit codes: 0 success, 1 sweep found violations, 2 malformed input,
3 internal cross-check failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import asdict
from pathlib import Path

from .core import format_mtab, parse_mtab
from .enumeration import EnumerationConfig, enumerate_semigroups
from .errors import InternalCheckError, SemigroupError
from .green import ORDERED_RELATIONS, to_dot
from .recipes import build_from_string, looks_like_recipe
from .verify import (
    CLAIM_IDS,
    SCHEMA,
    analyze,
    report_payload,
    summary_csv_rows,
    sweep,
)


def _load_input(text: str):
    """Resolve a CLI input: '-' for stdin, a recipe string, or a file path."""
    if text == "-":
        return parse_mtab(sys.stdin.read())
    if looks_like_recipe(text):
        return build_from_string(text)
    return parse_mtab(Path(text).read_text(encoding="utf-8"))


def _write_or_print(payload: str, output: str | None):
    if output is None:
        sys.stdout.write(payload)
    else:
        Path(output).write_text(payload, encoding="utf-8")


def _cmd_analyze(args) -> int:
    s = _load_input(args.input)
    report = analyze(s)
    doc = {"schema": SCHEMA, "order": s.order}
    doc.update(asdict(report))
    _write_or_print(json.dumps(doc, indent=2) + "\n", args.output)
    return 0


def _cmd_construct(args) -> int:
    s = _load_input(args.recipe)
    _write_or_print(format_mtab(s), args.output)
    return 0


def _cmd_enumerate(args) -> int:
    config = EnumerationConfig(
        order=args.order,
        up_to_isomorphism=args.up_to_iso,
        include_anti_isomorphs=not args.fold_anti,
        limit=args.limit,
    )
    if args.count:
        total = sum(1 for _ in enumerate_semigroups(config))
        print(total)
        return 0
    first = True
    for s in enumerate_semigroups(config):
        if not first:
            sys.stdout.write("\n")
        sys.stdout.write(format_mtab(s))
        first = False
    return 0


def _cmd_verify(args) -> int:
    inputs: list = []
    if args.enumerate_order is not None:
        config = EnumerationConfig(order=args.enumerate_order, up_to_isomorphism=args.up_to_iso)
        inputs.extend(
            (f"enum:order={args.enumerate_order}:index={i}", s)
            for i, s in enumerate(enumerate_semigroups(config))
        )
    for recipe in args.recipes:
        inputs.append((recipe, _load_input(recipe)))
    if not inputs:
        print("nothing to verify: pass recipes or --enumerate-order", file=sys.stderr)
        return 2
    summary = sweep(inputs, jobs=args.jobs)

    print(f"inputs: {summary.inputs}")
    print(f"claims per input: {len(CLAIM_IDS)}")
    print(f"claim evaluations: {summary.total_evaluations}")
    for claim_id, (applicable, held) in summary.claim_stats.items():
        print(f"  {claim_id:<18} applicable {applicable:>6}  held {held:>6}")
    print(f"violations: {len(summary.violations)}")
    for violation in summary.violations:
        print(f"  {violation.claim_id} on {violation.provenance}")

    if args.report is not None:
        payload = json.dumps(report_payload(summary), indent=2) + "\n"
        Path(args.report).write_text(payload, encoding="utf-8")
    if args.csv is not None:
        with open(args.csv, "w", newline="", encoding="utf-8") as handle:
            writer = csv.writer(handle)
            writer.writerows(summary_csv_rows(summary))
    if args.triples_log is not None:
        lines = [
            " ".join(str(v) for v in triple)
            for triple in summary.attained_triples
        ]
        Path(args.triples_log).write_text("\n".join(lines) + "\n", encoding="utf-8")
    return 1 if summary.violations else 0


def _cmd_export_dot(args) -> int:
    s = _load_input(args.input)
    relations = args.relation or list(ORDERED_RELATIONS)
    if args.out_dir is None:
        if len(relations) != 1:
            print("--out-dir is required when exporting several relations", file=sys.stderr)
            return 2
        sys.stdout.write(to_dot(s, relations[0]))
        return 0
    directory = Path(args.out_dir)
    directory.mkdir(parents=True, exist_ok=True)
    for relation in relations:
        (directory / f"{relation}.dot").write_text(
            to_dot(s, relation), encoding="utf-8"
        )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="greenheights",
        description="Green's relations, class-poset heights and claim checks "
        "for finite semigroups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="heights and flags of one semigroup, as JSON")
    p.add_argument("input", help="mtab path, recipe string, or '-' for stdin")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("construct", help="build a recipe and print its mtab table")
    p.add_argument("recipe", help="recipe string such as nm:3,5 or u-of:fig1_s")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("enumerate", help="stream the census of one order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--up-to-iso", action="store_true")
    p.add_argument(
        "--fold-anti",
        action="store_true",
        help="also identify anti-isomorphic tables (only with --up-to-iso)",
    )
    p.add_argument("--limit", type=int)
    p.add_argument("--count", action="store_true", help="print only the count")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="run the claim registry over a batch")
    p.add_argument("recipes", nargs="*", help="recipe strings or mtab paths")
    p.add_argument("--enumerate-order", type=int)
    p.add_argument("--up-to-iso", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report", help="write the JSON report here")
    p.add_argument("--csv", help="write the per-(input, claim) CSV here")
    p.add_argument("--triples-log", help="write attained (H_L,H_R,H_J) triples here")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("export-dot", help="Hasse diagrams as Graphviz files")
    p.add_argument("input")
    p.add_argument(
        "--relation",
        action="append",
        choices=list(ORDERED_RELATIONS),
        help="repeatable; defaults to all four",
    )
    p.add_argument("--out-dir")
    p.set_defaults(func=_cmd_export_dot)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InternalCheckError as exc:
        print(f"internal cross-check failure: {exc}", file=sys.stderr)
        return 3
    except (SemigroupError, OSError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
