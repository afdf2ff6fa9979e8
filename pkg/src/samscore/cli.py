"""Command-line front end.

Three subcommands: ``score`` writes per-segment reports, ``correlate``
additionally writes metric/human correlation tables, and ``selftest``
checks the bundled demonstration pairs.  Usage errors exit 1; data errors
(unreadable or malformed inputs) exit 2.
"""

from __future__ import annotations

import argparse
import os
import sys

from samscore import pipeline
from samscore.errors import SamscoreError
from samscore.lexicon import bundled_lexicon, load_lexicon
from samscore.metrics import load_external_scores
from samscore.pipeline import (
    BUILTIN_METRIC_NAMES,
    evaluate,
    load_dataset,
    write_correlations_csv,
    write_report_json,
    write_report_text,
)
from samscore.selftest import format_selftest, run_selftest
from samscore.textproc import load_lemma_exceptions


class _ArgumentParser(argparse.ArgumentParser):
    # usage problems are exit code 1 in this tool, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(
        prog="samscore",
        description="Sentiment-aware adjustment of segment-level MT quality scores.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    def add_common(p):
        p.add_argument("--dataset", required=True,
                       help="JSON Lines dataset of segments")
        p.add_argument("--lexicon",
                       help="sentiment lexicon file (default: bundled mini lexicon)")
        p.add_argument("--metrics", default="bleu,meteor",
                       help="comma list: builtin names and ext:NAME[=FILE] entries")
        p.add_argument("--lemma-exceptions",
                       help="override the bundled lemma exception table")
        p.add_argument("--out", required=True, help="output directory")

    score = sub.add_parser("score", help="score every segment with every metric")
    add_common(score)

    corr = sub.add_parser("correlate",
                          help="score segments and correlate against human judgements")
    add_common(corr)
    corr.add_argument("--with-sam", action="store_true",
                      help="report only the sentiment-adjusted variant")
    corr.add_argument("--without-sam", action="store_true",
                      help="report only the unadjusted variant")

    sub.add_parser("selftest", help="check the bundled demonstration pairs")
    return parser


def _parse_metric_arg(parser: _ArgumentParser, text: str):
    builtins = []
    external_specs = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            parser.error(f"empty metric entry in {text!r}")
        if part.startswith("ext:"):
            body = part[len("ext:"):]
            name, sep, path = body.partition("=")
            if not name:
                parser.error(f"external metric entry {part!r} is missing a name")
            external_specs.append((name, path if sep else None))
        elif part in BUILTIN_METRIC_NAMES:
            builtins.append(part)
        else:
            parser.error(
                f"unknown metric {part!r}; builtins are "
                f"{', '.join(BUILTIN_METRIC_NAMES)}")
    return builtins, external_specs


def _load_inputs(args):
    records = load_dataset(args.dataset)
    lexicon = load_lexicon(args.lexicon) if args.lexicon else bundled_lexicon()
    exceptions = None
    if args.lemma_exceptions:
        exceptions = load_lemma_exceptions(args.lemma_exceptions)
    return records, lexicon, exceptions


def _resolve_external(external_specs):
    external = {}
    for name, path in external_specs:
        if name in external:
            raise SamscoreError(f"external metric {name!r} given twice")
        if path is None:
            external[name] = None
        else:
            _, scores = load_external_scores(path)
            external[name] = scores
    return external


def _cmd_score(parser, args) -> int:
    builtins, external_specs = _parse_metric_arg(parser, args.metrics)
    records, lexicon, exceptions = _load_inputs(args)
    external = _resolve_external(external_specs)
    report = evaluate(records, lexicon, metrics=builtins, external=external,
                      exceptions=exceptions, correlations=False)
    os.makedirs(args.out, exist_ok=True)
    write_report_json(report, os.path.join(args.out, "report.json"))
    write_report_text(report, os.path.join(args.out, "report.txt"))
    print(f"wrote report.json and report.txt to {args.out}")
    return 0


def _cmd_correlate(parser, args) -> int:
    builtins, external_specs = _parse_metric_arg(parser, args.metrics)
    if args.with_sam and args.without_sam:
        variants = pipeline.VARIANTS
    elif args.with_sam:
        variants = ("sam_adjusted",)
    elif args.without_sam:
        variants = ("raw",)
    else:
        variants = pipeline.VARIANTS
    records, lexicon, exceptions = _load_inputs(args)
    external = _resolve_external(external_specs)
    report = evaluate(records, lexicon, metrics=builtins, external=external,
                      exceptions=exceptions, correlations=True)
    os.makedirs(args.out, exist_ok=True)
    write_report_json(report, os.path.join(args.out, "report.json"), variants)
    write_report_text(report, os.path.join(args.out, "report.txt"), variants)
    write_correlations_csv(
        report, os.path.join(args.out, "correlations.csv"), variants)
    print(f"wrote report.json, report.txt and correlations.csv to {args.out}")
    return 0


def _cmd_selftest() -> int:
    rows, ok = run_selftest()
    sys.stdout.write(format_selftest(rows))
    if not ok:
        print("selftest FAILED", file=sys.stderr)
        return 2
    print("selftest passed")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "score":
            return _cmd_score(parser, args)
        if args.command == "correlate":
            return _cmd_correlate(parser, args)
        return _cmd_selftest()
    except (SamscoreError, OSError, ValueError) as exc:
        print(f"samscore: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
