"""Command line entry point.

Exit codes: 0 success, 1 usage error, 2 data or model error.
"""

import argparse
import sys

import torch

from .compute import METRICS, compute_scores, write_output
from .dataset import read_dataset
from .encoder import TextEncoder
from .errors import BridgeError


class _ArgumentParser(argparse.ArgumentParser):
    # usage errors exit 1; argparse's default of 2 is reserved for data errors
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(
        prog="sam-bridge",
        description=("Compute embedding-based metric scores for a JSONL "
                     "dataset and write them as external-scores JSON."),
    )
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_ArgumentParser)
    compute = sub.add_parser("compute", help="score a dataset")
    compute.add_argument("--dataset", required=True,
                         help="JSONL file with id/hyp/ref per line")
    compute.add_argument("--metric", required=True, choices=METRICS)
    compute.add_argument("--model", required=True,
                         help="checkpoint path or hub identifier")
    compute.add_argument("--out", required=True,
                         help="output JSON path")
    compute.add_argument("--batch-size", type=int, default=16)
    compute.add_argument("--seed", type=int, default=0)
    return parser


def _cmd_compute(args) -> int:
    torch.manual_seed(args.seed)
    pairs = read_dataset(args.dataset)
    if not pairs:
        print(f"warning: dataset {args.dataset} is empty; writing empty "
              "scores", file=sys.stderr)
    encoder = TextEncoder(args.model, batch_size=args.batch_size)
    output = compute_scores(pairs, encoder, args.metric)
    write_output(output, args.out)
    print(f"wrote {len(output.scores)} {args.metric} scores to {args.out}")
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _cmd_compute(args)
    except (BridgeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
