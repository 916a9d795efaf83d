"""Command line: plot an experiment directory's summary to an image file."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .render import PlotSpec, SummaryError, render


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mblplot",
        description="Render mean cumulative regret curves with +-SE bands",
    )
    parser.add_argument("dir", type=Path, help="experiment directory with summary.json")
    parser.add_argument("--out", type=Path, default=Path("fig.pdf"), help="output image")
    parser.add_argument(
        "--algos", default=None, help="comma-separated subset of algorithms to draw"
    )
    parser.add_argument("--log-x", action="store_true", help="logarithmic round axis")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    algos = tuple(a.strip() for a in args.algos.split(",")) if args.algos else None
    spec = PlotSpec(
        input_dir=args.dir, out_path=args.out, algos=algos, log_x=args.log_x
    )
    try:
        out = render(spec)
    except SummaryError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
