"""Batch rendering entry point: ``render <figure> --in <dir> --out <file>``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")  # render without a display server

from .errors import MissingInput
from .render import render_dynamics, render_phasemap, render_spectrum

_FIGURES = {
    "spectrum": render_spectrum,
    "dynamics": render_dynamics,
    "phasemap": render_phasemap,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="render",
        description="Render static figures from craqed output files.",
    )
    parser.add_argument("figure", choices=sorted(_FIGURES))
    parser.add_argument("--in", dest="in_dir", type=Path, required=True,
                        help="directory holding the input files")
    parser.add_argument("--out", type=Path, required=True,
                        help="output image path (format from the extension)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        _FIGURES[args.figure](args.in_dir, args.out)
    except (MissingInput, OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def entry() -> None:  # console-script shim
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
