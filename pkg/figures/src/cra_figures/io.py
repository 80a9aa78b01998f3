"""Readers for the documented craqed output formats.

Spectrum records are JSON files named spectrum*.json, either flat in the
input directory or one per subdirectory (the natural layout of a coupling
sweep).  Trajectories are trajectory*.csv with columns t,re_u,im_u,p_e.
Phase maps are phasemap.csv plus the optional boundary_u.csv/boundary_l.csv
threshold curves.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

from .errors import MissingInput


def _gather(in_dir: Path, pattern: str) -> list[Path]:
    in_dir = Path(in_dir)
    flat = sorted(in_dir.glob(pattern))
    nested = sorted(p for p in in_dir.glob("*/" + pattern))
    return flat + nested


def load_spectra(in_dir) -> list[dict]:
    """All spectrum records under ``in_dir``, sorted by coupling."""
    paths = _gather(in_dir, "spectrum*.json")
    records = []
    for path in paths:
        with open(path, encoding="utf-8") as fh:
            record = json.load(fh)
        record["_path"] = str(path)
        records.append(record)
    if not records:
        raise MissingInput(f"no spectrum*.json under {in_dir}")
    records.sort(key=lambda r: r["params"]["g"])
    return records


def load_trajectories(in_dir) -> list[tuple[str, np.ndarray]]:
    """(label, samples) pairs for every trajectory file under ``in_dir``.

    The label is the subdirectory name when the file sits in one, else the
    file stem; samples have columns t, re_u, im_u, p_e.
    """
    paths = _gather(in_dir, "trajectory*.csv")
    out = []
    for path in paths:
        data = np.loadtxt(path, delimiter=",", skiprows=1)
        label = path.parent.name if path.name == "trajectory.csv" else path.stem
        out.append((label, np.atleast_2d(data)))
    if not out:
        raise MissingInput(f"no trajectory*.csv under {in_dir}")
    return out


def load_phasemap(in_dir) -> dict:
    """Phase-map table and whichever boundary curves are present."""
    in_dir = Path(in_dir)
    table = in_dir / "phasemap.csv"
    if not table.exists():
        raise MissingInput(f"no phasemap.csv under {in_dir}")
    with open(table, encoding="utf-8", newline="") as fh:
        rows = list(csv.DictReader(fh))
    if not rows:
        raise MissingInput(f"{table} holds no rows")
    record = {
        "g": np.array([float(r["g"]) for r in rows]),
        "delta_c": np.array([float(r["delta_c"]) for r in rows]),
        "n_total": np.array([int(r["n_total"]) for r in rows]),
    }
    for name in ("boundary_u", "boundary_l"):
        path = in_dir / f"{name}.csv"
        record[name] = (
            np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
            if path.exists()
            else None
        )
    return record
