"""Bound-state census over the coupling/detuning plane.

The number of bound states changes across the closed-form threshold curves;
sweeping charts those phases, optionally validated pointwise against the
diagonalization oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .analytic import BRANCH_LOWER, BRANCH_UPPER, _branch_exists, bic_find, thresholds
from .errors import DomainError
from .numeric import build_hamiltonian, count_out_of_band, diagonalize
from .params import SystemParams

#: grid defaults covering every regime of interest
DEFAULT_G_RANGE = (0.0, 2.0, 81)
DEFAULT_DELTA_RANGE = (-3.0, 3.0, 121)
DEFAULT_ORACLE_SITES = 400


@dataclass(frozen=True)
class PhasePoint:
    """Census at one (g, delta_c) grid point; ``n_oob_numeric`` holds the
    diagonalization count when the oracle ran."""

    g: float
    delta_c: float
    n_boc: int
    has_bic: bool
    n_total: int
    n_oob_numeric: int | None = None


def analytic_boc_count(params: SystemParams) -> int:
    """Number of detached bound states from the closed-form thresholds."""
    thr = thresholds(params)
    return sum(
        _branch_exists(params, branch, thr) for branch in (BRANCH_LOWER, BRANCH_UPPER)
    )


def _grid(span) -> np.ndarray:
    lo, hi, steps = span
    if steps < 2:
        raise DomainError("a sweep range needs at least 2 steps")
    if not (math.isfinite(lo) and math.isfinite(hi)) or hi < lo:
        raise DomainError(f"bad sweep range {span}")
    return np.linspace(lo, hi, int(steps))


def sweep(
    d: int,
    g_range: tuple[float, float, int] = DEFAULT_G_RANGE,
    delta_range: tuple[float, float, int] = DEFAULT_DELTA_RANGE,
    oracle: bool = False,
    *,
    xi: float = 1.0,
    omega_c: float = 0.0,
    n_sites: int = DEFAULT_ORACLE_SITES,
) -> list[PhasePoint]:
    """Census at every grid point, row-major with g as the outer axis.

    With ``oracle=True`` each point is also diagonalized at ``n_sites`` and
    the out-of-band count recorded.
    """
    points = []
    for g in _grid(g_range):
        for delta_c in _grid(delta_range):
            params = SystemParams(
                delta_c=float(delta_c),
                g=float(g),
                d=d,
                n_sites=n_sites,
                omega_c=omega_c,
                xi=xi,
            )
            n_boc = analytic_boc_count(params)
            has_bic = bic_find(params) is not None
            n_oob = None
            if oracle:
                sol = diagonalize(build_hamiltonian(params))
                n_oob = count_out_of_band(sol, params)
            points.append(
                PhasePoint(
                    g=float(g),
                    delta_c=float(delta_c),
                    n_boc=n_boc,
                    has_bic=has_bic,
                    n_total=n_boc + int(has_bic),
                    n_oob_numeric=n_oob,
                )
            )
    return points


def boundary_curves(
    d: int,
    delta_range: tuple[float, float, int] = DEFAULT_DELTA_RANGE,
    *,
    xi: float = 1.0,
) -> tuple[list[tuple[float, float]], list[tuple[float, float]]]:
    """Threshold curves (delta_c, g_crit) for the upper and lower branches.

    Where the existence condition makes a branch unconditional the critical
    coupling is emitted as 0.
    """
    upper, lower = [], []
    for delta_c in _grid(delta_range):
        dc = float(delta_c)
        g_up = math.sqrt(xi * (2.0 * xi - dc) / d) if dc < 2.0 * xi else 0.0
        g_lo = math.sqrt(xi * (2.0 * xi + dc) / d) if dc > -2.0 * xi else 0.0
        upper.append((dc, g_up))
        lower.append((dc, g_lo))
    return upper, lower


def write_phasemap_csv(points: list[PhasePoint], path) -> None:
    """Write sweep points as CSV; the numeric column appears only when the
    oracle ran."""
    with_oracle = any(p.n_oob_numeric is not None for p in points)
    header = "g,delta_c,n_boc,has_bic,n_total"
    if with_oracle:
        header += ",n_oob_numeric"
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(header + "\n")
        for p in points:
            row = "%.17g,%.17g,%d,%d,%d" % (
                p.g,
                p.delta_c,
                p.n_boc,
                int(p.has_bic),
                p.n_total,
            )
            if with_oracle:
                row += ",%d" % (p.n_oob_numeric if p.n_oob_numeric is not None else -1)
            fh.write(row + "\n")


def write_boundary_csv(curve: list[tuple[float, float]], path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("delta_c,g_crit\n")
        for delta_c, g_crit in curve:
            fh.write("%.17g,%.17g\n" % (delta_c, g_crit))
