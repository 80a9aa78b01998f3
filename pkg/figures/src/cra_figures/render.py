"""Figure builders for spectrum sweeps, emission dynamics and phase maps.

Figures are assembled directly on matplotlib Figure objects, so no backend
or display server is involved until the caller saves them.  All energies
and couplings are shown in units of the hop strength read from the input
records.
"""

from __future__ import annotations

import json
import warnings
from pathlib import Path

import numpy as np
from matplotlib.figure import Figure

from .errors import MissingInput
from .io import load_phasemap, load_spectra, load_trajectories


def render_spectrum(in_dir, out_path=None) -> Figure:
    """Energy spectrum versus coupling: shaded band, detached levels as
    curves, the confined in-band level as a horizontal line."""
    records = load_spectra(in_dir)
    xi = records[0]["params"]["xi"]
    omega_c = records[0]["params"]["omega_c"]
    gs = np.array([r["params"]["g"] for r in records]) / xi

    fig = Figure(figsize=(6.0, 4.5))
    ax = fig.add_subplot()
    band = records[0]["band"]
    ax.axhspan(
        (band[0] - omega_c) / xi,
        (band[1] - omega_c) / xi,
        color="0.85",
        zorder=0,
        label="band",
    )

    branches: dict[str, dict[float, float]] = {"upper": {}, "lower": {}}
    bic_levels = {}
    for g, record in zip(gs, records):
        for state in record["bound_states_outside"]:
            branches[state["branch"]][g] = (state["energy"] - omega_c) / xi
        bic = record["bound_state_in_continuum"]
        if bic is not None:
            bic_levels[g] = (bic["energy"] - omega_c) / xi
    for branch, color in (("upper", "tab:red"), ("lower", "tab:blue")):
        if branches[branch]:
            xs = sorted(branches[branch])
            ax.plot(
                xs,
                [branches[branch][x] for x in xs],
                color=color,
                lw=1.8,
                label=f"{branch} bound state",
            )
    if bic_levels:
        level = next(iter(bic_levels.values()))
        ax.hlines(
            level,
            min(bic_levels),
            max(bic_levels),
            color="tab:green",
            lw=1.8,
            linestyles="--",
            label="in-band bound state",
        )

    ax.set_xlabel(r"coupling $g/\xi$")
    ax.set_ylabel(r"energy $(E-\omega_c)/\xi$")
    ax.set_xlim(gs.min(), gs.max())
    ax.legend(loc="upper left", fontsize=8)
    fig.tight_layout()
    if out_path is not None:
        fig.savefig(out_path)
    return fig


def _panel_meta(label: str, data: np.ndarray, in_dir) -> tuple[str, float]:
    # an adjacent longtime.json refines the panel title and the time unit
    for candidate in (
        Path(in_dir) / label / "longtime.json",
        Path(in_dir) / "longtime.json",
    ):
        if candidate.exists():
            with open(candidate, encoding="utf-8") as fh:
                report = json.load(fh)
            params = report.get("params", {})
            xi = params.get("xi", 1.0)
            title = report.get("category", label).replace("_", " ")
            if params:
                title += (
                    rf"  ($\Delta_c/\xi$={params['delta_c'] / xi:g},"
                    rf" d={params['d']}, $g/\xi$={params['g'] / xi:g})"
                )
            return title, xi
    return label, 1.0


def render_dynamics(in_dir, out_path=None) -> Figure:
    """Excited-state population versus time, one panel per trajectory."""
    trajectories = load_trajectories(in_dir)
    n = len(trajectories)
    ncols = 2 if n > 1 else 1
    nrows = (n + ncols - 1) // ncols
    fig = Figure(figsize=(5.0 * ncols, 3.2 * nrows))
    axes = fig.subplots(nrows, ncols, squeeze=False)
    for ax in axes.flat[n:]:
        ax.set_visible(False)
    for ax, (label, data) in zip(axes.flat, trajectories):
        title, xi = _panel_meta(label, data, in_dir)
        ax.plot(data[:, 0] * xi, data[:, 3], lw=1.0)
        ax.set_title(title, fontsize=9)
        ax.set_xlabel(r"$t\,\xi$")
        ax.set_ylabel(r"$P_e$")
        ax.set_ylim(0.0, 1.05)
    fig.tight_layout()
    if out_path is not None:
        fig.savefig(out_path)
    return fig


def render_phasemap(in_dir, out_path=None) -> Figure:
    """Bound-state count over the (detuning, coupling) plane with the
    threshold curves overlaid where their files are present."""
    record = load_phasemap(in_dir)
    gs = np.unique(record["g"])
    dcs = np.unique(record["delta_c"])
    grid = np.full((gs.size, dcs.size), np.nan)
    g_idx = np.searchsorted(gs, record["g"])
    d_idx = np.searchsorted(dcs, record["delta_c"])
    grid[g_idx, d_idx] = record["n_total"]

    fig = Figure(figsize=(6.0, 4.5))
    ax = fig.add_subplot()
    mesh = ax.pcolormesh(
        dcs, gs, grid, cmap="viridis", vmin=0, vmax=max(3, int(np.nanmax(grid)))
    )
    fig.colorbar(mesh, ax=ax, label="number of bound states")
    for name, style, label in (
        ("boundary_u", "w--", "upper threshold"),
        ("boundary_l", "w:", "lower threshold"),
    ):
        curve = record[name]
        if curve is None:
            warnings.warn(f"{name}.csv not found; curve omitted", stacklevel=2)
            continue
        inside = (curve[:, 1] >= gs.min()) & (curve[:, 1] <= gs.max())
        ax.plot(curve[inside, 0], curve[inside, 1], style, lw=1.5, label=label)
    ax.set_xlabel(r"detuning $\Delta_c/\xi$")
    ax.set_ylabel(r"coupling $g/\xi$")
    if ax.get_legend_handles_labels()[0]:
        ax.legend(loc="upper right", fontsize=8)
    fig.tight_layout()
    if out_path is not None:
        fig.savefig(out_path)
    return fig
