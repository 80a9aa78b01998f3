"""Command-line entry point: parse a config, run one task, write files.

Flag values are interpreted in units of the hop strength; ``--xi`` only
rescales the outputs to absolute units.  Every flag has a config-file
equivalent (JSON, flags take precedence) and identical configurations
produce byte-identical output files.

Tasks and their outputs, written into ``--out``:

    spectrum   spectrum.json   eigenvalues, emitter weights, analytic census
    scatter    scatter.csv     reflection and emitter amplitudes over a k grid
    dynamics   trajectory.csv  emitter amplitude samples
               longtime.json   long-time classification report
    phase-map  phasemap.csv    bound-state census over the (g, delta_c) grid
               boundary_u.csv, boundary_l.csv   threshold curves
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .analytic import bic_find, boc_solve, scattering, thresholds
from .dynamics import classify_long_time, evolve_eigenbasis, write_trajectory_csv
from .errors import CraqedError, SingularPoint
from .numeric import build_hamiltonian, count_out_of_band, diagonalize
from .params import SystemParams
from .phasemap import (
    DEFAULT_DELTA_RANGE,
    DEFAULT_G_RANGE,
    boundary_curves,
    sweep,
    write_boundary_csv,
    write_phasemap_csv,
)
from .serialize import dump_json

TASKS = ("spectrum", "scatter", "dynamics", "phase-map")

_TASK_FILES = {
    "spectrum": ("spectrum.json",),
    "scatter": ("scatter.csv",),
    "dynamics": ("trajectory.csv", "longtime.json"),
    "phase-map": ("phasemap.csv", "boundary_u.csv", "boundary_l.csv"),
}


class CliError(CraqedError):
    """Configuration or usage problem reported as a single error line."""


@dataclass
class RunConfig:
    """Resolved invocation: physical parameters plus task options."""

    task: str
    params: SystemParams
    t_max: float | None
    dt: float | None
    k_steps: int
    g_range: tuple[float, float, int]
    delta_range: tuple[float, float, int]
    oracle: bool
    out: Path
    force: bool


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="craqed",
        description="Spectrum and emission dynamics of a two-level emitter "
        "coupled to a semi-infinite resonator array.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--task", choices=TASKS, help="task to run")
    parser.add_argument("--config", type=Path, help="JSON config file")
    parser.add_argument("--omega-c", type=float, help="bare resonator frequency")
    parser.add_argument("--xi", type=float, help="hop strength; rescales outputs")
    parser.add_argument("--delta-c", type=float, help="emitter detuning")
    parser.add_argument("--g", type=float, help="emitter-resonator coupling")
    parser.add_argument("--d", type=int, help="site coupled to the emitter")
    parser.add_argument("--n", type=int, help="number of sites of the chain")
    parser.add_argument("--t-max", type=float, help="evolution horizon")
    parser.add_argument("--dt", type=float, help="sample spacing in time")
    parser.add_argument("--k-steps", type=int, help="size of the wavenumber grid")
    parser.add_argument("--g-range", help="coupling sweep as lo:hi:steps")
    parser.add_argument("--delta-range", help="detuning sweep as lo:hi:steps")
    parser.add_argument("--oracle", action="store_true", default=None,
                        help="validate each sweep point by diagonalization")
    parser.add_argument("--out", type=Path, help="output directory")
    parser.add_argument("--force", action="store_true", default=None,
                        help="overwrite existing output files")
    return parser


def _parse_range(text, flag) -> tuple[float, float, int]:
    if isinstance(text, (list, tuple)) and len(text) == 3:
        return float(text[0]), float(text[1]), int(text[2])
    parts = str(text).split(":")
    if len(parts) != 3:
        raise CliError(f"{flag} must be lo:hi:steps, got {text!r}")
    try:
        return float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise CliError(f"{flag} must be lo:hi:steps, got {text!r}") from exc


def _load_config(path: Path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise CliError(f"cannot read config {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise CliError(f"config {path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise CliError(f"config {path} must hold a JSON object")
    return data


def _pick(flag_value, config: dict, key: str, default=None):
    if flag_value is not None:
        return flag_value
    if key in config:
        return config[key]
    return default


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """Merge flags over config-file values over defaults."""
    config = _load_config(args.config) if args.config else {}
    cfg_params = config.get("params", {})

    task = _pick(args.task, config, "task")
    if task is None:
        raise CliError("no task given; use --task or a config file")
    if task not in TASKS:
        raise CliError(f"unknown task {task!r}")

    xi = float(_pick(args.xi, cfg_params, "xi", 1.0))
    if xi <= 0:
        raise CliError("xi must be positive")
    omega_c = float(_pick(args.omega_c, cfg_params, "omega_c", 0.0))
    delta_c = _pick(args.delta_c, cfg_params, "delta_c")
    g = _pick(args.g, cfg_params, "g")
    d = _pick(args.d, cfg_params, "d")
    n_sites = _pick(args.n, cfg_params, "n_sites", 102)

    if d is None:
        raise CliError("site index --d is required")
    if task == "phase-map":
        delta_c = 0.0 if delta_c is None else delta_c
        g = 0.0 if g is None else g
    if delta_c is None:
        raise CliError("detuning --delta-c is required")
    if g is None:
        raise CliError("coupling --g is required")

    # flag values carry units of xi; rescale to absolute units on entry
    try:
        params = SystemParams(
            delta_c=float(delta_c) * xi,
            g=float(g) * xi,
            d=int(d),
            n_sites=int(n_sites),
            omega_c=omega_c * xi,
            xi=xi,
        )
    except CraqedError as exc:
        raise CliError(f"invalid parameters: {exc}") from exc

    t_max = _pick(args.t_max, config, "t_max")
    dt = _pick(args.dt, config, "dt")
    return RunConfig(
        task=task,
        params=params,
        t_max=float(t_max) / xi if t_max is not None else None,
        dt=float(dt) / xi if dt is not None else None,
        k_steps=int(_pick(args.k_steps, config, "k_steps", 200)),
        g_range=_parse_range(
            _pick(args.g_range, config, "g_range", DEFAULT_G_RANGE), "--g-range"
        ),
        delta_range=_parse_range(
            _pick(args.delta_range, config, "delta_range", DEFAULT_DELTA_RANGE),
            "--delta-range",
        ),
        oracle=bool(_pick(args.oracle, config, "oracle", False)),
        out=Path(_pick(args.out, config, "out", "out")),
        force=bool(_pick(args.force, config, "force", False)),
    )


def _prepare_out(cfg: RunConfig) -> dict[str, Path]:
    cfg.out.mkdir(parents=True, exist_ok=True)
    targets = {name: cfg.out / name for name in _TASK_FILES[cfg.task]}
    if not cfg.force:
        for path in targets.values():
            if path.exists():
                raise CliError(f"output exists: {path} (use --force)")
    return targets


def _boc_record(state) -> dict:
    return {
        "branch": state.branch,
        "kappa": state.kappa,
        "energy": state.energy,
        "c_emitter": state.c_emitter,
        "a_norm": state.a_norm,
        "shallow": state.shallow,
    }


def _run_spectrum(cfg: RunConfig, targets: dict[str, Path]) -> None:
    params = cfg.params
    sol = diagonalize(build_hamiltonian(params))
    thr = thresholds(params)
    bic = bic_find(params)
    record = {
        "params": params.to_dict(),
        "omega_emitter": params.omega_emitter,
        "band": [params.band_bottom, params.band_top],
        "thresholds": {"g_upper": thr.g_upper, "g_lower": thr.g_lower},
        "n_out_of_band": count_out_of_band(sol, params),
        "eigenvalues": sol.energies,
        "emitter_weights": sol.emitter_weights,
        "bound_states_outside": [_boc_record(s) for s in boc_solve(params)],
        "bound_state_in_continuum": None
        if bic is None
        else {
            "mode_index": bic.mode_index,
            "wavenumber": bic.wavenumber,
            "energy": bic.energy,
            "c_emitter": bic.c_emitter,
            "a_photon": bic.a_photon,
        },
    }
    dump_json(record, targets["spectrum.json"])


def _run_scatter(cfg: RunConfig, targets: dict[str, Path]) -> None:
    if cfg.k_steps < 2:
        raise CliError("--k-steps must be at least 2")
    grid = np.linspace(0.01, math.pi - 0.01, cfg.k_steps)
    with open(targets["scatter.csv"], "w", encoding="utf-8") as fh:
        fh.write("k,re_r,im_r,abs_r,re_c,im_c\n")
        for k in grid:
            try:
                amp = scattering(cfg.params, float(k))
            except SingularPoint:
                continue  # confined-state wavenumber; no scattering row
            fh.write(
                "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n"
                % (
                    k,
                    amp.reflection.real,
                    amp.reflection.imag,
                    abs(amp.reflection),
                    amp.c_emitter.real,
                    amp.c_emitter.imag,
                )
            )


def _run_dynamics(cfg: RunConfig, targets: dict[str, Path]) -> None:
    traj = evolve_eigenbasis(cfg.params, cfg.t_max, cfg.dt)
    report = classify_long_time(cfg.params, traj)
    write_trajectory_csv(traj, targets["trajectory.csv"])
    dump_json(
        {
            "params": cfg.params.to_dict(),
            "category": report.category,
            "mean_population": report.mean_population,
            "predicted_mean": report.predicted_mean,
            "frequencies": report.frequencies,
            "predicted_frequencies": report.predicted_frequencies,
            "window": list(report.window),
            "resolution": report.resolution,
            "census": [[e, w] for e, w in report.census],
        },
        targets["longtime.json"],
    )


def _run_phasemap(cfg: RunConfig, targets: dict[str, Path]) -> None:
    params = cfg.params
    xi = params.xi
    g_range = tuple(v * xi for v in cfg.g_range[:2]) + (cfg.g_range[2],)
    delta_range = tuple(v * xi for v in cfg.delta_range[:2]) + (cfg.delta_range[2],)
    points = sweep(
        params.d,
        g_range,
        delta_range,
        oracle=cfg.oracle,
        xi=xi,
        omega_c=params.omega_c,
        n_sites=params.n_sites if cfg.oracle else max(params.d + 2, 4),
    )
    upper, lower = boundary_curves(params.d, delta_range, xi=xi)
    write_phasemap_csv(points, targets["phasemap.csv"])
    write_boundary_csv(upper, targets["boundary_u.csv"])
    write_boundary_csv(lower, targets["boundary_l.csv"])


_RUNNERS = {
    "spectrum": _run_spectrum,
    "scatter": _run_scatter,
    "dynamics": _run_dynamics,
    "phase-map": _run_phasemap,
}


def run(cfg: RunConfig) -> None:
    targets = _prepare_out(cfg)
    _RUNNERS[cfg.task](cfg, targets)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        run(resolve_config(args))
    except CraqedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def entry() -> None:  # console-script shim
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
