"""Emission dynamics of the initially excited emitter.

Two independent propagators evolve the state |e0>: an eigenbasis sum over
the exact finite-chain spectrum and a classic 4th-order explicit integrator
of the site-basis amplitude equations.  The long-time behaviour of the
excited-state population is classified by the bound-state census: no bound
state means complete decay, one gives a plateau, two a residual oscillation
and three a quantum beat.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .analytic import bic_find, boc_solve
from .errors import DomainError, RevivalWindowExceeded, StepTooLarge, WindowTooShort
from .numeric import build_hamiltonian, diagonalize
from .params import SystemParams, validate

#: fraction of the far-wall echo time used as the default evolution horizon
REVIVAL_SAFETY = 0.8

#: accuracy bound of the explicit integrator
MAX_TIMESTEP = 0.05

_CATEGORY_BY_CENSUS = {
    0: "complete_decay",
    1: "plateau",
    2: "residual_oscillation",
    3: "quantum_beat",
}

# spectral lines weaker than these floors are window leakage, not beats
_AMP_FLOOR_ABS = 1e-2
_AMP_FLOOR_REL = 0.05
_PEAK_REL_MAGNITUDE = 0.05
_MIN_PERIODS = 8


@dataclass(frozen=True)
class AmplitudeTrajectory:
    """Sampled emitter amplitude u(t) and population p_e = |u|^2.

    ``sites`` optionally holds the photon amplitudes (n_sites x n_times) so
    the total single-excitation norm can be checked along the trajectory.
    """

    times: np.ndarray
    u: np.ndarray
    p_e: np.ndarray
    method: str
    sites: np.ndarray | None = None

    def norms(self) -> np.ndarray:
        """Total single-excitation norm at each sample; requires sites."""
        if self.sites is None:
            raise DomainError("trajectory was computed without site amplitudes")
        return self.p_e + np.sum(np.abs(self.sites) ** 2, axis=0)


@dataclass(frozen=True)
class LongTimeReport:
    """Classification of the long-time population behaviour.

    ``frequencies`` are the detected oscillation frequencies (angular, same
    units as energies); ``predicted_frequencies`` are all pairwise gaps of
    the bound-state census.
    """

    category: str
    mean_population: float
    predicted_mean: float
    frequencies: list[float]
    predicted_frequencies: list[float]
    window: tuple[float, float]
    resolution: float
    census: list[tuple[float, float]] = field(default_factory=list)


def revival_time(params: SystemParams) -> float:
    """Echo time of radiation reflected off the far wall, (n_sites - d)/xi
    at the maximal group velocity 2 xi."""
    return (params.n_sites - params.d) / params.xi


def _time_grid(params, t_max, dt, allow_revival, dt_default):
    if t_max is None:
        t_max = REVIVAL_SAFETY * revival_time(params)
    if dt is None:
        dt = dt_default / params.xi
    if t_max <= 0 or dt <= 0:
        raise DomainError("t_max and dt must be positive")
    if not allow_revival and t_max > revival_time(params):
        raise RevivalWindowExceeded(
            f"t_max={t_max} reaches the far-wall echo at {revival_time(params)}; "
            "pass allow_revival=True to override"
        )
    n_steps = int(round(t_max / dt))
    return np.arange(n_steps + 1) * dt, dt


def evolve_eigenbasis(
    params: SystemParams,
    t_max: float | None = None,
    dt: float | None = None,
    *,
    allow_revival: bool = False,
    include_sites: bool = False,
) -> AmplitudeTrajectory:
    """Exact unitary evolution via the eigendecomposition of the truncated
    chain: u(t) is the phase sum of the emitter weights."""
    validate(params)
    times, dt = _time_grid(params, t_max, dt, allow_revival, dt_default=0.05)
    sol = diagonalize(build_hamiltonian(params))
    phases = np.exp(-1j * np.outer(sol.energies, times))
    u = sol.emitter_weights @ phases
    sites = None
    if include_sites:
        sites = (sol.states[:-1] * sol.states[-1]) @ phases
    return AmplitudeTrajectory(
        times=times, u=u, p_e=np.abs(u) ** 2, method="eigenbasis", sites=sites
    )


def evolve_timestep(
    params: SystemParams,
    t_max: float | None = None,
    dt: float | None = None,
    *,
    allow_revival: bool = False,
    include_sites: bool = False,
) -> AmplitudeTrajectory:
    """Classic 4th-order explicit integration of the site-basis amplitude
    equations; independent cross-check of ``evolve_eigenbasis``."""
    validate(params)
    times, dt = _time_grid(params, t_max, dt, allow_revival, dt_default=0.01)
    if dt > MAX_TIMESTEP / params.xi * (1.0 + 1e-12):
        raise StepTooLarge(f"dt={dt} exceeds {MAX_TIMESTEP}/xi")
    gen = -1j * build_hamiltonian(params).entries
    dim = gen.shape[0]
    y = np.zeros(dim, dtype=complex)
    y[-1] = 1.0
    u = np.empty(times.size, dtype=complex)
    sites = np.empty((dim - 1, times.size), dtype=complex) if include_sites else None
    for i in range(times.size):
        u[i] = y[-1]
        if sites is not None:
            sites[:, i] = y[:-1]
        if i == times.size - 1:
            break
        k1 = gen @ y
        k2 = gen @ (y + 0.5 * dt * k1)
        k3 = gen @ (y + 0.5 * dt * k2)
        k4 = gen @ (y + dt * k3)
        y = y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return AmplitudeTrajectory(
        times=times, u=u, p_e=np.abs(u) ** 2, method="timestep", sites=sites
    )


def bound_census(params: SystemParams) -> list[tuple[float, float]]:
    """(energy, emitter weight) of every bound state, sorted by energy."""
    validate(params)
    entries = [(s.energy, s.c_emitter**2) for s in boc_solve(params)]
    bic = bic_find(params)
    if bic is not None:
        entries.append((bic.energy, bic.c_emitter**2))
    entries.sort()
    return entries


def analytic_longtime_pe(census: list[tuple[float, float]], t):
    """Population predicted by the bound-state part of the amplitude alone,
    |sum_b w_b exp(-i E_b t)|^2; the asymptote of the full trajectory."""
    if not census:
        raise DomainError("census is empty; the population decays to zero")
    t = np.asarray(t, dtype=float)
    u = np.zeros(t.shape, dtype=complex)
    for energy, weight in census:
        u += weight * np.exp(-1j * energy * t)
    result = np.abs(u) ** 2
    return result if result.shape else float(result)


def _spectral_peaks(pe_window: np.ndarray, dt: float, mean_level: float) -> list[float]:
    signal = pe_window - pe_window.mean()
    m = signal.size
    win = np.hanning(m)
    mag = np.abs(np.fft.rfft(signal * win))
    amp = 2.0 * mag / win.sum()
    floor = max(_AMP_FLOOR_ABS, _AMP_FLOOR_REL * mean_level)
    peaks = []
    # bins 0-1 carry the window-scale trend; a beat line must be a local
    # maximum, at least 5% of the strongest line and above the leakage floor
    for i in range(2, mag.size - 1):
        if not (mag[i] >= mag[i - 1] and mag[i] > mag[i + 1]):
            continue
        if mag[i] < _PEAK_REL_MAGNITUDE * mag.max() or amp[i] < floor:
            continue
        curv = mag[i - 1] - 2.0 * mag[i] + mag[i + 1]
        shift = 0.5 * (mag[i - 1] - mag[i + 1]) / curv if curv != 0.0 else 0.0
        peaks.append(2.0 * math.pi * (i + shift) / (m * dt))
    return peaks


def classify_long_time(
    params: SystemParams,
    traj: AmplitudeTrajectory,
    window: tuple[float, float] | None = None,
) -> LongTimeReport:
    """Window-averaged population, detected beat frequencies and the
    category implied by the bound-state census.

    The window defaults to the last 40% of the trajectory, past the
    transient for the regimes of interest.  Frequencies are extracted from
    the mean-subtracted, Hann-windowed population spectrum and refined by
    quadratic interpolation; the resolution is 2 pi over the window length.
    """
    validate(params)
    t = traj.times
    if window is None:
        window = (0.6 * t[-1], t[-1])
    t_lo, t_hi = float(window[0]), float(window[1])
    eps = 1e-9 * (t[-1] - t[0] if t.size > 1 else 1.0)
    if t_lo < t[0] - eps or t_hi > t[-1] + eps or t_lo >= t_hi:
        raise DomainError(f"window ({t_lo}, {t_hi}) outside trajectory range")
    mask = (t >= t_lo - eps) & (t <= t_hi + eps)
    pe_win = traj.p_e[mask]
    dt = t[1] - t[0]

    census = bound_census(params)
    category = _CATEGORY_BY_CENSUS[min(len(census), 3)]
    mean_population = float(pe_win.mean())
    predicted_mean = float(sum(w * w for _, w in census))
    energies = [e for e, _ in census]
    predicted = sorted(
        abs(energies[i] - energies[j])
        for i in range(len(energies))
        for j in range(i + 1, len(energies))
    )
    resolution = 2.0 * math.pi / (t_hi - t_lo)

    frequencies: list[float] = []
    window_ok = True
    if predicted:
        slowest = min(predicted)
        if slowest <= 0 or (t_hi - t_lo) < _MIN_PERIODS * 2.0 * math.pi / slowest:
            window_ok = False
            warnings.warn(
                WindowTooShort(
                    f"window ({t_lo}, {t_hi}) holds fewer than {_MIN_PERIODS} "
                    f"periods of the slowest predicted beat {slowest}; "
                    "frequencies skipped"
                ),
                stacklevel=2,
            )
    if window_ok:
        frequencies = _spectral_peaks(pe_win, dt, mean_population)

    return LongTimeReport(
        category=category,
        mean_population=mean_population,
        predicted_mean=predicted_mean,
        frequencies=frequencies,
        predicted_frequencies=predicted,
        window=(float(t_lo), float(t_hi)),
        resolution=resolution,
        census=census,
    )


def write_trajectory_csv(traj: AmplitudeTrajectory, path) -> None:
    """Write the trajectory as CSV with full double precision."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("t,re_u,im_u,p_e\n")
        for t, u, pe in zip(traj.times, traj.u, traj.p_e):
            fh.write("%.17g,%.17g,%.17g,%.17g\n" % (t, u.real, u.imag, pe))
