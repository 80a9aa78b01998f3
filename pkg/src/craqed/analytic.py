"""Closed-form spectrum of the semi-infinite array with a side-coupled emitter.

Everything here refers to the infinite-length limit of the chain: reflection
and excitation amplitudes of the standing-wave scattering states, the
exponentially localized bound states detached above/below the band together
with their existence thresholds, and the in-band bound state that is strictly
confined between the mirror and the emitter site.

Bound-state energies are parameterized by the localization constant kappa,
``E = omega_c +/- 2 xi cosh(kappa)``, which turns the band-edge square root
into sinh(kappa) and removes any branch ambiguity.  Global signs of the
states follow the convention that the photon prefactor is positive; only
squared amplitudes are physical.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError, SingularPoint
from .params import SystemParams, validate

BRANCH_UPPER = "upper"
BRANCH_LOWER = "lower"

#: states with kappa below this are flagged shallow; finite chains cannot
#: resolve them against the band edge
SHALLOW_KAPPA = 1e-6

_KAPPA_LO = 1e-9
_KAPPA_HI_START = 10.0
_KAPPA_HI_CAP = 50.0
_BISECT_TOL = 1e-14
_BIC_MATCH_TOL = 1e-12
_SIN_KD_TOL = 1e-9
_NORM_DIAG_TOL = 1e-6


@dataclass(frozen=True)
class Thresholds:
    """Critical couplings beyond which the upper/lower detached bound state
    exists; 0 encodes a branch that exists for every g > 0."""

    g_upper: float
    g_lower: float


@dataclass(frozen=True)
class ScatteringAmplitudes:
    """Amplitudes of the standing-wave scattering state at wavenumber k.

    ``reflection`` is the unimodular reflection coefficient of the emitter,
    ``c_emitter`` the emitter excitation amplitude and ``a_interior`` the
    prefactor of the sin(kj) wave between the mirror and the emitter.
    """

    k: float
    energy: float
    reflection: complex
    c_emitter: complex
    a_interior: complex
    d: int

    def photon_profile(self, j):
        """Site amplitude(s) of the scattering state; j counts from 1."""
        j = np.asarray(j)
        interior = self.a_interior * np.sin(self.k * j)
        exterior = np.exp(-1j * self.k * (j - self.d)) + self.reflection * np.exp(
            1j * self.k * (j - self.d)
        )
        return np.where(j <= self.d, interior, exterior)


@dataclass(frozen=True)
class BoundStateOutside:
    """One bound state detached from the band, unit-normalized.

    ``kappa`` is the localization constant, ``c_emitter`` the emitter
    amplitude and ``a_norm`` the prefactor of the sinh(kappa j) photon
    profile.  ``shallow`` marks near-threshold states (kappa < 1e-6) that
    finite-size diagonalization cannot resolve.
    """

    branch: str
    kappa: float
    energy: float
    c_emitter: float
    a_norm: float
    shallow: bool
    d: int

    def photon_profile(self, j):
        """Site amplitude(s); sinh growth up to site d, exponential decay
        beyond, with an extra (-1)^j alternation on the upper branch."""
        j = np.asarray(j, dtype=float)
        kappa, d = self.kappa, self.d
        out = np.empty_like(j)
        inside = j <= d
        out[inside] = self.a_norm * np.sinh(kappa * j[inside])
        out[~inside] = (
            self.a_norm * math.sinh(kappa * d) * np.exp(-kappa * (j[~inside] - d))
        )
        if self.branch == BRANCH_UPPER:
            out *= np.where(np.asarray(np.mod(j, 2)) == 0, 1.0, -1.0)
        return out


@dataclass(frozen=True)
class BoundStateInContinuum:
    """The in-band bound state: a sin(Kj) wave vanishing at the emitter site,
    degenerate with the bare emitter and identically zero beyond site d."""

    mode_index: int
    wavenumber: float
    energy: float
    c_emitter: float
    a_photon: float
    d: int

    def photon_profile(self, j):
        j = np.asarray(j, dtype=float)
        return np.where(j <= self.d, self.a_photon * np.sin(self.wavenumber * j), 0.0)


def thresholds(params: SystemParams) -> Thresholds:
    """Existence thresholds of the two detached bound states.

    The upper (lower) state requires g > sqrt(xi (2 xi -+ delta_c) / d) while
    the emitter frequency lies below (above) the respective band edge; once
    the emitter frequency leaves the band on that side, the state exists for
    every g > 0 and the threshold is reported as 0.
    """
    validate(params)
    xi, dc, d = params.xi, params.delta_c, params.d
    g_upper = math.sqrt(xi * (2.0 * xi - dc) / d) if dc < 2.0 * xi else 0.0
    g_lower = math.sqrt(xi * (2.0 * xi + dc) / d) if dc > -2.0 * xi else 0.0
    return Thresholds(g_upper=g_upper, g_lower=g_lower)


def _branch_exists(params: SystemParams, branch: str, thr: Thresholds) -> bool:
    g_crit = thr.g_upper if branch == BRANCH_UPPER else thr.g_lower
    return params.g > g_crit if g_crit > 0.0 else params.g > 0.0


def _residual_kappa(params: SystemParams, branch: str, kappa: float) -> float:
    # Signed residual of the integrated band-edge equation, written in the
    # overflow-safe form (Omega - E) sinh(kappa) +- (g^2/2xi)(1 - e^{-2 kappa d})
    # with the upper branch taking the plus sign.
    xi, g, d = params.xi, params.g, params.d
    sign = 1.0 if branch == BRANCH_UPPER else -1.0
    energy = params.omega_c + sign * 2.0 * xi * math.cosh(kappa)
    band_term = (g * g / (2.0 * xi)) * (1.0 - math.exp(-2.0 * kappa * d))
    return (params.omega_emitter - energy) * math.sinh(kappa) + sign * band_term


def boc_residual(params: SystemParams, branch: str, energy: float) -> float:
    """Residual whose root in ``energy`` is the detached bound-state level.

    ``energy`` must lie strictly outside the closed band on the side selected
    by ``branch``.
    """
    validate(params)
    if branch not in (BRANCH_UPPER, BRANCH_LOWER):
        raise DomainError(f"unknown branch {branch!r}")
    x = (energy - params.omega_c) / (2.0 * params.xi)
    if abs(x) <= 1.0:
        raise DomainError(f"energy {energy} inside the closed band")
    if branch == BRANCH_UPPER and x < 0 or branch == BRANCH_LOWER and x > 0:
        raise DomainError(f"energy {energy} on the wrong side for branch {branch}")
    return _residual_kappa(params, branch, math.acosh(abs(x)))


def _solve_branch_kappa(params: SystemParams, branch: str) -> float:
    lo, hi = _KAPPA_LO, _KAPPA_HI_START
    r_lo = _residual_kappa(params, branch, lo)
    while _residual_kappa(params, branch, hi) * r_lo > 0.0:
        if hi >= _KAPPA_HI_CAP:
            raise ConvergenceError(
                f"no sign change for {branch} branch up to kappa={_KAPPA_HI_CAP}"
            )
        hi = min(2.0 * hi, _KAPPA_HI_CAP)
    while hi - lo > _BISECT_TOL:
        mid = 0.5 * (lo + hi)
        if _residual_kappa(params, branch, mid) * r_lo > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _assemble_boc(params: SystemParams, branch: str, kappa: float) -> BoundStateOutside:
    xi, g, d = params.xi, params.g, params.d
    sign = 1.0 if branch == BRANCH_UPPER else -1.0
    energy = params.omega_c + sign * 2.0 * xi * math.cosh(kappa)
    # amplitudes with the photon prefactor set to 1, then renormalized
    sinh_kd = math.sinh(kappa * d)
    branch_sign = (-1.0) ** d if branch == BRANCH_UPPER else 1.0
    c_raw = branch_sign * g * sinh_kd / (energy - params.omega_emitter)
    j = np.arange(1, d + 1)
    interior = float(np.sum(np.sinh(kappa * j) ** 2))
    tail = sinh_kd**2 / math.expm1(2.0 * kappa)
    norm = math.sqrt(c_raw * c_raw + interior + tail)
    # cross-check against the closed-form normalization constant
    closed = math.sqrt(
        math.cosh(kappa) * math.expm1(2.0 * kappa * d) / (4.0 * math.sinh(kappa))
        + c_raw * c_raw
        - d / 2.0
    )
    if abs(closed - norm) > _NORM_DIAG_TOL * norm:
        warnings.warn(
            f"closed-form norm {closed!r} deviates from summed norm {norm!r} "
            f"for the {branch} bound state at kappa={kappa!r}",
            stacklevel=3,
        )
    return BoundStateOutside(
        branch=branch,
        kappa=kappa,
        energy=energy,
        c_emitter=c_raw / norm,
        a_norm=1.0 / norm,
        shallow=kappa < SHALLOW_KAPPA,
        d=d,
    )


def boc_solve(params: SystemParams) -> list[BoundStateOutside]:
    """All bound states detached from the band, sorted by energy.

    Returns 0, 1 or 2 states depending on which existence conditions hold.
    """
    validate(params)
    thr = thresholds(params)
    states = []
    for branch in (BRANCH_LOWER, BRANCH_UPPER):
        if not _branch_exists(params, branch, thr):
            continue
        kappa = _solve_branch_kappa(params, branch)
        states.append(_assemble_boc(params, branch, kappa))
    states.sort(key=lambda s: s.energy)
    return states


def bic_amplitudes(params: SystemParams, wavenumber: float) -> tuple[float, float]:
    """Emitter and photon amplitudes of the confined in-band state at the
    given wavenumber, which must satisfy sin(wavenumber * d) = 0.

    Returns (c_emitter, a_photon) of the unit-normalized state.
    """
    xi, g, d = params.xi, params.g, params.d
    sin_kd = math.sin(wavenumber * d)
    if abs(sin_kd) > _SIN_KD_TOL:
        raise DomainError(
            f"sin(K d) = {sin_kd} exceeds tolerance; K is not a confined mode"
        )
    sin_k = math.sin(wavenumber)
    cos_kd = math.cos(wavenumber * d)
    c = math.sqrt(
        2.0 * xi**2 * sin_k**2 / (2.0 * xi**2 * sin_k**2 + d * g * g * cos_kd**2)
    )
    a = -g * cos_kd / math.sqrt(xi**2 * sin_k**2 + 0.5 * d * g * g * cos_kd**2)
    # closed forms are exactly normalized; renormalize anyway to guard
    # against transcription slips
    j = np.arange(1, d + 1)
    norm = math.sqrt(c * c + a * a * float(np.sum(np.sin(wavenumber * j) ** 2)))
    return c / norm, a / norm


def bic_find(params: SystemParams) -> BoundStateInContinuum | None:
    """Detect the in-band confined bound state, if the detuning admits one.

    The state exists when some mode K = m pi / d (1 <= m <= d-1) is
    degenerate with the emitter, cos(m pi / d) = -delta_c / (2 xi), matched
    here to 1e-12.  Detection, not approximation: callers wanting the state
    must supply a detuning satisfying the condition to that precision.  At
    g = 0 the emitter decouples and None is returned.
    """
    validate(params)
    if params.g <= 0.0:
        return None
    if abs(params.delta_c) >= 2.0 * params.xi:
        return None
    target = -params.delta_c / (2.0 * params.xi)
    for m in range(1, params.d):
        if abs(math.cos(m * math.pi / params.d) - target) <= _BIC_MATCH_TOL:
            wavenumber = m * math.pi / params.d
            c, a = bic_amplitudes(params, wavenumber)
            return BoundStateInContinuum(
                mode_index=m,
                wavenumber=wavenumber,
                energy=params.omega_emitter,
                c_emitter=c,
                a_photon=a,
                d=params.d,
            )
    return None


def scattering(params: SystemParams, k: float) -> ScatteringAmplitudes:
    """Reflection and excitation amplitudes of the scattering state at k.

    Raises SingularPoint when the common denominator vanishes, which happens
    exactly at the wavenumber of the confined in-band state.
    """
    validate(params)
    if not 0.0 < k < math.pi:
        raise DomainError(f"wavenumber k={k} outside (0, pi)")
    xi, g, d = params.xi, params.g, params.d
    energy = params.omega_c - 2.0 * xi * math.cos(k)
    detune = energy - params.omega_emitter
    sin_k, sin_kd = math.sin(k), math.sin(k * d)
    den = g * g * sin_kd + xi * detune * cmath.exp(-1j * k * d) * sin_k
    scale = g * g + xi * (abs(detune) + 2.0 * xi)
    if abs(den) <= 1e-12 * scale:
        raise SingularPoint(
            f"scattering denominator vanishes at k={k}; this is the confined "
            "in-band state, use bic_find"
        )
    num = g * g * sin_kd + xi * detune * cmath.exp(1j * k * d) * sin_k
    return ScatteringAmplitudes(
        k=k,
        energy=energy,
        reflection=-num / den,
        c_emitter=-2j * g * xi * sin_k * sin_kd / den,
        a_interior=-2j * xi * detune * sin_k / den,
        d=d,
    )


def wavefunction_profile(state, j_max: int) -> np.ndarray:
    """Site amplitudes of any analytic state evaluated at sites 1..j_max.

    The piecewise branch expressions agree at j = d, so the crossover
    convention there is immaterial.
    """
    if j_max < state.d:
        raise DomainError(f"j_max={j_max} must reach at least site d={state.d}")
    return state.photon_profile(np.arange(1, j_max + 1))
