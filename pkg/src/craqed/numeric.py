"""Finite-chain Hamiltonian and its dense diagonalization.

This is the independent oracle: a truncated chain of n_sites resonators plus
the emitter, diagonalized exactly.  Every analytic result in this package is
validated against it.  Finite-chain momenta follow k_n = n pi / (n_sites + 1)
with mode normalization sqrt(2 / (n_sites + 1)), which is exactly orthonormal
for the open chain.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import NumericalError
from .params import SystemParams, validate

#: default tolerance absorbing band-edge leakage of the finite chain
OUT_OF_BAND_MARGIN = 1e-6

_BIC_ENERGY_TOL = 1e-6
_BIC_TAIL_TOL = 1e-8


@dataclass(frozen=True)
class HamiltonianMatrix:
    """Single-excitation Hamiltonian; sites occupy rows 0..n_sites-1 in
    order, the emitter occupies the last row."""

    dimension: int
    entries: np.ndarray


@dataclass(frozen=True)
class EigenSolution:
    """Eigendecomposition with ascending energies; ``emitter_weights`` are
    the squared emitter components of the (column) eigenvectors."""

    energies: np.ndarray
    emitter_weights: np.ndarray
    states: np.ndarray


def build_hamiltonian(params: SystemParams) -> HamiltonianMatrix:
    """Assemble the real symmetric matrix of the truncated chain.

    The hard wall is realized by simply having no site 0; the far end is a
    hard wall as well.
    """
    validate(params)
    n = params.n_sites
    h = np.zeros((n + 1, n + 1))
    idx = np.arange(n)
    h[idx, idx] = params.omega_c
    h[idx[:-1], idx[:-1] + 1] = -params.xi
    h[idx[:-1] + 1, idx[:-1]] = -params.xi
    h[n, n] = params.omega_emitter
    h[params.d - 1, n] = h[n, params.d - 1] = params.g
    return HamiltonianMatrix(dimension=n + 1, entries=h)


def diagonalize(ham: HamiltonianMatrix) -> EigenSolution:
    """Full eigendecomposition, eigenvalues ascending.

    Eigenvector signs are fixed by making the largest-magnitude component
    positive, so repeated runs are reproducible.
    """
    try:
        energies, states = scipy.linalg.eigh(ham.entries)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - symmetric input
        raise NumericalError(str(exc)) from exc
    lead = np.argmax(np.abs(states), axis=0)
    signs = np.sign(states[lead, np.arange(states.shape[1])])
    signs[signs == 0] = 1.0
    states = states * signs
    return EigenSolution(
        energies=energies,
        emitter_weights=states[-1] ** 2,
        states=states,
    )


def count_out_of_band(
    sol: EigenSolution, params: SystemParams, margin: float | None = None
) -> int:
    """Number of eigenvalues strictly outside the band by more than
    ``margin`` (defaults to 1e-6 xi)."""
    if margin is None:
        margin = OUT_OF_BAND_MARGIN * params.xi
    if margin < 0:
        raise ValueError("margin must be non-negative")
    gap = np.abs(sol.energies - params.omega_c) - 2.0 * params.xi
    return int(np.count_nonzero(gap > margin))


def locate_bic_numeric(sol: EigenSolution, params: SystemParams) -> int | None:
    """Index of the in-band eigenvector degenerate with the emitter and
    carrying no weight beyond site d, or None.

    The state must hold photon weight between the mirror and site d; this
    excludes the bare emitter level of a decoupled chain.
    """
    n, d = params.n_sites, params.d
    near = np.nonzero(np.abs(sol.energies - params.omega_emitter) < _BIC_ENERGY_TOL)[0]
    for idx in near:
        if abs(sol.energies[idx] - params.omega_c) >= 2.0 * params.xi:
            continue
        tail = float(np.sum(sol.states[d:n, idx] ** 2))
        interior = float(np.sum(sol.states[:d, idx] ** 2))
        if tail < _BIC_TAIL_TOL and interior > _BIC_TAIL_TOL:
            return int(idx)
    return None
