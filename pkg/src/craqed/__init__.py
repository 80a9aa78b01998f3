"""Single-excitation physics of a two-level emitter side-coupled to a
semi-infinite coupled-resonator array.

The library computes the propagating band and its scattering amplitudes, the
bound states detached from the band and the bound state confined inside it,
existence thresholds over the coupling/detuning plane, and the emission
dynamics of an initially excited emitter, whose long-time population encodes
the bound-state census (decay, plateau, residual oscillation, quantum beat).
Analytic closed forms and exact diagonalization of the truncated chain are
kept as independent routes and validated against each other in the tests.
"""

from .analytic import (
    BRANCH_LOWER,
    BRANCH_UPPER,
    BoundStateInContinuum,
    BoundStateOutside,
    ScatteringAmplitudes,
    Thresholds,
    bic_amplitudes,
    bic_find,
    boc_residual,
    boc_solve,
    scattering,
    thresholds,
    wavefunction_profile,
)
from .dynamics import (
    AmplitudeTrajectory,
    LongTimeReport,
    analytic_longtime_pe,
    bound_census,
    classify_long_time,
    evolve_eigenbasis,
    evolve_timestep,
    revival_time,
    write_trajectory_csv,
)
from .errors import (
    ConvergenceError,
    CraqedError,
    DomainError,
    InvalidParams,
    NumericalError,
    RevivalWindowExceeded,
    SingularPoint,
    StepTooLarge,
    WindowTooShort,
)
from .numeric import (
    EigenSolution,
    HamiltonianMatrix,
    build_hamiltonian,
    count_out_of_band,
    diagonalize,
    locate_bic_numeric,
)
from .params import DispersionPoint, SystemParams, dispersion, validate
from .phasemap import (
    PhasePoint,
    analytic_boc_count,
    boundary_curves,
    sweep,
    write_boundary_csv,
    write_phasemap_csv,
)

__version__ = "0.1.0"

__all__ = [
    "AmplitudeTrajectory",
    "BRANCH_LOWER",
    "BRANCH_UPPER",
    "BoundStateInContinuum",
    "BoundStateOutside",
    "ConvergenceError",
    "CraqedError",
    "DispersionPoint",
    "DomainError",
    "EigenSolution",
    "HamiltonianMatrix",
    "InvalidParams",
    "LongTimeReport",
    "NumericalError",
    "PhasePoint",
    "RevivalWindowExceeded",
    "ScatteringAmplitudes",
    "SingularPoint",
    "StepTooLarge",
    "SystemParams",
    "Thresholds",
    "WindowTooShort",
    "analytic_boc_count",
    "analytic_longtime_pe",
    "bic_amplitudes",
    "bic_find",
    "boc_residual",
    "boc_solve",
    "bound_census",
    "boundary_curves",
    "build_hamiltonian",
    "classify_long_time",
    "count_out_of_band",
    "diagonalize",
    "dispersion",
    "evolve_eigenbasis",
    "evolve_timestep",
    "locate_bic_numeric",
    "revival_time",
    "scattering",
    "sweep",
    "thresholds",
    "validate",
    "wavefunction_profile",
    "write_boundary_csv",
    "write_phasemap_csv",
    "write_trajectory_csv",
]
