"""Model parameters, validation, and the lattice dispersion relation.

Conventions used throughout the package: hbar = 1, all frequencies carry the
same units as the hop strength ``xi``, the hard mirror sits at the fictitious
site j = 0 (its amplitude is forced to zero) and physical sites are numbered
j = 1..n_sites.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import asdict, dataclass

from .errors import DomainError, InvalidParams

_CONFIG_KEYS = ("omega_c", "xi", "delta_c", "g", "d", "n_sites")


@dataclass(frozen=True, kw_only=True)
class SystemParams:
    """Full physical configuration of the emitter-array system.

    delta_c is the detuning of the emitter from the bare resonators; the
    emitter transition frequency is ``omega_c + delta_c``. The emitter couples
    with strength ``g`` to site ``d`` of a chain truncated at ``n_sites``.
    """

    delta_c: float
    g: float
    d: int
    n_sites: int
    omega_c: float = 0.0
    xi: float = 1.0

    def __post_init__(self):
        validate(self)

    @property
    def omega_emitter(self) -> float:
        """Emitter transition frequency omega_c + delta_c."""
        return self.omega_c + self.delta_c

    @property
    def band_bottom(self) -> float:
        return self.omega_c - 2.0 * self.xi

    @property
    def band_top(self) -> float:
        return self.omega_c + 2.0 * self.xi

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "SystemParams":
        """Build params from a plain mapping with exactly the documented keys.

        Unknown keys are rejected; ``omega_c`` and ``xi`` may be omitted and
        take their defaults.
        """
        unknown = set(data) - set(_CONFIG_KEYS)
        if unknown:
            raise InvalidParams(sorted(unknown)[0], "unknown key")
        for key in ("delta_c", "g", "d", "n_sites"):
            if key not in data:
                raise InvalidParams(key, "missing key")
        kwargs = {}
        for key in ("omega_c", "xi", "delta_c", "g"):
            if key in data:
                kwargs[key] = float(data[key])
        for key in ("d", "n_sites"):
            value = data[key]
            if float(value) != int(value):
                raise InvalidParams(key, "must be an integer")
            kwargs[key] = int(value)
        return cls(**kwargs)


def validate(params: SystemParams) -> SystemParams:
    """Check every parameter constraint; return the params unchanged.

    Raises InvalidParams naming the first violated constraint.
    """
    if not math.isfinite(params.omega_c):
        raise InvalidParams("omega_c", "must be finite")
    if not math.isfinite(params.xi) or params.xi <= 0:
        raise InvalidParams("xi", "must be positive")
    if not math.isfinite(params.delta_c):
        raise InvalidParams("delta_c", "must be finite")
    if not math.isfinite(params.g) or params.g < 0:
        raise InvalidParams("g", "must be non-negative")
    if not isinstance(params.d, numbers.Integral):
        raise InvalidParams("d", "must be an integer")
    if not isinstance(params.n_sites, numbers.Integral):
        raise InvalidParams("n_sites", "must be an integer")
    if params.d < 1:
        raise InvalidParams("d", "must be at least 1")
    if params.d > params.n_sites - 2:
        raise InvalidParams("d", "must satisfy d <= n_sites - 2")
    return params


@dataclass(frozen=True)
class DispersionPoint:
    """One point of the propagating band: wavenumber and its energy."""

    k: float
    omega_k: float


def dispersion(params: SystemParams, k: float) -> DispersionPoint:
    """Band energy omega_c - 2 xi cos(k) of the standing-wave mode k.

    k must lie strictly inside (0, pi); the band spans
    [omega_c - 2 xi, omega_c + 2 xi] and is strictly increasing in k.
    """
    if not 0.0 < k < math.pi:
        raise DomainError(f"wavenumber k={k} outside (0, pi)")
    return DispersionPoint(k=k, omega_k=params.omega_c - 2.0 * params.xi * math.cos(k))
