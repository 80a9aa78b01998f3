"""Shared parameter sets for the test suite.

The four emission panels (detuning, emitter site) and representative
couplings per regime recur across module and acceptance tests.
"""

import pytest

from craqed import SystemParams

# (delta_c, d) of the four dynamics panels
PANELS = {
    "a": (0.0, 3),
    "b": (-1.0, 4),
    "c": (0.0, 4),
    "d": (-1.0, 3),
}

# one representative coupling per long-time regime
REGIMES = {
    "complete_decay": (0.0, 3, 0.5),
    "plateau": (-1.0, 4, 0.7),
    "residual_oscillation": (-1.0, 4, 1.2),
    "quantum_beat": (-1.0, 3, 1.2),
}


def make_params(delta_c, d, g, n_sites=102, **kw):
    return SystemParams(delta_c=delta_c, g=g, d=d, n_sites=n_sites, **kw)


@pytest.fixture(scope="session")
def panel_params():
    return {name: make_params(dc, d, g=0.5) for name, (dc, d) in PANELS.items()}
