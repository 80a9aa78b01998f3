"""Single-photon reflection off the emitter in front of the mirror.

Every incoming standing wave is reflected with unit probability (the
semi-infinite geometry has a single port), so all the physics sits in the
reflection phase and in how strongly the photon dresses the emitter.

Run:  python demos/02_single_photon_mirror.py
"""

import cmath

import numpy as np

from craqed import SystemParams, scattering

params = SystemParams(delta_c=0.7, g=0.5, d=3, n_sites=102)

print("k, reflection phase, |r|, emitter weight |C_k|^2")
for k in np.linspace(0.2, np.pi - 0.2, 9):
    amp = scattering(params, float(k))
    print(
        f"  {amp.k:5.3f}   {cmath.phase(amp.reflection):+7.4f}   "
        f"{abs(amp.reflection):.12f}   {abs(amp.c_emitter) ** 2:.5f}"
    )

# wavenumbers whose standing wave has a node at the emitter site never see
# the emitter at all: the array responds like a bare mirror with r = -1
node_k = np.pi / params.d
amp = scattering(params, node_k)
print(f"\nnode wavenumber k = pi/{params.d}:")
print(f"  r = {amp.reflection:+.12f}   C_k = {amp.c_emitter:.2e}")

# near the emitter resonance the phase winds fastest; scan the detuning
print("\nreflection phase across the emitter resonance (k such that E_k = Omega):")
k_res = float(np.arccos(-params.omega_emitter / 2.0))
for k in np.linspace(k_res - 0.2, k_res + 0.2, 7):
    amp = scattering(params, float(k))
    print(f"  k = {k:5.3f}   phase = {cmath.phase(amp.reflection):+8.4f}")
