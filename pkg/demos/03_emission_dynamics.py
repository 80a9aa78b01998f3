"""Emission of an initially excited emitter: four long-time behaviours.

The number of bound states dictates what survives at long times: nothing
(complete decay), a constant (one bound state), a single-frequency
oscillation (two), or a multi-frequency quantum beat (three).

Run:  python demos/03_emission_dynamics.py
"""

import numpy as np

from craqed import SystemParams, classify_long_time, evolve_eigenbasis

REGIMES = [
    ("complete decay", dict(delta_c=0.0, d=3, g=0.5)),
    ("plateau", dict(delta_c=-1.0, d=4, g=0.7)),
    ("residual oscillation", dict(delta_c=-1.0, d=4, g=1.2)),
    ("quantum beat", dict(delta_c=-1.0, d=3, g=1.2)),
]

for name, kw in REGIMES:
    params = SystemParams(n_sites=400, **kw)
    traj = evolve_eigenbasis(params)
    report = classify_long_time(params, traj)
    print(f"--- {name}  (delta_c={kw['delta_c']}, d={kw['d']}, g={kw['g']})")
    print(f"    category: {report.category}")
    print(f"    bound states: {len(report.census)}  "
          f"{[f'E={e:+.4f}, w={w:.3f}' for e, w in report.census]}")
    print(f"    window mean P_e = {report.mean_population:.5f}   "
          f"bound-state prediction = {report.predicted_mean:.5f}")
    if report.frequencies:
        pairs = ", ".join(f"{f:.4f}" for f in report.frequencies)
        gaps = ", ".join(f"{f:.4f}" for f in report.predicted_frequencies)
        print(f"    beat lines at {pairs}   (level gaps: {gaps})")

    # a coarse strip chart of the decay of the population
    sample = traj.p_e[:: traj.p_e.size // 60][:60]
    bars = "".join("#" if v > 0.5 else "+" if v > 0.1 else "." for v in sample)
    print(f"    P_e(t): {bars}\n")
