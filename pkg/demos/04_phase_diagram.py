"""Phases of the bound-state census over the coupling/detuning plane.

An ASCII rendition of the phase diagram at fixed emitter site: digits count
the bound states at each grid point, and the closed-form threshold curves
explain every step between neighbouring digits.

Run:  python demos/04_phase_diagram.py
"""

from craqed import boundary_curves, sweep

D = 3
G_RANGE = (0.0, 2.0, 21)
DELTA_RANGE = (-3.0, 3.0, 25)

points = sweep(D, G_RANGE, DELTA_RANGE)
upper, lower = boundary_curves(D, DELTA_RANGE)

rows: dict[float, dict[float, int]] = {}
for p in points:
    rows.setdefault(p.g, {})[p.delta_c] = p.n_total

print(f"bound states at emitter site d = {D} (columns: detuning, rows: coupling)\n")
deltas = sorted(rows[next(iter(rows))])
for g in sorted(rows, reverse=True):
    line = "".join(str(rows[g][dc]) for dc in deltas)
    print(f"  g = {g:4.2f}  {line}")
label = "".join("+" if abs(dc) < 1e-12 else " " for dc in deltas)
print(f"            {label}   (+ marks delta_c = 0)")

print("\nthreshold couplings along the detuning axis:")
for (dc, gu), (_, gl) in list(zip(upper, lower))[::4]:
    print(f"  delta_c = {dc:+5.2f}   upper {gu:5.3f}   lower {gl:5.3f}")

print("\nzeros mean the branch is unconditional there: once the emitter")
print("frequency leaves the band, its bound state exists for any coupling.")
