"""Upper-hemisphere layouts: how much diffuseness survives?

Without the lower half, a vertical intensity component -1/2 remains and
caps the diffuseness at 50% on the ground plane.  Climbing the axis
recovers it: psi exceeds 75% at about half the height.  Writes the
horizontal map and prints the axial profile.
"""

from pathlib import Path

import numpy as np

from diffusefield import field, layouts

OUT = Path(__file__).parent / "out" / "06_hemisphere"
OUT.mkdir(parents=True, exist_ok=True)

spec = layouts.LayoutSpec(
    "hemisphere", (1, 1, 1), 3, layouts.SamplingSpec("fibonacci", count=5000)
)
hemi = layouts.sample_layout(spec)

origin = field.evaluate_point(hemi, np.zeros(3))
print(f"origin: w = {origin.w:.4f}, Iz = {origin.intensity[2]:.4f}, psi = {origin.psi:.4f}")

print("\naxial profile")
for z in np.arange(0.0, 0.85, 0.1):
    m = field.evaluate_point(hemi, np.array([0.0, 0.0, z]))
    print(f"  z = {z:.1f}: psi = {m.psi:.4f}")

grid = field.GridSpec(np.zeros(3), np.eye(3)[0], np.eye(3)[1], 0.98, 201)
result = field.evaluate_grid(hemi, grid, layout=spec)
field.write_grid_csv(result, OUT / "hemisphere_map.csv")
field.write_grid_sidecar(OUT / "hemisphere_map.json", result, layout=spec, gain_law="unity")
print(f"\nhorizontal map written to {OUT}")
