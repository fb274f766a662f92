"""Closed-form sweep over the radial decay exponent.

The hypergeometric shell solutions show which decay keeps the level
flat (beta = 0 or (D-2)/2) and which kills the net intensity
(beta = (D-1)/2): line sources for a circle, point sources for a
sphere.  Writes the full (D, beta, x) table and prints the two extremes
at x = 0.6.
"""

from pathlib import Path

import numpy as np

from diffusefield import analytic

OUT = Path(__file__).parent / "out" / "02_sweep"
OUT.mkdir(parents=True, exist_ok=True)

betas = np.round(np.arange(-1.25, 1.2501, 0.05), 10)
xs = np.round(np.arange(-0.98, 0.9801, 0.02), 10)
analytic.write_sweep_csv(OUT / "analytic_sweep.csv", (2, 3), betas, xs)

print("x = 0.6 cross-section")
print(f"{'D':>2} {'beta':>6} {'w':>8} {'Ix':>9} {'psi':>7}")
for dim in (2, 3):
    for beta in (-0.5, 0.0, 0.5, 1.0):
        case = analytic.ShellCase(dim, beta, 0.6)
        print(
            f"{dim:>2} {beta:>6.2f} {analytic.shell_w(case):>8.4f} "
            f"{analytic.shell_intensity(case):>9.5f} {analytic.shell_psi(case):>7.4f}"
        )

print(f"\ntable written to {OUT / 'analytic_sweep.csv'}")
