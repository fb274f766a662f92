"""Sweet areas of discrete layouts.

With L = 2N+2 equi-angle line sources (a circular t = 2N+1 design) the
90% diffuseness region ends near the radius (L-2)/L; octahedron and
icosahedron point sources follow the same rule at 1/2 and 2/3.  Prints
the worst/best contour crossing radius against the prediction.
"""

import numpy as np

from diffusefield import analytic, field, layouts


def crossing_radius(sources, direction, lo=0.05, hi=0.999, level=0.9):
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        m = field.evaluate_point(sources, mid * direction)
        if m.psi >= level:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


print(f"{'layout':>16} {'predicted':>10} {'contour min':>12} {'contour max':>12}")
for L in (4, 6, 8, 12):
    spec = layouts.LayoutSpec("circle", (1, 1), 2, layouts.SamplingSpec("equi_angle", count=L))
    s = layouts.sample_layout(spec)
    pred = analytic.sweet_radius(L // 2 - 1).linear_form
    angles = 2 * np.pi * (np.arange(32) + 0.37) / 32
    rads = [crossing_radius(s, np.array([np.cos(a), np.sin(a)])) for a in angles]
    print(f"{'circle L=' + str(L):>16} {pred:>10.3f} {min(rads):>12.3f} {max(rads):>12.3f}")

for t, pred in ((3, 0.5), (5, 2.0 / 3.0)):
    spec = layouts.LayoutSpec(
        "sphere", (1, 1, 1), 3, layouts.SamplingSpec("builtin_tdesign", t=t)
    )
    s = layouts.sample_layout(spec)
    dirs = layouts.fibonacci_sphere(64)
    rads = [crossing_radius(s, d) for d in dirs]
    print(f"{'t-design t=' + str(t):>16} {pred:>10.3f} {min(rads):>12.3f} {max(rads):>12.3f}")

print("\nthe 3D contours scallop strongly toward the few sources;")
print("the prediction tracks the outer envelope of the diffuse region")
