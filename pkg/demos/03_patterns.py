"""Interference patterns on a far screen for two and three slits.

Detection phases come from path lengths: each screen point x sits at a
different distance from each source, and the phase is 2 pi / lambda times
that distance. Partial indistinguishability scales the fringes without
moving them.

Prints a coarse text rendering; saves PNGs when matplotlib is available.
"""

import numpy as np

from interfere import Amplitudes, DetectionGeometry, EmissionModel, mix, pattern

WAVELENGTH = 500e-9
SLITS = DetectionGeometry(
    source_positions=[-5e-6, 5e-6], screen_distance=1.0, wavelength=WAVELENGTH
)
THREE = DetectionGeometry(
    source_positions=[-10e-6, 0.0, 10e-6], screen_distance=1.0, wavelength=WAVELENGTH
)


def sketch(result, height=12):
    top = max(result.intensities)
    for row in range(height, 0, -1):
        cells = "".join(
            "#" if value / top * height >= row - 0.5 else " "
            for value in result.intensities
        )
        print(f"  {cells}")
    print(f"  {'-' * len(result.positions)}")


for p_id in (1.0, 0.5):
    rho = mix(EmissionModel(Amplitudes.normalized([1.0, 1.0]), p_id=p_id))
    result = pattern(rho, SLITS, x_min=-0.2, x_max=0.2, samples=72)
    print(f"two slits, p_id = {p_id}:")
    sketch(result)
    print(f"  max {max(result.intensities):.3f}, min {min(result.intensities):.3f}")
    print()

rho3 = mix(EmissionModel(Amplitudes.normalized([1.0, 1.0, 1.0]), p_id=1.0))
result3 = pattern(rho3, THREE, x_min=-0.12, x_max=0.12, samples=72)
print("three slits, fully coherent (note the secondary maxima):")
sketch(result3)

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print()
    print("matplotlib not installed, skipping PNG output")
else:
    fig, ax = plt.subplots(figsize=(7, 3))
    fine = pattern(rho3, THREE, x_min=-0.12, x_max=0.12, samples=2001)
    ax.plot(fine.positions, fine.intensities)
    ax.set_xlabel("screen position [m]")
    ax.set_ylabel("intensity")
    fig.tight_layout()
    fig.savefig("three_slit_pattern.png", dpi=120)
    print()
    print("wrote three_slit_pattern.png")
