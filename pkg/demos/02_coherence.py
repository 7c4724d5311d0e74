"""First-order coherence as a direct readout of indistinguishability.

For any state built from an emission model, |g1(i, j)| equals p_id for
every live pair. Higher orders vanish identically in the single-photon
sector: there is only one photon, so joint detections cannot happen.
"""

import numpy as np

from interfere import (
    Amplitudes,
    EmissionModel,
    coherence_matrix,
    g1,
    g2,
    g3,
    mix,
)

rng = np.random.default_rng(7)
amps = rng.normal(size=4) + 1j * rng.normal(size=4)
model = EmissionModel(Amplitudes.normalized(amps), p_id=0.62)
rho = mix(model)

print("pairwise |g1| for a four-source state with p_id = 0.62:")
for i in range(4):
    for j in range(i + 1, 4):
        print(f"  |g1({i}, {j})| = {abs(g1(rho, i, j)):.12f}")

matrix = coherence_matrix(rho)
print()
print("coherence matrix magnitudes:")
print(np.array_str(np.abs(matrix.entries), precision=4))

print()
print("second and third order coherences (exactly zero, single photon):")
print(f"  g2(0, 1) = {g2(rho, 0, 1):.3e}")
print(f"  g3(0, 1, 2) = {g3(rho, 0, 1, 2):.3e}")
