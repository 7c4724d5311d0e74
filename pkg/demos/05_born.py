"""The intensity decomposes exactly into pairwise contributions.

Interference involves pairs of paths and nothing deeper: the full N-source
intensity equals the sum over all two-source sub-experiments minus the
overcounted single-source background. The residual of that identity is
zero to machine precision for any state and any phases, which is the
single-particle statement of the Born rule.
"""

import numpy as np

from interfere import born_residual, intensity

rng = np.random.default_rng(42)

print("random five-source states, random detection phases:")
for trial in range(5):
    a = rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5))
    rho = a @ a.conj().T
    rho /= np.trace(rho).real
    phi = rng.uniform(0, 2 * np.pi, size=5)
    print(
        f"  trial {trial}: intensity {intensity(rho, phi):.6f}, "
        f"residual {born_residual(rho, phi):+.3e}"
    )

print()
print("the residual stays at rounding error no matter how the state or")
print("the phases are chosen; genuine three-path terms never appear.")
