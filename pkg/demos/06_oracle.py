"""Cross-checking the closed forms against a truncated Fock space.

Every fast formula in the library has a slow twin: build the annihilation
and creation matrices on the (N + 1)-dimensional zero-or-one-photon space,
embed the source-sector density matrix, and take explicit operator traces.
The two routes share no code, so agreement is evidence, not tautology.
"""

import numpy as np

from interfere import (
    FockSpace,
    annihilation,
    big_g1,
    creation,
    embed,
    field_operator,
    intensity,
    oracle_intensity,
    trace_correlation,
)

rng = np.random.default_rng(3)
n = 4
a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
rho = a @ a.conj().T
rho /= np.trace(rho).real

space = FockSpace(n)
rho_full = embed(rho)
print(f"source sector is {n}x{n}, Fock embedding is "
      f"{space.dimension}x{space.dimension}")

print()
print("first-order correlations, closed form vs operator trace:")
for i, j in [(0, 1), (2, 3), (1, 1)]:
    fast = big_g1(rho, i, j)
    slow = trace_correlation(rho_full, [creation(space, i), annihilation(space, j)])
    print(f"  ({i}, {j}): {fast:.10f} vs {slow:.10f}, diff {abs(fast - slow):.1e}")

phi = rng.uniform(0, 2 * np.pi, size=n)
fast_i = intensity(rho, phi)
slow_i = oracle_intensity(rho, phi)
print()
print(f"intensity at random phases: {fast_i:.10f} vs {slow_i:.10f}, "
      f"diff {abs(fast_i - slow_i):.1e}")

e_plus = field_operator(space, phi)
print()
print("the summed field operator annihilates the vacuum and maps each")
print("one-photon basis state to a phase times the vacuum:")
print(np.array_str(e_plus[0], precision=3))
