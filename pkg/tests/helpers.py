"""Shared random-state generators for the test suite.

Everything takes an explicit ``numpy.random.Generator`` so each test
controls its own seed and reruns are exactly reproducible.
"""

import numpy as np

from interfere import Amplitudes, DensityMatrix, EmissionModel, mix


def random_density(rng: np.random.Generator, n: int) -> DensityMatrix:
    """Arbitrary valid state: PSD by construction, then trace-normalized."""
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    rho = a @ a.conj().T
    return DensityMatrix(rho / np.trace(rho).real)


def random_amplitudes(rng: np.random.Generator, n: int) -> Amplitudes:
    """Random amplitudes with every component safely away from zero.

    Moduli are drawn from [0.3, 1.0] before normalization, so after
    rescaling no component can fall below 0.3 / sqrt(n); at n = 8 that is
    still > 0.1.
    """
    moduli = rng.uniform(0.3, 1.0, size=n)
    phases = rng.uniform(0.0, 2.0 * np.pi, size=n)
    return Amplitudes.normalized(moduli * np.exp(1j * phases))


def random_model(rng: np.random.Generator, n: int, p_id: float | None = None) -> EmissionModel:
    if p_id is None:
        p_id = float(rng.uniform(0.0, 1.0))
    return EmissionModel(random_amplitudes(rng, n), p_id)


def random_family_state(rng: np.random.Generator, n: int, p_id: float | None = None) -> DensityMatrix:
    return mix(random_model(rng, n, p_id))


def equal_model(n: int, p_id: float) -> EmissionModel:
    return EmissionModel(Amplitudes.normalized(np.ones(n)), p_id)
