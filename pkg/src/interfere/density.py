"""Decomposition of a single-photon state into coherent and incoherent parts.

A photon emitted by one of N sources with amplitudes ``alpha`` is described
by two extreme density matrices: the pure superposition (no which-path
record exists, full interference) and the diagonal mixture of the same
populations (the path is knowable in principle, no interference).  Any
state in the one-parameter family between them is their convex combination
with weight ``p_id`` on the pure part.

Going the other way, the weight can be read off from any single pair of
sources as ``|rho_ij| / sqrt(rho_ii * rho_jj)``.  For a family state all
C(N, 2) pairwise readings agree; :func:`estimate_pid` computes every one
of them and reports whether they do, rather than silently averaging a
matrix the family does not describe.
"""

from dataclasses import dataclass

import numpy as np

from .core import (
    PAIR_FLOOR,
    Amplitudes,
    DensityMatrix,
    DomainError,
    EmissionModel,
    as_density,
)


def rho_indistinguishable(amplitudes: Amplitudes) -> DensityMatrix:
    """Density matrix of the pure superposition: the outer product of the
    amplitude vector with itself.  Rank one, unit trace."""
    a = amplitudes.values
    return DensityMatrix(np.outer(a, a.conj()))


def rho_distinguishable(amplitudes: Amplitudes) -> DensityMatrix:
    """Density matrix of the fully which-path-marked photon: the diagonal
    mixture carrying the same emission probabilities and no coherence."""
    return DensityMatrix(np.diag(amplitudes.probabilities.astype(complex)))


def mix(model: EmissionModel) -> DensityMatrix:
    """Convex combination of the two extremes with weight ``model.p_id`` on
    the coherent part.

    Diagonal entries are the emission probabilities ``|alpha_i|**2``;
    off-diagonals are ``p_id * alpha_i * conj(alpha_j)``.
    """
    a = model.amplitudes.values
    p = model.p_id
    coherent = np.outer(a, a.conj())
    incoherent = np.diag(np.abs(a) ** 2).astype(complex)
    return DensityMatrix(p * coherent + (1.0 - p) * incoherent)


@dataclass(frozen=True)
class PairEstimate:
    """One pairwise reading ``|rho_ij| / sqrt(rho_ii * rho_jj)``.

    ``p_ij`` is NaN when the pair is undefined (a source that never
    fires), never zero: zero would mean "incoherent", which is a
    different physical statement.
    """

    i: int
    j: int
    p_ij: float
    defined: bool


@dataclass(frozen=True)
class PidReport:
    """All C(N, 2) pairwise indistinguishability readings plus a verdict.

    ``consistent`` is true when every defined reading agrees within the
    consistency tolerance; only then is ``consensus`` (their arithmetic
    mean) present.  ``degenerate`` flags the corner case where no pair has
    two firing sources, e.g. a basis-state projector.
    """

    pairs: tuple[PairEstimate, ...]
    consensus: float | None
    spread: float
    consistent: bool
    degenerate: bool


def estimate_pid(rho, consistency_tol: float = 1e-9) -> PidReport:
    """Read the coherent weight off every source pair of ``rho``.

    Pairs whose population product is at or below ``PAIR_FLOOR`` are
    reported with ``defined=False`` and excluded from the spread and the
    consensus; the ratio is never formed for them.
    """
    if not (np.isfinite(consistency_tol) and consistency_tol > 0):
        raise DomainError(f"consistency tolerance must be positive, got {consistency_tol!r}")
    rho = as_density(rho)
    entries = rho.entries
    pops = rho.populations

    pairs = []
    defined_values = []
    for i in range(int(rho.n)):
        for j in range(i + 1, int(rho.n)):
            product = pops[i] * pops[j]
            if product > PAIR_FLOOR:
                p = float(abs(entries[i, j]) / np.sqrt(product))
                pairs.append(PairEstimate(i, j, p, True))
                defined_values.append(p)
            else:
                pairs.append(PairEstimate(i, j, float("nan"), False))

    degenerate = not defined_values
    if degenerate:
        spread = float("nan")
        consistent = False
        consensus = None
    else:
        spread = float(max(defined_values) - min(defined_values))
        consistent = spread <= consistency_tol
        consensus = float(np.mean(defined_values)) if consistent else None

    return PidReport(tuple(pairs), consensus, spread, consistent, degenerate)
