"""Two-point coherence of the detected field, and the higher orders that vanish.

``g1(rho, i, j)`` is the normalized correlation between the fields radiated
by sources i and j; its modulus is what an interferometer can reveal about
the pair.  For any state in the one-parameter emission family the modulus
equals the coherent weight ``p_id`` for every pair at once, which is the
bridge between "how coherent" and "how little which-path information".

``g2`` and ``g3`` are the normally ordered four- and six-point functions.
With exactly one photon in play they are identically zero; they are
evaluated here through the explicit operator representation in
:mod:`interfere.oracle` so that the zero is derived, not declared.

Normalization note: ``g2``/``g3`` divide by the square root of the product
of the diagonal two-point functions.  That is not the textbook intensity
normalization, but the numerator vanishes identically, so the distinction
is unobservable; the square-root form is kept deliberately.
"""

from dataclasses import dataclass

import numpy as np

from .core import (
    PAIR_FLOOR,
    DensityMatrix,
    UndefinedPairError,
    _readonly,
    as_density,
    as_scale,
)
from .oracle import FockSpace, annihilation, creation, embed, trace_correlation


def _check_index(rho: DensityMatrix, *indices: int) -> None:
    n = int(rho.n)
    for idx in indices:
        if not 0 <= idx < n:
            raise IndexError(f"source index {idx} out of range for {n} sources")


def _population(rho: DensityMatrix, idx: int) -> float:
    pop = float(rho.entries[idx, idx].real)
    if pop <= PAIR_FLOOR:
        raise UndefinedPairError(
            f"source {idx} has population {pop!r}; normalized coherence is undefined"
        )
    return pop


def big_g1(rho, i: int, j: int, k=None) -> complex:
    """Unnormalized two-point correlation ``Tr(rho E_minus(i) E_plus(j))``.

    Closed form: ``|k|**2 * rho[j, i]``.  The field's complex scale enters
    only through its modulus.
    """
    rho = as_density(rho)
    _check_index(rho, i, j)
    return complex(as_scale(k).intensity_scale * rho.entries[j, i])


def g1(rho, i: int, j: int) -> complex:
    """Degree of coherence ``rho[j, i] / sqrt(rho[i, i] * rho[j, j])``.

    The field scale cancels in the normalization.  Raises
    :class:`UndefinedPairError` when either source never fires.
    """
    rho = as_density(rho)
    _check_index(rho, i, j)
    denom = np.sqrt(_population(rho, i) * _population(rho, j))
    return complex(rho.entries[j, i] / denom)


@dataclass(frozen=True, eq=False)
class CoherenceMatrix:
    """All pairwise degrees of coherence, with undefined entries flagged.

    ``entries[i, j]`` is ``g1(rho, i, j)`` where defined and NaN otherwise;
    ``defined`` is the companion boolean mask.  Undefined is distinct from
    zero: zero coherence is a physical statement, a dead source is not.
    """

    entries: np.ndarray
    defined: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", _readonly(self.entries, complex))
        object.__setattr__(self, "defined", _readonly(self.defined, bool))


def coherence_matrix(rho) -> CoherenceMatrix:
    """Evaluate ``g1`` for every ordered source pair at once."""
    rho = as_density(rho)
    pops = rho.populations
    alive = pops > PAIR_FLOOR
    defined = np.outer(alive, alive)
    entries = np.full(rho.entries.shape, complex(float("nan"), float("nan")))
    if alive.any():
        denom = np.sqrt(np.outer(pops[alive], pops[alive]))
        block = rho.entries[np.ix_(alive, alive)].T / denom
        entries[np.ix_(alive, alive)] = block
    return CoherenceMatrix(entries, defined)


def g2(rho, i: int, j: int) -> complex:
    """Normalized four-point function for the pair (i, j).

    The numerator ``Tr(rho a_i+ a_j+ a_j a_i)`` is evaluated by explicit
    operator products in the truncated space; two annihilations on a
    one-photon state give the zero matrix, so the result is exactly zero
    for every valid state.
    """
    rho = as_density(rho)
    _check_index(rho, i, j)
    denom = np.sqrt(_population(rho, i) * _population(rho, j))
    space = FockSpace(rho.n)
    numerator = trace_correlation(
        embed(rho),
        [creation(space, i), creation(space, j), annihilation(space, j), annihilation(space, i)],
    )
    return complex(numerator / denom)


def g3(rho, i: int, j: int, l: int) -> complex:
    """Normalized six-point function for the triple (i, j, l).  Exactly zero
    for a one-photon state, by the same operator algebra as :func:`g2`."""
    rho = as_density(rho)
    _check_index(rho, i, j, l)
    denom = np.sqrt(_population(rho, i) * _population(rho, j) * _population(rho, l))
    space = FockSpace(rho.n)
    numerator = trace_correlation(
        embed(rho),
        [
            creation(space, i),
            creation(space, j),
            creation(space, l),
            annihilation(space, l),
            annihilation(space, j),
            annihilation(space, i),
        ],
    )
    return complex(numerator / denom)
