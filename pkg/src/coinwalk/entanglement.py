"""Schmidt analysis of pure walker states.

The x-y split of a pure spatial state ``psi[x, y]`` is a standard bipartite
problem: the squared singular values of the coefficient matrix equal the
eigenvalues of either reduced density matrix, and the entanglement is their
Shannon entropy in bits.  Singular values are the primary route (forming
``psi psi^dagger`` squares the condition number); the eigenvalue route is
kept for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .state import Site

PureWalkerState = Mapping[Site, complex]

#: eigenvalues in [-CLAMP_TOL, 0) are treated as roundoff and clamped to 0
CLAMP_TOL = 1e-12

#: largest tolerated deviation of a probability spectrum from unit sum
SPECTRUM_SUM_TOL = 1e-6


@dataclass(frozen=True)
class CoefficientMatrix:
    """Dense amplitudes of a pure walker state over its occupied bounding box.

    ``entries[i, j]`` is the amplitude at ``(x_values[i], y_values[j])``;
    coordinates are sorted ascending and absent sites hold zero.
    """

    x_values: tuple[int, ...]
    y_values: tuple[int, ...]
    entries: np.ndarray


def coefficient_matrix(state: PureWalkerState) -> CoefficientMatrix:
    """Arrange a sparse ``(x, y) -> amplitude`` map as a dense matrix."""
    if not state:
        raise ValueError("cannot build a coefficient matrix from an empty state")
    x_values = tuple(sorted({x for x, _ in state}))
    y_values = tuple(sorted({y for _, y in state}))
    x_index = {x: i for i, x in enumerate(x_values)}
    y_index = {y: j for j, y in enumerate(y_values)}
    entries = np.zeros((len(x_values), len(y_values)), dtype=complex)
    for (x, y), amp in state.items():
        entries[x_index[x], y_index[y]] = amp
    return CoefficientMatrix(x_values, y_values, entries)


def reduced_density_x(m: CoefficientMatrix) -> np.ndarray:
    """Density matrix of the x coordinate, the y coordinate traced out."""
    return m.entries @ m.entries.conj().T


def reduced_density_y(m: CoefficientMatrix) -> np.ndarray:
    """Density matrix of the y coordinate, the x coordinate traced out."""
    return m.entries.T @ m.entries.conj()


def _clamp_spectrum(values: np.ndarray) -> np.ndarray:
    if np.any(values < -CLAMP_TOL):
        raise ValueError(f"spectrum has a negative weight below -{CLAMP_TOL:g}")
    return np.clip(values, 0.0, 1.0)


def schmidt_spectrum(m: CoefficientMatrix) -> np.ndarray:
    """Squared singular values of the coefficient matrix, descending."""
    singular = np.linalg.svd(m.entries, compute_uv=False)
    return _clamp_spectrum(singular**2)


def von_neumann_entropy(spectrum: np.ndarray) -> float:
    """Entropy ``-sum(p log2 p)`` in bits, with ``0 log 0 = 0``.

    Raises ``ValueError`` unless the spectrum sums to 1 within tolerance.
    """
    p = _clamp_spectrum(np.asarray(spectrum, dtype=float))
    total = float(p.sum())
    if abs(total - 1.0) > SPECTRUM_SUM_TOL:
        raise ValueError(f"spectrum sums to {total}, not 1")
    nonzero = p[p > 0.0]
    return float(-(nonzero * np.log2(nonzero)).sum())


def spatial_entanglement(state: PureWalkerState) -> float:
    """Entanglement between the x and y coordinates of a pure state, in bits."""
    return von_neumann_entropy(schmidt_spectrum(coefficient_matrix(state)))
