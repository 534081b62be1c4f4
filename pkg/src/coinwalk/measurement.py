"""Coin measurement bases and the entanglement they induce on the walker.

Projecting the coin of a normalized walker-coin state onto an orthonormal
basis leaves, for each outcome, a pure spatial state with some amount of
x-y entanglement.  The figure of merit is the probability-weighted average
of that entanglement over all outcomes.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .entanglement import spatial_entanglement
from .state import NORM_TOL, Site, WalkerCoinState

#: outcomes below this probability carry no (normalizable) post state and
#: contribute zero to averages
P_FLOOR = 1e-14

_ORTHO_TOL = 1e-10


@dataclass(frozen=True)
class CoinBasis:
    """An ordered orthonormal set of coin vectors (the rows of ``vectors``)."""

    dim: int
    vectors: np.ndarray

    def __post_init__(self) -> None:
        if self.dim not in (2, 4):
            raise ValueError(f"basis dimension must be 2 or 4, got {self.dim}")
        vectors = np.asarray(self.vectors, dtype=complex)
        if vectors.shape != (self.dim, self.dim):
            raise ValueError(f"expected {self.dim} vectors of length {self.dim}")
        gram = vectors.conj() @ vectors.T
        if np.abs(gram - np.eye(self.dim)).max() > _ORTHO_TOL:
            raise ValueError("basis vectors are not orthonormal")
        vectors.setflags(write=False)
        object.__setattr__(self, "vectors", vectors)


@dataclass(frozen=True)
class MeasurementOutcome:
    """One projective outcome: its probability and normalized walker state.

    ``post_state`` is ``None`` when the probability is below ``P_FLOOR``.
    """

    index: int
    probability: float
    post_state: dict[Site, complex] | None


def qubit_basis(theta: float, phi: float) -> CoinBasis:
    """Measurement basis ``(cos t, e^{i p} sin t)`` and its orthogonal partner.

    ``theta`` must lie in [0, pi/2] and ``phi`` in [0, pi].
    """
    if not 0.0 <= theta <= math.pi / 2:
        raise ValueError(f"theta must lie in [0, pi/2], got {theta}")
    if not 0.0 <= phi <= math.pi:
        raise ValueError(f"phi must lie in [0, pi], got {phi}")
    phase = cmath.exp(1j * phi)
    return CoinBasis(
        2,
        np.array(
            [
                [math.cos(theta), phase * math.sin(theta)],
                [math.sin(theta), -phase * math.cos(theta)],
            ]
        ),
    )


def computational_basis(dim: int) -> CoinBasis:
    """The standard unit vectors, in order."""
    if dim not in (2, 4):
        raise ValueError(f"basis dimension must be 2 or 4, got {dim}")
    return CoinBasis(dim, np.eye(dim, dtype=complex))


_RSQRT2 = 1.0 / math.sqrt(2.0)


def grover_max_basis() -> CoinBasis:
    """Pairwise superpositions of coins 0/3 and 1/2; maximizes the average."""
    return CoinBasis(
        4,
        np.array(
            [
                [_RSQRT2, 0.0, 0.0, _RSQRT2],
                [_RSQRT2, 0.0, 0.0, -_RSQRT2],
                [0.0, _RSQRT2, _RSQRT2, 0.0],
                [0.0, _RSQRT2, -_RSQRT2, 0.0],
            ],
            dtype=complex,
        ),
    )


def grover_min_basis() -> CoinBasis:
    """Pairwise superpositions of coins 0/1 and 2/3; minimizes the average."""
    return CoinBasis(
        4,
        np.array(
            [
                [_RSQRT2, _RSQRT2, 0.0, 0.0],
                [_RSQRT2, -_RSQRT2, 0.0, 0.0],
                [0.0, 0.0, _RSQRT2, _RSQRT2],
                [0.0, 0.0, _RSQRT2, -_RSQRT2],
            ],
            dtype=complex,
        ),
    )


def _site_matrix(state: WalkerCoinState) -> tuple[list[Site], np.ndarray]:
    """Occupied sites (sorted) and their amplitude rows, one column per coin."""
    sites = sorted({(x, y) for x, y, _ in state.amplitudes})
    rows = {site: i for i, site in enumerate(sites)}
    amps = np.zeros((len(sites), state.coin_dim), dtype=complex)
    for (x, y, c), amp in state.amplitudes.items():
        amps[rows[(x, y)], c] = amp
    return sites, amps


def measure_coin(state: WalkerCoinState, basis: CoinBasis) -> list[MeasurementOutcome]:
    """Project the coin onto each basis vector.

    Outcome ``k`` has site amplitudes ``sum_c conj(b_k[c]) amp(x, y, c)``;
    its probability is their squared norm and its post state is the
    normalized amplitude map.
    """
    if basis.dim != state.coin_dim:
        raise ValueError(
            f"basis dimension {basis.dim} does not match coin_dim {state.coin_dim}"
        )
    sites, amps = _site_matrix(state)
    total = float(np.sum(np.abs(amps) ** 2))
    if abs(total - 1.0) > NORM_TOL:
        raise ValueError(f"state is not normalized (|amplitudes|^2 = {total})")
    projected = amps @ basis.vectors.conj().T
    probabilities = np.sum(np.abs(projected) ** 2, axis=0)
    outcomes = []
    for k in range(basis.dim):
        p = float(probabilities[k])
        if p < P_FLOOR:
            outcomes.append(MeasurementOutcome(k, p, None))
            continue
        column = projected[:, k] / math.sqrt(p)
        post = {site: a for site, a in zip(sites, column) if a != 0}
        outcomes.append(MeasurementOutcome(k, p, post))
    return outcomes


def average_induced_entanglement(state: WalkerCoinState, basis: CoinBasis) -> float:
    """Probability-weighted average of the post-measurement x-y entanglement."""
    return float(
        sum(
            outcome.probability * spatial_entanglement(outcome.post_state)
            for outcome in measure_coin(state, basis)
            if outcome.post_state is not None
        )
    )
