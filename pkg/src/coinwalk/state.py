"""Sparse walker-plus-coin states on the two-dimensional integer lattice.

A state is a map ``(x, y, c) -> amplitude`` over lattice sites and coin
components.  The lattice is unbounded; after ``t`` steps from the origin the
support fits inside a ``(2t+1) x (2t+1)`` box, so a sparse map needs no
truncation policy.  States are treated as immutable values: every operation
returns a new state and never mutates its input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

Site = tuple[int, int]
Amplitudes = dict[tuple[int, int, int], complex]

#: deviation of the squared norm from 1 beyond which a state is rejected
NORM_TOL = 1e-9


@dataclass(frozen=True)
class WalkerCoinState:
    """Amplitudes of a walker-coin configuration, keyed by ``(x, y, coin)``.

    Entries with magnitude at or below ``prune_threshold`` are dropped at
    construction time; the default keeps everything except exact zeros, so
    results are bit-stable.
    """

    coin_dim: int
    amplitudes: Amplitudes
    prune_threshold: float = field(default=0.0, compare=False)

    def __post_init__(self) -> None:
        if self.coin_dim not in (2, 4):
            raise ValueError(f"coin_dim must be 2 or 4, got {self.coin_dim}")
        threshold = self.prune_threshold
        clean: Amplitudes = {}
        for (x, y, c), raw in self.amplitudes.items():
            if not 0 <= c < self.coin_dim:
                raise ValueError(f"coin index {c} out of range for dim {self.coin_dim}")
            amp = complex(raw)
            if not (math.isfinite(amp.real) and math.isfinite(amp.imag)):
                raise ValueError(f"non-finite amplitude at ({x}, {y}, {c})")
            if abs(amp) > threshold:
                clean[(x, y, c)] = amp
        object.__setattr__(self, "amplitudes", clean)

    @classmethod
    def localized(
        cls,
        coin: Iterable[complex] | np.ndarray,
        x: int = 0,
        y: int = 0,
        prune_threshold: float = 0.0,
    ) -> "WalkerCoinState":
        """Product state: walker at ``(x, y)``, coin in the given unit vector."""
        entries = np.asarray(list(coin), dtype=complex)
        if entries.ndim != 1 or len(entries) not in (2, 4):
            raise ValueError("coin vector must have 2 or 4 components")
        if abs(np.vdot(entries, entries).real - 1.0) > NORM_TOL:
            raise ValueError("coin vector is not normalized")
        amplitudes = {(x, y, c): complex(a) for c, a in enumerate(entries)}
        return cls(len(entries), amplitudes, prune_threshold)


def norm_squared(state: WalkerCoinState) -> float:
    """Sum of squared amplitude magnitudes."""
    return sum(abs(a) ** 2 for a in state.amplitudes.values())


def position_distribution(state: WalkerCoinState) -> dict[Site, float]:
    """Probability of finding the walker at each site, coin summed over.

    Raises ``ValueError`` if the state is not normalized.
    """
    total = norm_squared(state)
    if abs(total - 1.0) > NORM_TOL:
        raise ValueError(f"state is not normalized (|amplitudes|^2 = {total})")
    dist: dict[Site, float] = {}
    for (x, y, _), amp in state.amplitudes.items():
        dist[(x, y)] = dist.get((x, y), 0.0) + abs(amp) ** 2
    return dist


def marginal(distribution: Mapping[Site, float], axis: int) -> dict[int, float]:
    """Marginal of a site distribution along ``axis`` (0 for x, 1 for y)."""
    if axis not in (0, 1):
        raise ValueError("axis must be 0 or 1")
    out: dict[int, float] = {}
    for site, p in distribution.items():
        out[site[axis]] = out.get(site[axis], 0.0) + p
    return out
