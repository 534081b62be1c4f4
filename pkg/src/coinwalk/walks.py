"""The two walk evolutions: conditional shifts, coin unitaries, and steps.

Conventions (x grows to the right, y grows upward):

* qubit walk, coin 0 / 1: shift one step left / right along x, down / up
  along y.  One time step is Hadamard, x-shift, Hadamard, y-shift.
* four-component walk, coins 0..3: diagonal moves left-down, left-up,
  right-down, right-up.  One time step is the Grover coin followed by the
  diagonal shift.

Shifts only remap keys, so they introduce no rounding at all.
"""

from __future__ import annotations

import cmath
import math
from enum import Enum

import numpy as np

from .state import Amplitudes, WalkerCoinState

_RSQRT2 = 1.0 / math.sqrt(2.0)
_TWO_PI = 2.0 * math.pi

#: coin phase giving the axis-symmetric qubit evolution
SYMMETRIC_ALPHA = math.pi / 2


class WalkKind(Enum):
    ALTERNATE = "alternate"
    GROVER = "grover"

    @property
    def coin_dim(self) -> int:
        return 2 if self is WalkKind.ALTERNATE else 4


def _require_coin_dim(state: WalkerCoinState, dim: int) -> None:
    if state.coin_dim != dim:
        raise ValueError(f"operation requires coin_dim {dim}, got {state.coin_dim}")


def shift_x(state: WalkerCoinState) -> WalkerCoinState:
    """Move coin-0 amplitude one step left and coin-1 amplitude one step right."""
    _require_coin_dim(state, 2)
    moved: Amplitudes = {}
    for (x, y, c), amp in state.amplitudes.items():
        moved[(x - 1, y, 0) if c == 0 else (x + 1, y, 1)] = amp
    return WalkerCoinState(2, moved, state.prune_threshold)


def shift_y(state: WalkerCoinState) -> WalkerCoinState:
    """Move coin-0 amplitude one step down and coin-1 amplitude one step up."""
    _require_coin_dim(state, 2)
    moved: Amplitudes = {}
    for (x, y, c), amp in state.amplitudes.items():
        moved[(x, y - 1, 0) if c == 0 else (x, y + 1, 1)] = amp
    return WalkerCoinState(2, moved, state.prune_threshold)


def hadamard_coin(state: WalkerCoinState) -> WalkerCoinState:
    """Apply the Hadamard gate to the coin at every site."""
    _require_coin_dim(state, 2)
    out: Amplitudes = {}
    for (x, y, c), amp in state.amplitudes.items():
        half = amp * _RSQRT2
        lo, hi = (x, y, 0), (x, y, 1)
        out[lo] = out.get(lo, 0j) + half
        out[hi] = out.get(hi, 0j) + (half if c == 0 else -half)
    return WalkerCoinState(2, out, state.prune_threshold)


def grover_coin(state: WalkerCoinState) -> WalkerCoinState:
    """Apply the 4x4 Grover diffusion coin at every site.

    Matrix entries are 1/2 off the diagonal and -1/2 on it.
    """
    _require_coin_dim(state, 4)
    out: Amplitudes = {}
    for (x, y, c), amp in state.amplitudes.items():
        half = amp * 0.5
        for r in range(4):
            key = (x, y, r)
            out[key] = out.get(key, 0j) + (-half if r == c else half)
    return WalkerCoinState(4, out, state.prune_threshold)


def shift_grover(state: WalkerCoinState) -> WalkerCoinState:
    """Diagonal shift: coins 0..3 move left-down, left-up, right-down, right-up."""
    _require_coin_dim(state, 4)
    moved: Amplitudes = {}
    for (x, y, c), amp in state.amplitudes.items():
        dx = -1 if c in (0, 1) else 1
        dy = -1 if c in (0, 2) else 1
        moved[(x + dx, y + dy, c)] = amp
    return WalkerCoinState(4, moved, state.prune_threshold)


def step(kind: WalkKind, state: WalkerCoinState) -> WalkerCoinState:
    """Advance the walk by one full time step."""
    _require_coin_dim(state, kind.coin_dim)
    if kind is WalkKind.ALTERNATE:
        return shift_y(hadamard_coin(shift_x(hadamard_coin(state))))
    return shift_grover(grover_coin(state))


def evolve(
    kind: WalkKind,
    initial_coin: np.ndarray,
    t: int,
    prune_threshold: float = 0.0,
) -> WalkerCoinState:
    """Run ``t`` steps from the origin with the given initial coin state."""
    if t < 0:
        raise ValueError(f"step count must be nonnegative, got {t}")
    coin = np.asarray(initial_coin, dtype=complex)
    if coin.shape != (kind.coin_dim,):
        raise ValueError(
            f"{kind.value} walk needs a coin vector of length {kind.coin_dim}"
        )
    state = WalkerCoinState.localized(coin, prune_threshold=prune_threshold)
    for _ in range(t):
        state = step(kind, state)
    return state


def alternate_initial(alpha: float) -> np.ndarray:
    """Coin state ``(|0> + e^{i a}|1>)/sqrt(2)``; alpha is wrapped mod 2 pi.

    ``alpha = pi/2`` gives the evolution whose site distribution is symmetric
    about both axes.
    """
    wrapped = alpha % _TWO_PI
    return np.array([_RSQRT2, _RSQRT2 * cmath.exp(1j * wrapped)])


def grover_initial() -> np.ndarray:
    """The non-localized four-component coin state ``(1, -1, -1, 1)/2``."""
    return np.array([0.5, -0.5, -0.5, 0.5], dtype=complex)
