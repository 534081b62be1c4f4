"""Experiment procedures: time sweeps, basis grid search, random-basis runs.

Every procedure evolves each walk once per time step and reuses that state
across all basis evaluations, so sweeping bases costs nothing extra in
evolution time.  Random runs derive one generator per ``(seed, t, sample)``
triple, which makes results independent of evaluation order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .measurement import (
    CoinBasis,
    average_induced_entanglement,
    computational_basis,
    grover_max_basis,
    qubit_basis,
)
from .walks import (
    SYMMETRIC_ALPHA,
    WalkKind,
    alternate_initial,
    evolve,
    grover_initial,
    step,
)

CompareMode = Literal["computational", "optimal"]


@dataclass(frozen=True)
class GridSpec:
    """Uniform grid over theta in [0, pi/2] and phi in [0, pi], endpoints included.

    The 51 x 51 default puts theta = pi/4 and phi = pi/2 exactly on grid
    points.
    """

    theta_points: int = 51
    phi_points: int = 51

    def __post_init__(self) -> None:
        if self.theta_points < 2 or self.phi_points < 2:
            raise ValueError("grid needs at least 2 points per axis")


@dataclass(frozen=True)
class EntropySurface:
    """Average entanglement over a (theta, phi) grid, with its extrema.

    Ties are broken toward the smallest theta, then the smallest phi.
    """

    rows: tuple[tuple[float, float, float], ...]
    argmax: tuple[float, float]
    argmin: tuple[float, float]


@dataclass(frozen=True)
class RandomBasisRun:
    """Entanglement samples over random bases; reproducible from the seed."""

    seed: int
    samples: int
    rows: tuple[tuple[int, int, float], ...]


def _uniform_grid(stop: float, points: int) -> list[float]:
    # stop * (i / (points - 1)) keeps midpoints of odd grids exact in floating
    # point, which the argmax assertions rely on.
    return [stop * (i / (points - 1)) for i in range(points)]


def sweep_time(
    kind: WalkKind,
    initial: np.ndarray,
    basis: CoinBasis,
    t_max: int,
) -> list[tuple[int, float]]:
    """Average induced entanglement after t steps, for t = 1..t_max."""
    if t_max < 1:
        raise ValueError(f"t_max must be at least 1, got {t_max}")
    state = evolve(kind, initial, 0)
    rows = []
    for t in range(1, t_max + 1):
        state = step(kind, state)
        rows.append((t, average_induced_entanglement(state, basis)))
    return rows


def grid_search_qubit(
    t: int,
    initial: np.ndarray,
    grid: GridSpec | None = None,
) -> EntropySurface:
    """Evaluate every (theta, phi) measurement basis on one evolved qubit walk."""
    if t < 1:
        raise ValueError(f"t must be at least 1, got {t}")
    if grid is None:
        grid = GridSpec()
    state = evolve(WalkKind.ALTERNATE, initial, t)
    thetas = _uniform_grid(np.pi / 2, grid.theta_points)
    phis = _uniform_grid(np.pi, grid.phi_points)
    rows = []
    best = worst = None
    argmax = argmin = (thetas[0], phis[0])
    for theta in thetas:
        for phi in phis:
            entropy = average_induced_entanglement(state, qubit_basis(theta, phi))
            rows.append((theta, phi, entropy))
            if best is None or entropy > best:
                best, argmax = entropy, (theta, phi)
            if worst is None or entropy < worst:
                worst, argmin = entropy, (theta, phi)
    return EntropySurface(tuple(rows), argmax, argmin)


def haar_random_basis4(rng: np.random.Generator) -> CoinBasis:
    """Draw a Haar-distributed four-dimensional basis.

    QR-orthonormalizes a matrix of standard complex Gaussians, then fixes
    each column's phase so the triangular factor has a real positive
    diagonal; the columns are then Haar-distributed and become the basis
    vectors.
    """
    ginibre = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    q, r = np.linalg.qr(ginibre / np.sqrt(2.0))
    diagonal = np.diagonal(r)
    q = q * (diagonal / np.abs(diagonal))
    return CoinBasis(4, q.T.copy())


def random_basis_run(
    t_min: int,
    t_max: int,
    samples: int,
    seed: int,
) -> RandomBasisRun:
    """Sample Haar-random measurement bases on the four-component walk.

    For each t the walk is evolved once; each row ``(sample, t, entropy)``
    comes from an independent generator seeded with ``(seed, t, sample)``.
    """
    if t_min < 1 or t_min > t_max:
        raise ValueError(f"need 1 <= t_min <= t_max, got {t_min}..{t_max}")
    if samples < 1:
        raise ValueError(f"samples must be at least 1, got {samples}")
    if seed < 0:
        raise ValueError(f"seed must be nonnegative, got {seed}")
    state = evolve(WalkKind.GROVER, grover_initial(), 0)
    for _ in range(t_min - 1):
        state = step(WalkKind.GROVER, state)
    rows = []
    for t in range(t_min, t_max + 1):
        state = step(WalkKind.GROVER, state)
        for k in range(samples):
            basis = haar_random_basis4(np.random.default_rng((seed, t, k)))
            rows.append((k, t, average_induced_entanglement(state, basis)))
    return RandomBasisRun(seed, samples, tuple(rows))


def compare_walks(
    t_max: int,
    mode: CompareMode,
) -> list[tuple[int, float, float, float]]:
    """Entanglement of both walks side by side under paired bases.

    ``computational`` pairs the two computational bases; ``optimal`` pairs
    the qubit basis at (pi/4, pi/2) with the four-dimensional maximizing
    basis.  Initial coins are the axis-symmetric qubit state and the
    non-localized four-component state.
    """
    if t_max < 1:
        raise ValueError(f"t_max must be at least 1, got {t_max}")
    if mode == "computational":
        alternate_basis = computational_basis(2)
        grover_basis = computational_basis(4)
    elif mode == "optimal":
        alternate_basis = qubit_basis(np.pi / 4, np.pi / 2)
        grover_basis = grover_max_basis()
    else:
        raise ValueError(f"unknown mode {mode!r}")
    alternate = sweep_time(
        WalkKind.ALTERNATE, alternate_initial(SYMMETRIC_ALPHA), alternate_basis, t_max
    )
    grover = sweep_time(WalkKind.GROVER, grover_initial(), grover_basis, t_max)
    return [
        (t, a, g, a - g)
        for (t, a), (_, g) in zip(alternate, grover)
    ]
