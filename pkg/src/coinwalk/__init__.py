"""Coined 2D quantum walks and the spatial entanglement induced by coin
measurements.

The package simulates two discrete-time walks on the integer plane (a
single-qubit-coin walk that alternates x and y moves, and the
four-component diagonal walk), measures the coin in arbitrary orthonormal
bases, and reports the probability-weighted x-y entanglement of the
post-measurement walker states.
"""

from .entanglement import (
    CoefficientMatrix,
    coefficient_matrix,
    reduced_density_x,
    reduced_density_y,
    schmidt_spectrum,
    spatial_entanglement,
    von_neumann_entropy,
)
from .explore import (
    EntropySurface,
    GridSpec,
    RandomBasisRun,
    compare_walks,
    grid_search_qubit,
    haar_random_basis4,
    random_basis_run,
    sweep_time,
)
from .measurement import (
    CoinBasis,
    MeasurementOutcome,
    average_induced_entanglement,
    computational_basis,
    grover_max_basis,
    grover_min_basis,
    measure_coin,
    qubit_basis,
)
from .state import WalkerCoinState, norm_squared, position_distribution
from .walks import (
    SYMMETRIC_ALPHA,
    WalkKind,
    alternate_initial,
    evolve,
    grover_coin,
    grover_initial,
    hadamard_coin,
    shift_grover,
    shift_x,
    shift_y,
    step,
)

__version__ = "0.1.0"

__all__ = [
    "CoefficientMatrix",
    "CoinBasis",
    "EntropySurface",
    "GridSpec",
    "MeasurementOutcome",
    "RandomBasisRun",
    "SYMMETRIC_ALPHA",
    "WalkKind",
    "WalkerCoinState",
    "alternate_initial",
    "average_induced_entanglement",
    "coefficient_matrix",
    "compare_walks",
    "computational_basis",
    "evolve",
    "grid_search_qubit",
    "grover_coin",
    "grover_initial",
    "grover_max_basis",
    "grover_min_basis",
    "haar_random_basis4",
    "hadamard_coin",
    "measure_coin",
    "norm_squared",
    "position_distribution",
    "qubit_basis",
    "random_basis_run",
    "reduced_density_x",
    "reduced_density_y",
    "schmidt_spectrum",
    "shift_grover",
    "shift_x",
    "shift_y",
    "spatial_entanglement",
    "step",
    "sweep_time",
    "von_neumann_entropy",
]
