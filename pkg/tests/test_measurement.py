import math

import numpy as np
import pytest

from coinwalk.measurement import (
    CoinBasis,
    average_induced_entanglement,
    computational_basis,
    grover_max_basis,
    grover_min_basis,
    measure_coin,
    qubit_basis,
)
from coinwalk.state import WalkerCoinState
from coinwalk.walks import (
    SYMMETRIC_ALPHA,
    WalkKind,
    alternate_initial,
    evolve,
    grover_initial,
)

RSQRT2 = 1.0 / math.sqrt(2.0)


def haar_basis(rng, dim):
    ginibre = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(ginibre)
    q = q * (np.diagonal(r) / np.abs(np.diagonal(r)))
    return CoinBasis(dim, q.T.copy())


def bell_like_state():
    return WalkerCoinState(
        2, {(0, 0, 0): complex(RSQRT2), (1, 1, 1): complex(RSQRT2)}
    )


# --- basis constructors ---------------------------------------------------


def test_qubit_basis_at_origin():
    basis = qubit_basis(0.0, 0.0)
    assert np.allclose(basis.vectors, [[1, 0], [0, -1]])


def test_qubit_basis_at_grid_midpoint():
    basis = qubit_basis(math.pi / 4, math.pi / 2)
    assert np.allclose(
        basis.vectors,
        [[RSQRT2, 1j * RSQRT2], [RSQRT2, -1j * RSQRT2]],
        atol=1e-15,
    )


def test_qubit_basis_is_orthonormal_everywhere():
    rng = np.random.default_rng(3)
    for _ in range(50):
        theta = rng.uniform(0, math.pi / 2)
        phi = rng.uniform(0, math.pi)
        basis = qubit_basis(theta, phi)
        gram = basis.vectors.conj() @ basis.vectors.T
        assert np.abs(gram - np.eye(2)).max() < 1e-14


def test_qubit_basis_rejects_out_of_range_angles():
    with pytest.raises(ValueError, match="theta"):
        qubit_basis(-0.1, 0.0)
    with pytest.raises(ValueError, match="theta"):
        qubit_basis(math.pi / 2 + 0.1, 0.0)
    with pytest.raises(ValueError, match="phi"):
        qubit_basis(0.0, -0.1)
    with pytest.raises(ValueError, match="phi"):
        qubit_basis(0.0, math.pi + 0.1)


def test_computational_basis_is_identity():
    for dim in (2, 4):
        assert np.array_equal(computational_basis(dim).vectors, np.eye(dim))


def test_computational_basis_matches_origin_qubit_basis_up_to_phase():
    comp = computational_basis(2).vectors
    origin = qubit_basis(0.0, 0.0).vectors
    overlaps = np.abs(np.sum(comp.conj() * origin, axis=1))
    assert np.allclose(overlaps, [1.0, 1.0], atol=1e-15)


def test_computational_basis_rejects_other_dimensions():
    with pytest.raises(ValueError):
        computational_basis(3)


def test_grover_max_basis_vectors():
    basis = grover_max_basis()
    assert np.allclose(basis.vectors[0], [RSQRT2, 0, 0, RSQRT2])
    assert np.allclose(basis.vectors[1], [RSQRT2, 0, 0, -RSQRT2])
    assert np.allclose(basis.vectors[2], [0, RSQRT2, RSQRT2, 0])
    assert np.allclose(basis.vectors[3], [0, RSQRT2, -RSQRT2, 0])
    gram = basis.vectors.conj() @ basis.vectors.T
    assert np.abs(gram - np.eye(4)).max() < 1e-15


def test_grover_min_basis_vectors():
    basis = grover_min_basis()
    assert np.allclose(basis.vectors[0], [RSQRT2, RSQRT2, 0, 0])
    assert np.allclose(basis.vectors[2], [0, 0, RSQRT2, RSQRT2])
    gram = basis.vectors.conj() @ basis.vectors.T
    assert np.abs(gram - np.eye(4)).max() < 1e-15


def test_coin_basis_rejects_non_orthonormal_rows():
    with pytest.raises(ValueError, match="orthonormal"):
        CoinBasis(2, np.array([[1.0, 0.0], [1.0, 0.0]]))


# --- projective measurement -----------------------------------------------


def test_measure_localized_state_in_computational_basis():
    state = WalkerCoinState.localized(np.array([1.0, 0.0]))
    outcomes = measure_coin(state, computational_basis(2))
    assert outcomes[0].index == 0
    assert math.isclose(outcomes[0].probability, 1.0, abs_tol=1e-15)
    assert outcomes[0].post_state == {(0, 0): 1.0}
    assert outcomes[1].probability == 0.0
    assert outcomes[1].post_state is None


def test_measure_bell_like_state_in_computational_basis():
    outcomes = measure_coin(bell_like_state(), computational_basis(2))
    for k, site in [(0, (0, 0)), (1, (1, 1))]:
        assert math.isclose(outcomes[k].probability, 0.5, abs_tol=1e-15)
        post = outcomes[k].post_state
        assert set(post) == {site}
        assert math.isclose(abs(post[site]), 1.0, abs_tol=1e-15)


def test_measure_bell_like_state_in_rotated_basis():
    outcomes = measure_coin(bell_like_state(), qubit_basis(math.pi / 4, 0.0))
    for k, sign in [(0, 1.0), (1, -1.0)]:
        assert math.isclose(outcomes[k].probability, 0.5, abs_tol=1e-15)
        post = outcomes[k].post_state
        assert math.isclose(post[(0, 0)].real, RSQRT2, abs_tol=1e-15)
        assert math.isclose(post[(1, 1)].real, sign * RSQRT2, abs_tol=1e-15)


def test_measurement_probabilities_sum_to_one():
    rng = np.random.default_rng(7)
    for t in range(1, 5):
        for kind in WalkKind:
            initial = (
                alternate_initial(SYMMETRIC_ALPHA)
                if kind is WalkKind.ALTERNATE
                else grover_initial()
            )
            state = evolve(kind, initial, t)
            for basis in [
                computational_basis(kind.coin_dim),
                haar_basis(rng, kind.coin_dim),
            ]:
                total = sum(o.probability for o in measure_coin(state, basis))
                assert abs(total - 1.0) < 1e-10


def test_outcome_mixture_reproduces_coin_traced_density():
    # summing p |post><post| over outcomes must rebuild the walker density
    # matrix with the coin traced out, for any orthonormal basis
    rng = np.random.default_rng(13)
    for t in range(1, 5):
        for kind in WalkKind:
            initial = (
                alternate_initial(SYMMETRIC_ALPHA)
                if kind is WalkKind.ALTERNATE
                else grover_initial()
            )
            state = evolve(kind, initial, t)
            sites = sorted({(x, y) for x, y, _ in state.amplitudes})
            index = {site: i for i, site in enumerate(sites)}
            psi = np.zeros((len(sites), kind.coin_dim), dtype=complex)
            for (x, y, c), amp in state.amplitudes.items():
                psi[index[(x, y)], c] = amp
            traced = psi @ psi.conj().T
            for basis in [
                computational_basis(kind.coin_dim),
                haar_basis(rng, kind.coin_dim),
            ]:
                mixture = np.zeros_like(traced)
                for outcome in measure_coin(state, basis):
                    if outcome.post_state is None:
                        continue
                    vec = np.zeros(len(sites), dtype=complex)
                    for site, amp in outcome.post_state.items():
                        vec[index[site]] = amp
                    mixture += outcome.probability * np.outer(vec, vec.conj())
                assert np.abs(mixture - traced).max() < 1e-10


def test_measure_rejects_dimension_mismatch():
    state = WalkerCoinState.localized(np.array([1.0, 0.0]))
    with pytest.raises(ValueError, match="dimension"):
        measure_coin(state, computational_basis(4))


def test_measure_rejects_unnormalized_state():
    state = WalkerCoinState(2, {(0, 0, 0): 0.5})
    with pytest.raises(ValueError, match="normalized"):
        measure_coin(state, computational_basis(2))


# --- average induced entanglement -----------------------------------------


def test_average_entanglement_of_bell_like_state():
    assert average_induced_entanglement(bell_like_state(), computational_basis(2)) == 0.0
    rotated = average_induced_entanglement(
        bell_like_state(), qubit_basis(math.pi / 4, 0.0)
    )
    assert math.isclose(rotated, 1.0, abs_tol=1e-14)


def test_average_entanglement_after_one_step():
    state = evolve(WalkKind.ALTERNATE, alternate_initial(SYMMETRIC_ALPHA), 1)
    computational = average_induced_entanglement(state, computational_basis(2))
    optimal = average_induced_entanglement(
        state, qubit_basis(math.pi / 4, math.pi / 2)
    )
    assert abs(computational) < 1e-12
    assert abs(optimal - 1.0) < 1e-12


def test_average_is_invariant_under_basis_vector_phases():
    state = evolve(WalkKind.ALTERNATE, alternate_initial(SYMMETRIC_ALPHA), 4)
    basis = qubit_basis(0.7, 1.9)
    reference = average_induced_entanglement(state, basis)
    rng = np.random.default_rng(19)
    for _ in range(5):
        phases = np.exp(1j * rng.uniform(0, 2 * math.pi, size=2))
        rephased = CoinBasis(2, basis.vectors * phases[:, None])
        assert abs(average_induced_entanglement(state, rephased) - reference) < 1e-12


def test_average_is_invariant_under_outcome_order():
    state = evolve(WalkKind.GROVER, grover_initial(), 4)
    basis = grover_max_basis()
    reference = average_induced_entanglement(state, basis)
    permuted = CoinBasis(4, basis.vectors[[2, 0, 3, 1]].copy())
    assert abs(average_induced_entanglement(state, permuted) - reference) < 1e-12


def test_computational_average_does_not_depend_on_initial_coin_phase():
    # holds for the computational basis specifically; a rotated basis can
    # single out particular coin phases
    basis = computational_basis(2)
    for t in (1, 2, 3, 5):
        reference = None
        for alpha in (0.0, math.pi / 4, math.pi / 2, math.pi, 3 * math.pi / 2):
            state = evolve(WalkKind.ALTERNATE, alternate_initial(alpha), t)
            value = average_induced_entanglement(state, basis)
            if reference is None:
                reference = value
            else:
                assert abs(value - reference) < 1e-9
