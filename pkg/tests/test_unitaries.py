import numpy as np
import pytest
from conftest import random_unitary
from hypothesis import given
from hypothesis import strategies as st

from enscoh.unitaries import givens_product, n_coset_params, params_from_unitary, unitary_from_params

seeds = st.integers(0, 2**32 - 1)
dims = st.integers(2, 5)


def test_zero_vector_is_identity():
    for d in range(2, 5):
        assert np.allclose(unitary_from_params(np.zeros(d * d)), np.eye(d))


def test_single_rotation_swaps_qubit_basis():
    U = unitary_from_params([np.pi / 2, 0, 0, 0])
    assert np.allclose(np.abs(U), [[0, 1], [1, 0]])
    assert np.allclose(U.conj().T @ U, np.eye(2), atol=1e-12)


def test_rejects_bad_parameters():
    with pytest.raises(ValueError):
        unitary_from_params(np.zeros(5), d=2)
    with pytest.raises(ValueError):
        unitary_from_params([np.nan, 0, 0, 0])


@given(seeds, dims)
def test_random_parameters_give_unitaries(seed, d):
    p = np.random.default_rng(seed).uniform(-10, 10, d * d)
    U = unitary_from_params(p, d)
    assert np.allclose(U.conj().T @ U, np.eye(d), atol=1e-12, rtol=0)


@given(seeds, dims)
def test_every_unitary_is_reached(seed, d):
    U = random_unitary(np.random.default_rng(seed), d)
    p = params_from_unitary(U)
    assert p.shape == (d * d,)
    assert np.allclose(unitary_from_params(p), U, atol=1e-10)


def test_batched_products_match_single(rng):
    d = 3
    P = rng.uniform(-np.pi, np.pi, size=(4, 2, n_coset_params(d)))
    T = rng.normal(size=(d, 5))
    out = givens_product(P, d, T)
    assert out.shape == (4, 2, d, 5)
    assert np.allclose(out[2, 1], givens_product(P[2, 1], d) @ T)
