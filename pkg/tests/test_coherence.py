import numpy as np
import pytest
from conftest import random_density, random_ket, random_unitary
from hypothesis import given
from hypothesis import strategies as st

from enscoh.coherence import (
    CoherenceMeasure,
    c_l1,
    c_rel,
    coherence,
    density_path,
    max_coherence,
    pure_coherence,
)
from enscoh.linalg import dephase

seeds = st.integers(0, 2**32 - 1)
dims = st.integers(2, 6)
measures = st.sampled_from(list(CoherenceMeasure))


def test_max_coherence():
    assert max_coherence("l1", 4) == 3
    assert max_coherence(CoherenceMeasure.REL, 4) == 2
    assert max_coherence("l1", 9) == 8
    with pytest.raises(ValueError):
        max_coherence("l1", 1)


def test_parse_measure():
    assert CoherenceMeasure.parse("L1") is CoherenceMeasure.L1
    with pytest.raises(ValueError):
        CoherenceMeasure.parse("fidelity")


def test_plus_state():
    plus = np.ones(2) / np.sqrt(2)
    assert c_l1(plus) == pytest.approx(1.0, abs=1e-12)
    assert c_rel(plus) == pytest.approx(1.0, abs=1e-12)
    assert c_l1(plus, basis=[plus, np.array([1, -1]) / np.sqrt(2)]) == pytest.approx(0.0, abs=1e-12)


def test_maximally_coherent_state_reaches_bound():
    for d in range(2, 7):
        psi = np.ones(d) / np.sqrt(d)
        for m in CoherenceMeasure:
            assert coherence(psi, m) == pytest.approx(max_coherence(m, d), abs=1e-10)


@given(seeds, dims, measures)
def test_ket_fast_path_matches_density_route(seed, d, m):
    psi = random_ket(np.random.default_rng(seed), d)
    assert coherence(psi, m) == pytest.approx(density_path(psi, m), abs=1e-8)


@given(seeds, dims)
def test_rel_of_ket_is_shannon_entropy(seed, d):
    psi = random_ket(np.random.default_rng(seed), d)
    p = np.abs(psi) ** 2
    assert c_rel(psi) == pytest.approx(-np.sum(p * np.log2(p)), abs=1e-10)


@given(seeds, dims, measures)
def test_basis_covariance(seed, d, m):
    rng = np.random.default_rng(seed)
    rho = random_density(rng, d)
    B = random_unitary(rng, d)
    V = random_unitary(rng, d)
    assert coherence(V @ rho @ V.conj().T, m, V @ B) == pytest.approx(coherence(rho, m, B), abs=1e-8)


@given(seeds, dims, measures)
def test_dephased_state_is_incoherent(seed, d, m):
    rng = np.random.default_rng(seed)
    B = random_unitary(rng, d)
    assert coherence(dephase(random_density(rng, d), B), m, B) <= 1e-10


def test_pure_coherence_vectorized(rng):
    kets = np.array([random_ket(rng, 3) for _ in range(5)])
    for m in CoherenceMeasure:
        batch = pure_coherence(kets, m)
        assert np.allclose(batch, [coherence(k, m) for k in kets], atol=1e-12)
        assert np.allclose(pure_coherence(kets.T, m, axis=0), batch)
