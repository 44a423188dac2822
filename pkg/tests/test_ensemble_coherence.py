import numpy as np
import pytest
from conftest import random_unitary

from enscoh.coherence import CoherenceMeasure, max_coherence
from enscoh.ensemble_coherence import (
    OptimizerConfig,
    check_observation1,
    coinciding_bases_maximal,
    mec,
    minimize_tau,
    rotated_superposed_state,
    total_local_coherence,
)
from enscoh.ensembles import make_arb_2x2, make_arb_2x3, make_computational, make_e2, make_nlwe, named_ensemble


def test_optimizer_config_validation():
    with pytest.raises(ValueError):
        OptimizerConfig(restarts=0)
    assert OptimizerConfig().restarts_for(4) == 40
    assert OptimizerConfig().restarts_for(9) == 120
    assert OptimizerConfig(restarts=7).restarts_for(9) == 7


def test_total_local_coherence_identity_and_mismatch():
    e = make_computational(2, 2)
    assert total_local_coherence(e, np.eye(2), np.eye(2)) == 0.0
    with pytest.raises(ValueError):
        total_local_coherence(e, np.eye(3), np.eye(2))


def test_e2_tau_matches_rotation_grid():
    e = make_e2()
    grid = np.arange(0, np.pi, 1e-3)
    best = min(
        total_local_coherence(e, np.eye(2), np.array([[np.cos(a), -np.sin(a)], [np.sin(a), np.cos(a)]]))
        for a in grid
    )
    assert best == pytest.approx(2.0, abs=1e-5)
    assert minimize_tau(e).tau == pytest.approx(2.0, abs=1e-8)


def test_computational_basis_keeps_identity():
    for d1, d2 in [(2, 2), (2, 3), (3, 3)]:
        e = make_computational(d1, d2)
        for m in CoherenceMeasure:
            r = mec(e, m)
            assert np.array_equal(r.u1_star, np.eye(d1)) and np.array_equal(r.u2_star, np.eye(d2))
            assert r.tau == 0.0
            assert r.mec == pytest.approx(max_coherence(m, d1 * d2), abs=1e-9)


def test_e2_values():
    r = mec(make_e2(), "l1")
    assert r.mec == pytest.approx(1.914214, abs=1e-5)
    assert r.mec_normalized == pytest.approx(r.mec / 3)
    assert r.deficit == pytest.approx(abs(r.tau - r.mec), abs=1e-9)
    rel = mec(make_e2(), "rel")
    assert rel.tau == pytest.approx(2.0, abs=1e-6)
    assert rel.mec == pytest.approx(1.5, abs=1e-5)


def test_report_unitaries_reproduce_mec():
    e = make_e2()
    r = mec(e, "l1")
    psi = rotated_superposed_state(e, r.u1_star, r.u2_star)
    assert abs(np.sum(np.abs(psi)) ** 2 - 1 - r.mec) <= 1e-9
    assert total_local_coherence(e, r.u1_star, r.u2_star) == pytest.approx(r.tau, abs=1e-8)


def test_tau_invariant_under_relabeling(rng):
    e = named_ensemble("tiles-minus-stopper")
    perm = rng.permutation(len(e))
    assert minimize_tau(e.relabeled(perm)).tau == pytest.approx(minimize_tau(e).tau, abs=2e-6)


def test_tau_invariant_under_local_unitaries(rng):
    e = make_arb_2x2(0.4, 1.3)
    V = random_unitary(rng, 2)
    rotated = type(e)(e.alice, e.bob @ V.T)
    assert minimize_tau(rotated).tau == pytest.approx(minimize_tau(e).tau, abs=1e-6)


def test_mec_bounded_by_maximum():
    e = make_arb_2x3(0.7, 0.2, 1.9, 2.8)
    for m in CoherenceMeasure:
        r = mec(e, m)
        assert 0 < r.mec_normalized <= 1 + 1e-9


def test_seed_makes_results_repeatable():
    e = make_arb_2x2(0.3, 2.2, 0.5, 1.7)
    a, b = mec(e, "l1"), mec(e, "l1")
    assert a.mec == b.mec and np.array_equal(a.u2_star, b.u2_star)


def test_coinciding_bases_maximal():
    assert coinciding_bases_maximal(make_arb_2x2(0.9, 0.9))
    assert coinciding_bases_maximal(make_arb_2x3(0.9, 0.4, 0.9, 0.4))
    with pytest.raises(ValueError):
        coinciding_bases_maximal(make_arb_2x2(0.9, 1.4))
    with pytest.raises(ValueError):
        coinciding_bases_maximal(make_arb_2x2(0.9, 0.9, 0.3, 0.3))
    with pytest.raises(ValueError):
        coinciding_bases_maximal(make_nlwe())


def test_contract_alias():
    assert check_observation1 is coinciding_bases_maximal
