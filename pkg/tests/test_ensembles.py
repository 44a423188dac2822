import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from enscoh.ensembles import (
    NAMED_ENSEMBLES,
    DistinguishabilityClass,
    NotTwoBlockError,
    ProductEnsemble,
    is_two_block,
    make_arb_2x2,
    make_arb_2x3,
    make_arb_2xd,
    make_computational,
    make_e2,
    make_nlwe,
    make_pyramid,
    make_tiles,
    named_ensemble,
    pyramid_vectors,
    relative_local_coherence,
    superposed_state,
    two_block_bases,
)
from enscoh.linalg import is_orthonormal_set

angles = st.floats(0, np.pi)
phases = st.floats(0, 2 * np.pi)


@pytest.mark.parametrize("name", sorted(NAMED_ENSEMBLES))
def test_named_ensembles_are_orthogonal_and_normalized(name):
    e = named_ensemble(name)
    assert is_orthonormal_set(list(e.product_states()), tol=1e-10)
    assert abs(np.linalg.norm(superposed_state(e)) - 1) <= 1e-10


def test_sizes_and_classes():
    assert len(make_nlwe()) == 9
    assert len(make_tiles()) == 5
    assert len(make_pyramid()) == 5
    assert len(named_ensemble("nlwe-minus-fourth")) == 8
    assert len(named_ensemble("tiles-minus-stopper")) == 4
    assert named_ensemble("nlwe-minus-fourth").rounds == 4
    assert named_ensemble("tiles-minus-stopper").distinguishability_class is DistinguishabilityClass.FINITE_MULTI_ROUND
    assert make_e2().distinguishability_class is DistinguishabilityClass.ONE_WAY_MIN_ROUND


def test_unknown_name():
    with pytest.raises(KeyError):
        named_ensemble("nope")


def test_pyramid_vectors_orthogonality_pattern():
    v = pyramid_vectors()
    G = np.abs(v.conj() @ v.T)
    for i in range(5):
        assert G[i, (i + 2) % 5] < 1e-12
        assert G[i, (i + 1) % 5] > 0.1
    assert np.allclose(np.diag(G), 1)


def test_rejects_non_orthogonal_members():
    with pytest.raises(ValueError, match="not orthogonal"):
        ProductEnsemble.from_pairs([([1, 0], [1, 0]), ([1, 0], [1, 1] / np.sqrt(2))])


def test_rejects_bad_shapes_and_norms():
    with pytest.raises(ValueError):
        ProductEnsemble(np.eye(2), np.eye(3)[:1])
    with pytest.raises(ValueError, match="normalized"):
        ProductEnsemble.from_pairs([([1, 1], [1, 0])])
    with pytest.raises(ValueError):
        ProductEnsemble(np.ones((1, 1)), np.ones((1, 1)))


def test_arrays_are_read_only():
    e = make_e2()
    with pytest.raises(ValueError):
        e.alice[0, 0] = 2


def test_json_round_trip(tmp_path):
    e = make_arb_2x2(0.3, 1.1, 0.7, 2.0)
    path = tmp_path / "e.json"
    e.save(path)
    back = ProductEnsemble.load(path)
    assert np.allclose(back.alice, e.alice) and np.allclose(back.bob, e.bob)
    assert back.label == e.label
    data = json.loads(path.read_text())
    assert set(data) >= {"d1", "d2", "states"}


def test_json_malformed():
    with pytest.raises(ValueError):
        ProductEnsemble.from_json({"d1": 2, "states": []})
    with pytest.raises(ValueError):
        ProductEnsemble.from_json({"d1": 2, "d2": 2, "states": [{"alice": [[1, 0], [0, 0]], "bob": [[1, 0]]}]})


def test_two_block_detection():
    assert is_two_block(make_e2())
    assert not is_two_block(make_nlwe())
    with pytest.raises(NotTwoBlockError):
        two_block_bases(make_computational(2, 2).without(0))
    B1, B2 = two_block_bases(make_e2())
    assert np.allclose(B1, np.eye(2))
    assert np.allclose(np.abs(B2), np.full((2, 2), 1 / np.sqrt(2)))


def test_relative_local_coherence_examples():
    assert relative_local_coherence(make_e2()) == pytest.approx(1.0, abs=1e-12)
    assert relative_local_coherence(make_arb_2x2(0.4, 0.4, 1.0, 1.0)) <= 1e-12


@given(angles, angles)
def test_real_family_relative_coherence_is_sine(t1, t2):
    e = make_arb_2x2(t1, t2)
    assert relative_local_coherence(e) == pytest.approx(abs(np.sin(t2 - t1)), abs=1e-9)
    assert relative_local_coherence(make_arb_2x2(t2, t1)) == pytest.approx(relative_local_coherence(e), abs=1e-12)


@given(angles, phases, angles, phases, st.permutations(range(3)))
def test_relative_coherence_bounds_and_relabel_invariance(t1, p1, t2, p2, perm):
    e = make_arb_2x3(t1, p1, t2, p2)
    cr = relative_local_coherence(e)
    assert -1e-12 <= cr <= 2 + 1e-9
    B1, B2 = two_block_bases(e)
    shuffled = make_arb_2xd(B1, B2[:, list(perm)])
    assert relative_local_coherence(shuffled) == pytest.approx(cr, abs=1e-12)


@given(angles, phases, angles, phases)
def test_family_constructors_are_orthonormal(t1, p1, t2, p2):
    for e in (make_arb_2x2(t1, t2, p1, p2), make_arb_2x3(t1, p1, t2, p2)):
        assert is_orthonormal_set(list(e.product_states()), tol=1e-10)


def test_without_and_relabeled():
    e = make_tiles()
    assert len(e.without(4)) == 4
    r = e.relabeled([4, 3, 2, 1, 0])
    assert np.allclose(r.alice[0], e.alice[4])
