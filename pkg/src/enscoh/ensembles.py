"""Orthogonal product-state ensembles.

An ensemble stores Alice's and Bob's local kets row by row; member ``i``
is ``alice[i] ⊗ bob[i]``. Members are checked for mutual orthogonality
when the ensemble is built. The module also holds the named ensembles
(computational bases, the ``{|00>,|01>,|1+>,|1->}`` set, the 3x3
nonlocality-without-entanglement basis, the Tiles and Pyramid UPBs and
their truncations) and the two-block ``2 ⊗ d`` families.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .coherence import l1_pure
from .linalg import ATOL, basis_matrix


class DistinguishabilityClass(enum.Enum):
    TWO_WAY_MIN_ROUND = "TwoWayMinRound"
    ONE_WAY_MIN_ROUND = "OneWayMinRound"
    FINITE_MULTI_ROUND = "FiniteMultiRound"
    INDISTINGUISHABLE = "Indistinguishable"


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=complex)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class ProductEnsemble:
    """Equiprobable ensemble of bipartite product states.

    Parameters
    ----------
    alice, bob : array_like
        Local kets, shapes ``(N, d1)`` and ``(N, d2)``.
    label : str
        Human-readable name.
    distinguishability_class : DistinguishabilityClass, optional
        LOCC classification as known from the literature. Never computed.
    rounds : int, optional
        Number of LOCC rounds known to suffice, when finite.
    """

    alice: np.ndarray
    bob: np.ndarray
    label: str = ""
    distinguishability_class: DistinguishabilityClass | None = None
    rounds: int | None = field(default=None)

    def __post_init__(self):
        A = np.atleast_2d(np.asarray(self.alice, dtype=complex))
        B = np.atleast_2d(np.asarray(self.bob, dtype=complex))
        if A.shape[0] != B.shape[0]:
            raise ValueError(f"{A.shape[0]} Alice kets but {B.shape[0]} Bob kets")
        n, d1 = A.shape
        d2 = B.shape[1]
        if d1 < 2 or d2 < 2:
            raise ValueError("local dimensions must be at least 2")
        if not 1 <= n <= d1 * d2:
            raise ValueError(f"an ensemble in {d1}x{d2} holds between 1 and {d1 * d2} states, got {n}")
        for name, K in (("alice", A), ("bob", B)):
            norms = np.linalg.norm(K, axis=1)
            bad = np.flatnonzero(np.abs(norms - 1) > ATOL)
            if bad.size:
                raise ValueError(f"{name} ket {bad[0]} is not normalized (norm={norms[bad[0]]!r})")
        overlap = np.abs(A.conj() @ A.T) * np.abs(B.conj() @ B.T)
        np.fill_diagonal(overlap, 0.0)
        if overlap.max(initial=0.0) > ATOL:
            i, j = np.unravel_index(np.argmax(overlap), overlap.shape)
            raise ValueError(f"members {i} and {j} are not orthogonal (|overlap|={overlap[i, j]:.3g})")
        object.__setattr__(self, "alice", _frozen(A))
        object.__setattr__(self, "bob", _frozen(B))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Sequence, Sequence]], **kwargs) -> "ProductEnsemble":
        pairs = list(pairs)
        return cls(np.array([p[0] for p in pairs]), np.array([p[1] for p in pairs]), **kwargs)

    @property
    def d1(self) -> int:
        return self.alice.shape[1]

    @property
    def d2(self) -> int:
        return self.bob.shape[1]

    @property
    def dim(self) -> int:
        return self.d1 * self.d2

    def __len__(self) -> int:
        return self.alice.shape[0]

    @property
    def states(self) -> list[tuple[np.ndarray, np.ndarray]]:
        return list(zip(self.alice, self.bob))

    def product_states(self) -> np.ndarray:
        """Members as rows of an ``(N, d1*d2)`` array."""
        return np.einsum("ni,nj->nij", self.alice, self.bob).reshape(len(self), -1)

    def without(self, index: int, label: str | None = None, **kwargs) -> "ProductEnsemble":
        keep = [i for i in range(len(self)) if i != index]
        return ProductEnsemble(self.alice[keep], self.bob[keep], label=label or f"{self.label}-{index}", **kwargs)

    def relabeled(self, order: Sequence[int]) -> "ProductEnsemble":
        order = list(order)
        return ProductEnsemble(
            self.alice[order], self.bob[order], self.label, self.distinguishability_class, self.rounds
        )

    def is_real(self, tol: float = ATOL) -> bool:
        return bool(np.abs(self.alice.imag).max() <= tol and np.abs(self.bob.imag).max() <= tol)

    def to_json(self) -> dict:
        def enc(k):
            return [[float(z.real), float(z.imag)] for z in k]

        out = {
            "d1": self.d1,
            "d2": self.d2,
            "states": [{"alice": enc(a), "bob": enc(b)} for a, b in self.states],
            "label": self.label,
        }
        if self.distinguishability_class is not None:
            out["class"] = self.distinguishability_class.value
        return out

    @classmethod
    def from_json(cls, data: dict) -> "ProductEnsemble":
        """Build an ensemble from the JSON schema

        ``{"d1": int, "d2": int, "states": [{"alice": [[re, im], ...],
        "bob": [[re, im], ...]}, ...], "label": str}``.
        """
        try:
            d1, d2 = int(data["d1"]), int(data["d2"])
            states = data["states"]
            alice = np.array([[complex(re, im) for re, im in s["alice"]] for s in states])
            bob = np.array([[complex(re, im) for re, im in s["bob"]] for s in states])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed ensemble JSON: {exc}") from exc
        if alice.ndim != 2 or alice.shape[1] != d1 or bob.ndim != 2 or bob.shape[1] != d2:
            raise ValueError("ket lengths do not match d1/d2")
        cls_name = data.get("class")
        return cls(
            alice,
            bob,
            label=str(data.get("label", "")),
            distinguishability_class=DistinguishabilityClass(cls_name) if cls_name else None,
        )

    @classmethod
    def load(cls, path: str | Path) -> "ProductEnsemble":
        with open(path) as fh:
            return cls.from_json(json.load(fh))

    def save(self, path: str | Path) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh, indent=1)


def _basis(d: int) -> np.ndarray:
    return np.eye(d, dtype=complex)


def _sup(d: int, i: int, j: int, sign: int = 1) -> np.ndarray:
    v = np.zeros(d, dtype=complex)
    v[i], v[j] = 1, sign
    return v / np.sqrt(2)


def make_computational(d1: int, d2: int) -> ProductEnsemble:
    A, B = _basis(d1), _basis(d2)
    pairs = [(A[i], B[j]) for i in range(d1) for j in range(d2)]
    return ProductEnsemble.from_pairs(
        pairs, label=f"computational-{d1}x{d2}", distinguishability_class=DistinguishabilityClass.TWO_WAY_MIN_ROUND
    )


def make_e2() -> ProductEnsemble:
    """``{|00>, |01>, |1+>, |1->}``: perfectly distinguishable only if Alice measures first."""
    z = _basis(2)
    pairs = [(z[0], z[0]), (z[0], z[1]), (z[1], _sup(2, 0, 1)), (z[1], _sup(2, 0, 1, -1))]
    return ProductEnsemble.from_pairs(pairs, label="e2", distinguishability_class=DistinguishabilityClass.ONE_WAY_MIN_ROUND)


def qubit_pair(theta: float, phi: float = 0.0) -> tuple[np.ndarray, np.ndarray]:
    """``cos(t/2)|0> + e^{i phi} sin(t/2)|1>`` and its complement
    ``-e^{-i phi} sin(t/2)|0> + cos(t/2)|1>``."""
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    eta = np.array([c, np.exp(1j * phi) * s])
    perp = np.array([-np.exp(-1j * phi) * s, c])
    return eta, perp


def qutrit_triple(theta: float, phi: float) -> np.ndarray:
    """Real orthonormal triple as columns: the unit vector with polar angle
    ``theta`` and azimuth ``phi``, the azimuthal unit vector, and the
    polar unit vector (sign flipped)."""
    st, ct, sp, cp = np.sin(theta), np.cos(theta), np.sin(phi), np.cos(phi)
    eta = [st * cp, st * sp, ct]
    perp = [-sp, cp, 0.0]
    perp2 = [ct * cp, ct * sp, -st]
    return np.array([eta, perp, perp2], dtype=complex).T


def make_arb_2xd(basis1, basis2, label: str = "") -> ProductEnsemble:
    """``{|0> ⊗ basis1[k]} ∪ {|1> ⊗ basis2[k]}`` for two orthonormal qudit bases."""
    first = np.asarray(basis1, dtype=complex)
    d = first.shape[0] if first.ndim == 2 else len(basis1)
    B1 = basis_matrix(basis1, d)
    B2 = basis_matrix(basis2, d)
    z = _basis(2)
    pairs = [(z[0], B1[:, k]) for k in range(d)] + [(z[1], B2[:, k]) for k in range(d)]
    return ProductEnsemble.from_pairs(pairs, label=label or f"arb-2x{d}")


def make_arb_2x2(theta1: float, theta2: float, phi1: float = 0.0, phi2: float = 0.0) -> ProductEnsemble:
    """``{|0 eta1>, |0 eta1^perp>, |1 eta2>, |1 eta2^perp>}`` with qubit kets from :func:`qubit_pair`."""
    b1 = np.column_stack(qubit_pair(theta1, phi1))
    b2 = np.column_stack(qubit_pair(theta2, phi2))
    return make_arb_2xd(b1, b2, label=f"arb-2x2({theta1:.6g},{theta2:.6g},{phi1:.6g},{phi2:.6g})")


def make_arb_2x3(theta1: float, phi1: float, theta2: float, phi2: float) -> ProductEnsemble:
    """Six-state ``2 ⊗ 3`` family built from two real triples (:func:`qutrit_triple`)."""
    return make_arb_2xd(
        qutrit_triple(theta1, phi1),
        qutrit_triple(theta2, phi2),
        label=f"arb-2x3({theta1:.6g},{phi1:.6g},{theta2:.6g},{phi2:.6g})",
    )


def make_nlwe() -> ProductEnsemble:
    """The nine-state 3x3 product basis that LOCC cannot distinguish."""
    e = _basis(3)
    pairs = [
        (e[1], e[1]),
        (e[0], _sup(3, 0, 1)),
        (e[0], _sup(3, 0, 1, -1)),
        (e[2], _sup(3, 1, 2)),
        (e[2], _sup(3, 1, 2, -1)),
        (_sup(3, 1, 2), e[0]),
        (_sup(3, 1, 2, -1), e[0]),
        (_sup(3, 0, 1), e[2]),
        (_sup(3, 0, 1, -1), e[2]),
    ]
    return ProductEnsemble.from_pairs(pairs, label="nlwe", distinguishability_class=DistinguishabilityClass.INDISTINGUISHABLE)


def make_nlwe_minus_fourth() -> ProductEnsemble:
    """NLWE basis without ``|2>|1+2>``; four LOCC rounds suffice when Bob starts."""
    return make_nlwe().without(
        3, label="nlwe-minus-fourth", distinguishability_class=DistinguishabilityClass.FINITE_MULTI_ROUND, rounds=4
    )


def make_tiles() -> ProductEnsemble:
    e = _basis(3)
    stopper = np.ones(3, dtype=complex) / np.sqrt(3)
    pairs = [
        (e[0], _sup(3, 0, 1, -1)),
        (e[2], _sup(3, 1, 2, -1)),
        (_sup(3, 1, 2, -1), e[0]),
        (_sup(3, 0, 1, -1), e[2]),
        (stopper, stopper),
    ]
    return ProductEnsemble.from_pairs(pairs, label="tiles", distinguishability_class=DistinguishabilityClass.INDISTINGUISHABLE)


def make_tiles_minus_stopper() -> ProductEnsemble:
    """Tiles UPB without the uniform stopper state; three LOCC rounds suffice."""
    return make_tiles().without(
        4, label="tiles-minus-stopper", distinguishability_class=DistinguishabilityClass.FINITE_MULTI_ROUND, rounds=3
    )


def pyramid_vectors() -> np.ndarray:
    """The five real qutrit vectors of the Pyramid UPB (rows); ``v_i ⊥ v_{i±2}``."""
    h = np.sqrt(1 + np.sqrt(5)) / 2
    norm = 2 / np.sqrt(5 + np.sqrt(5))
    ang = 2 * np.pi * np.arange(5) / 5
    return norm * np.column_stack([np.cos(ang), np.sin(ang), np.full(5, h)]).astype(complex)


def make_pyramid() -> ProductEnsemble:
    v = pyramid_vectors()
    pairs = [(v[i], v[(2 * i) % 5]) for i in range(5)]
    return ProductEnsemble.from_pairs(pairs, label="pyramid", distinguishability_class=DistinguishabilityClass.INDISTINGUISHABLE)


def make_saturated_complex_2x2() -> ProductEnsemble:
    """Complex two-qubit family member with eta1=(1, i)/sqrt2 and eta2=(cos pi/8, i sin pi/8)."""
    e = make_arb_2x2(np.pi / 2, np.pi / 4, np.pi / 2, np.pi / 2)
    return ProductEnsemble(
        e.alice,
        e.bob,
        label="complex-2x2-saturated",
        distinguishability_class=DistinguishabilityClass.ONE_WAY_MIN_ROUND,
    )


NAMED_ENSEMBLES = {
    "e1": lambda: make_computational(2, 2),
    "e2": make_e2,
    "computational-2x3": lambda: make_computational(2, 3),
    "computational-3x3": lambda: make_computational(3, 3),
    "nlwe": make_nlwe,
    "nlwe-minus-fourth": make_nlwe_minus_fourth,
    "tiles": make_tiles,
    "tiles-minus-stopper": make_tiles_minus_stopper,
    "pyramid": make_pyramid,
    "complex-2x2-saturated": make_saturated_complex_2x2,
}


def named_ensemble(name: str) -> ProductEnsemble:
    try:
        factory = NAMED_ENSEMBLES[name.lower()]
    except KeyError:
        known = ", ".join(sorted(NAMED_ENSEMBLES))
        raise KeyError(f"unknown ensemble {name!r}; known names: {known}") from None
    return factory()


def superposed_state(e: ProductEnsemble) -> np.ndarray:
    """Equal-weight superposition ``(1/sqrt N) sum_i psi_i ⊗ phi_i`` (unit norm by orthogonality)."""
    return e.product_states().sum(axis=0) / np.sqrt(len(e))


class NotTwoBlockError(ValueError):
    """Raised for ensembles that are not of the form ``{|0> ⊗ B1} ∪ {|1> ⊗ B2}``."""


def two_block_bases(e: ProductEnsemble, tol: float = 1e-9) -> tuple[np.ndarray, np.ndarray]:
    """Split a ``2 ⊗ d`` two-block ensemble into Bob's two bases.

    Returns matrices whose columns are Bob's kets paired with Alice's
    ``|0>`` and ``|1>``, in ensemble order. A global phase on Alice's ket
    is moved onto Bob's.
    """
    if e.d1 != 2:
        raise NotTwoBlockError(f"two-block ensembles need a qubit on Alice's side, got d1={e.d1}")
    d = e.d2
    if len(e) != 2 * d:
        raise NotTwoBlockError(f"two-block ensembles in 2x{d} have {2 * d} members, got {len(e)}")
    blocks: tuple[list, list] = ([], [])
    for a, b in e.states:
        k = int(np.argmax(np.abs(a)))
        if abs(abs(a[k]) - 1) > tol:
            raise NotTwoBlockError("Alice's kets must be computational basis states")
        blocks[k].append(b * (a[k] / abs(a[k])))
    if len(blocks[0]) != d or len(blocks[1]) != d:
        raise NotTwoBlockError("Alice's |0> and |1> must each label a full basis of Bob's space")
    return np.column_stack(blocks[0]), np.column_stack(blocks[1])


def is_two_block(e: ProductEnsemble) -> bool:
    try:
        two_block_bases(e)
    except NotTwoBlockError:
        return False
    return True


def relative_local_coherence(e: ProductEnsemble) -> float:
    """Average l1 coherence of Bob's second basis measured in his first basis.

    Zero exactly when the two bases coincide up to order and phases.
    """
    B1, B2 = two_block_bases(e)
    return float(np.mean(l1_pure(B1.conj().T @ B2, axis=0)))
