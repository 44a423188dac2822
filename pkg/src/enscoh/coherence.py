"""l1-norm and relative-entropy coherence with respect to a chosen basis."""

from __future__ import annotations

import enum

import numpy as np

from .linalg import BasisLike, as_density_matrix, basis_matrix, dephase, von_neumann_entropy


class CoherenceMeasure(enum.Enum):
    L1 = "l1"
    REL = "rel"

    @classmethod
    def parse(cls, value) -> "CoherenceMeasure":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown coherence measure {value!r}; use 'l1' or 'rel'") from None


def _in_basis(state, basis: BasisLike | None) -> np.ndarray:
    s = np.asarray(state, dtype=complex)
    B = basis_matrix(basis, s.shape[0])
    if s.ndim == 1:
        return B.conj().T @ s
    return B.conj().T @ s @ B


def l1_pure(amplitudes: np.ndarray, axis: int = -1) -> np.ndarray:
    """l1 coherence of pure states from their amplitudes, ``(sum|a|)^2 - 1``.

    Works on stacks of amplitude vectors along ``axis``; the result is
    clipped at zero to absorb rounding.
    """
    s = np.sum(np.abs(amplitudes), axis=axis)
    return np.maximum(s * s - 1.0, 0.0)


def rel_pure(amplitudes: np.ndarray, axis: int = -1) -> np.ndarray:
    """Shannon entropy (bits) of ``|a|^2``, i.e. relative-entropy coherence of a pure state."""
    p = np.abs(amplitudes) ** 2
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(p > 0, -p * np.log2(np.where(p > 0, p, 1.0)), 0.0)
    return np.maximum(np.sum(terms, axis=axis), 0.0)


def c_l1(state, basis: BasisLike | None = None) -> float:
    """Sum of the moduli of the off-diagonal entries of the state in ``basis``.

    ``state`` may be a ket or a density matrix; ``basis=None`` means the
    computational basis.
    """
    s = _in_basis(state, basis)
    if s.ndim == 1:
        return float(l1_pure(s))
    off = np.abs(s)
    return float(off.sum() - np.trace(off))


def c_rel(state, basis: BasisLike | None = None) -> float:
    """Relative entropy of coherence ``S(dephased) - S(rho)`` in bits."""
    s = _in_basis(state, basis)
    if s.ndim == 1:
        return float(rel_pure(s))
    value = von_neumann_entropy(dephase(s)) - von_neumann_entropy(s)
    return float(max(value, 0.0))


def coherence(state, measure: CoherenceMeasure | str = CoherenceMeasure.L1, basis: BasisLike | None = None) -> float:
    measure = CoherenceMeasure.parse(measure)
    if measure is CoherenceMeasure.L1:
        return c_l1(state, basis)
    return c_rel(state, basis)


def pure_coherence(amplitudes: np.ndarray, measure: CoherenceMeasure, axis: int = -1) -> np.ndarray:
    """Vectorized pure-state coherence in the computational basis."""
    if measure is CoherenceMeasure.L1:
        return l1_pure(amplitudes, axis=axis)
    return rel_pure(amplitudes, axis=axis)


def max_coherence(measure: CoherenceMeasure | str, d: int) -> float:
    """Largest attainable coherence in dimension ``d``: ``d-1`` or ``log2 d``."""
    if d < 2:
        raise ValueError("dimension must be at least 2")
    measure = CoherenceMeasure.parse(measure)
    if measure is CoherenceMeasure.L1:
        return float(d - 1)
    return float(np.log2(d))


def density_path(state, measure: CoherenceMeasure | str, basis: BasisLike | None = None) -> float:
    """Coherence evaluated through the density-matrix route, even for kets."""
    return coherence(as_density_matrix(state), measure, basis)
