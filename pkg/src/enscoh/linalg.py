"""Pure-state and operator helpers on finite-dimensional complex spaces.

Kets are 1-D complex numpy arrays, operators and density matrices are
2-D square complex arrays. A basis is given either as a sequence of kets
or as a matrix whose columns are the basis vectors.
"""

from __future__ import annotations

from typing import Sequence, Union

import numpy as np

ATOL = 1e-10
SPECTRAL_ATOL = 1e-8

BasisLike = Union[np.ndarray, Sequence[np.ndarray]]


def as_ket(amplitudes, normalize: bool = False) -> np.ndarray:
    """Return ``amplitudes`` as a complex ket, checking its norm.

    With ``normalize=True`` the vector is rescaled to unit norm instead.
    """
    k = np.asarray(amplitudes, dtype=complex).reshape(-1)
    if k.size < 2:
        raise ValueError(f"a ket needs dimension >= 2, got {k.size}")
    norm = np.linalg.norm(k)
    if normalize:
        if norm == 0:
            raise ValueError("cannot normalize the zero vector")
        return k / norm
    if abs(norm - 1.0) > ATOL:
        raise ValueError(f"ket is not normalized (norm={norm!r})")
    return k


def basis_matrix(basis: BasisLike | None, dim: int) -> np.ndarray:
    """Stack ``basis`` into a ``dim x dim`` matrix with the vectors as columns.

    ``None`` stands for the computational basis. Raises ``ValueError`` if
    the vectors are not an orthonormal basis of the space.
    """
    if basis is None:
        return np.eye(dim, dtype=complex)
    if isinstance(basis, np.ndarray) and basis.ndim == 2:
        B = basis.astype(complex)
    else:
        B = np.column_stack([np.asarray(b, dtype=complex).reshape(-1) for b in basis])
    if B.shape != (dim, dim):
        raise ValueError(f"basis of shape {B.shape} does not span a {dim}-dimensional space")
    if not np.allclose(B.conj().T @ B, np.eye(dim), atol=ATOL, rtol=0):
        raise ValueError("basis is not orthonormal")
    return B


def tensor_product(a, b) -> np.ndarray:
    """Kronecker product ``a ⊗ b``; entry ``i*len(b)+j`` is ``a[i]*b[j]``."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def inner_product(a, b) -> complex:
    """Return ``<a|b>``, conjugating the first argument."""
    a = np.asarray(a, dtype=complex).reshape(-1)
    b = np.asarray(b, dtype=complex).reshape(-1)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.size} vs {b.size}")
    return complex(np.vdot(a, b))


def density_matrix(ket) -> np.ndarray:
    k = np.asarray(ket, dtype=complex).reshape(-1)
    return np.outer(k, k.conj())


def is_density_matrix(rho, tol: float = ATOL) -> bool:
    rho = np.asarray(rho)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        return False
    if not np.allclose(rho, rho.conj().T, atol=tol, rtol=0):
        return False
    if abs(np.trace(rho) - 1) > tol:
        return False
    return bool(np.linalg.eigvalsh(rho).min() >= -tol)


def is_unitary(U, tol: float = ATOL) -> bool:
    U = np.asarray(U)
    if U.ndim != 2 or U.shape[0] != U.shape[1]:
        return False
    return bool(np.allclose(U.conj().T @ U, np.eye(U.shape[0]), atol=tol, rtol=0))


def as_density_matrix(state) -> np.ndarray:
    """Promote a ket to a projector; square matrices pass through."""
    s = np.asarray(state, dtype=complex)
    if s.ndim == 1:
        return density_matrix(s)
    if s.ndim == 2 and s.shape[0] == s.shape[1]:
        return s
    raise ValueError(f"expected a ket or a square matrix, got shape {s.shape}")


def dephase(rho, basis: BasisLike | None = None) -> np.ndarray:
    """Remove the off-diagonal part of ``rho`` in ``basis``.

    Returns ``sum_k |k><k| rho |k><k|`` in the original coordinates.
    """
    rho = as_density_matrix(rho)
    B = basis_matrix(basis, rho.shape[0])
    populations = np.real(np.einsum("ik,ij,jk->k", B.conj(), rho, B))
    return (B * populations) @ B.conj().T


def von_neumann_entropy(rho) -> float:
    """Entropy ``-Tr(rho log2 rho)`` in bits, with ``0 log 0 = 0``."""
    rho = as_density_matrix(rho)
    w = np.linalg.eigvalsh(rho)
    w = np.clip(w, 0.0, None)
    w = w[w > 0]
    return float(max(0.0, -np.sum(w * np.log2(w))))


def apply_unitary(U, k) -> np.ndarray:
    U = np.asarray(U, dtype=complex)
    k = np.asarray(k, dtype=complex).reshape(-1)
    if U.ndim != 2 or U.shape != (k.size, k.size):
        raise ValueError(f"operator of shape {U.shape} cannot act on a ket of dimension {k.size}")
    return U @ k


def is_orthonormal_set(kets: Sequence, tol: float = ATOL) -> bool:
    """True if every ket has unit norm and distinct kets are orthogonal."""
    K = np.column_stack([np.asarray(k, dtype=complex).reshape(-1) for k in kets])
    G = K.conj().T @ K
    return bool(np.all(np.abs(G - np.eye(G.shape[0])) <= tol))
