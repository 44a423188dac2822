"""Parameterization of U(d) by complex Givens rotations and diagonal phases.

A parameter vector of length ``d**2`` is laid out as
``[angles (m), rotation phases (m), diagonal phases (d)]`` with
``m = d(d-1)/2``. The unitary is ``diag(exp(i*delta)) @ G_m @ ... @ G_1``
where ``G_k`` rotates the coordinate pair ``(c, r)``, pairs enumerated
column by column (``(0,1), (0,2), ..., (1,2), ...``). Every unitary has
such a factorization, see :func:`params_from_unitary`.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np


@lru_cache(maxsize=None)
def givens_pairs(d: int) -> tuple[tuple[int, int], ...]:
    return tuple((c, r) for c in range(d - 1) for r in range(c + 1, d))


def n_coset_params(d: int) -> int:
    """Number of parameters once the irrelevant left phases are dropped."""
    return d * (d - 1)


def _apply_givens(W: np.ndarray, i: int, j: int, c: np.ndarray, es: np.ndarray) -> None:
    # in-place left multiplication on rows i, j of a (..., d, n) stack; es = e^{i phi} sin(theta)
    wi = W[..., i, :].copy()
    wj = W[..., j, :]
    W[..., i, :] = c * wi - np.conj(es) * wj
    W[..., j, :] = es * wi + c * wj


def givens_product(coset_params: np.ndarray, d: int, target: np.ndarray | None = None) -> np.ndarray:
    """Apply ``G_m ... G_1`` built from ``coset_params`` to ``target``.

    ``coset_params`` has shape ``(..., d*(d-1))`` (angles then phases).
    With ``target=None`` the identity is used and the stacked unitaries
    are returned. Batched over leading axes.
    """
    coset_params = np.asarray(coset_params, dtype=float)
    m = d * (d - 1) // 2
    batch = coset_params.shape[:-1]
    if target is None:
        W = np.broadcast_to(np.eye(d, dtype=complex), batch + (d, d)).copy()
    else:
        W = np.broadcast_to(np.asarray(target, dtype=complex), batch + np.shape(target)[-2:]).copy()
    thetas = coset_params[..., :m, None]
    cs = np.cos(thetas)
    ess = np.sin(thetas) * np.exp(1j * coset_params[..., m : 2 * m, None])
    for k, (i, j) in enumerate(givens_pairs(d)):
        _apply_givens(W, i, j, cs[..., k, :], ess[..., k, :])
    return W


def unitary_from_params(params, d: int | None = None) -> np.ndarray:
    """Map a real vector of length ``d**2`` onto a ``d x d`` unitary.

    The zero vector gives the identity.
    """
    params = np.asarray(params, dtype=float)
    if d is None:
        d = int(round(np.sqrt(params.shape[-1])))
    if params.shape[-1] != d * d:
        raise ValueError(f"expected {d * d} parameters for U({d}), got {params.shape[-1]}")
    if not np.all(np.isfinite(params)):
        raise ValueError("unitary parameters must be finite")
    m = d * (d - 1) // 2
    G = givens_product(params[..., : 2 * m], d)
    phases = np.exp(1j * params[..., 2 * m :])
    return phases[..., :, None] * G


def params_from_unitary(U) -> np.ndarray:
    """Inverse of :func:`unitary_from_params` (one preimage, angles in [0, pi/2])."""
    U = np.asarray(U, dtype=complex)
    d = U.shape[0]
    pairs = givens_pairs(d)
    m = len(pairs)
    thetas = np.zeros(m)
    phis = np.zeros(m)
    W = U.conj().T.copy()
    for k, (c, r) in enumerate(pairs):
        x, y = W[c, c], W[r, c]
        thetas[k] = np.arctan2(abs(y), abs(x))
        if abs(y) > 0:
            phis[k] = (np.angle(y) - np.angle(x)) % (2 * np.pi) - np.pi
        _apply_givens(W, c, r, np.cos(thetas[k]), np.sin(thetas[k]) * np.exp(1j * phis[k]))
    deltas = -np.angle(np.diag(W))
    return np.concatenate([thetas, phis, deltas])
