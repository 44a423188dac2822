"""Givens-rotation parameterization of unitaries.

A vector of d*d real numbers maps onto U(d); every unitary has a
preimage, which params_from_unitary recovers.

Run: python demos/02_local_unitaries.py
"""

import numpy as np

from enscoh import params_from_unitary, unitary_from_params

rng = np.random.default_rng(7)
p = rng.uniform(-np.pi, np.pi, 9)
U = unitary_from_params(p)
print("U^dagger U = I:", np.allclose(U.conj().T @ U, np.eye(3)))

# Start from an arbitrary unitary (QR of a complex Gaussian matrix) and go back and forth.
z = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
V, _ = np.linalg.qr(z)
q = params_from_unitary(V)
print("round-trip error:", float(np.abs(unitary_from_params(q) - V).max()))

# The zero vector is the identity; a quarter-turn in the first slot swaps a qubit basis.
print(np.round(unitary_from_params(np.zeros(4)), 3))
print(np.round(unitary_from_params([np.pi / 2, 0, 0, 0]), 3))
