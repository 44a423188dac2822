"""Coherence of single states under the two measures.

Run: python demos/01_coherence_basics.py
"""

import numpy as np

from enscoh import c_l1, c_rel, dephase, max_coherence

# A qutrit ket with unequal weights on the computational basis.
psi = np.array([0.8, 0.36j, -0.48])
print("ket           l1 =", round(c_l1(psi), 6), " rel =", round(c_rel(psi), 6))

# The uniform superposition saturates both measures: d-1 and log2(d).
uniform = np.ones(3) / np.sqrt(3)
print("uniform       l1 =", round(c_l1(uniform), 6), " rel =", round(c_rel(uniform), 6))
print("maxima        l1 =", max_coherence("l1", 3), " rel =", round(max_coherence("rel", 3), 6))

# Coherence is basis dependent: in a basis containing psi itself it vanishes.
q, _ = np.linalg.qr(np.column_stack([psi, np.eye(3)[:, 1:]]))
basis = q * (np.vdot(q[:, 0], psi) / abs(np.vdot(q[:, 0], psi)))
print("own basis     l1 =", round(c_l1(psi, basis), 12))

# Dephasing removes every off-diagonal term, and with it all coherence.
rho = np.outer(psi, psi.conj())
print("dephased      l1 =", c_l1(dephase(rho)), " rel =", c_rel(dephase(rho)))
