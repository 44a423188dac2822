"""Discriminating two-block 2 x d ensembles when Bob measures first.

Bob's outcome selects a pair of states that Alice then separates with a
computational-basis measurement.

Run: python demos/04_one_way_discrimination.py
"""

import numpy as np

from enscoh import brute_force_oracle, make_arb_2x2, make_arb_2x3, relative_local_coherence, success_probability
from enscoh.ensembles import make_e2

res = success_probability(make_e2())
print("e2: pairing", res.config.pairing, " worst case", round(res.p_succ_worst, 6))
print("    cos^2(pi/8) =", round(np.cos(np.pi / 8) ** 2, 6))
print("projector directions:\n", np.round(res.projectors.directions, 4))

# For the real two-qubit family the success probability depends only on the angle between the bases.
for t2 in (0.0, 0.4, 0.8, 1.2, np.pi / 2):
    e = make_arb_2x2(0.0, t2)
    p = success_probability(e).p_succ_worst
    print(f"theta2={t2:.3f}  C_r={relative_local_coherence(e):.4f}  P_succ={p:.6f}  cos^2(dt/4)={np.cos(t2 / 4) ** 2:.6f}")

# The grid oracle enumerates measurement bases and keeps the best worst case directly.
# The search maximizes the summed overlaps instead, so for qutrits the oracle can sit
# a little above it.
e = make_arb_2x3(0.6, 0.3, 1.4, 1.1)
print("2x3 search", round(success_probability(e).p_succ_worst, 5), " grid", round(brute_force_oracle(e, grid_step=3e-2), 5))
