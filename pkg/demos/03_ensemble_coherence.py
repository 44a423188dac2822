"""Total local coherence, minimum ensemble coherence (MEC) and coherence
deficit (CD) for the named ensembles.

The 3x3 ensembles take a few seconds each.

Run: python demos/03_ensemble_coherence.py
"""

from enscoh import mec
from enscoh.ensembles import NAMED_ENSEMBLES, named_ensemble

print(f"{'ensemble':<20} {'tau':>9} {'MEC':>9} {'MEC^n':>9} {'CD':>9}")
for name in NAMED_ENSEMBLES:
    r = mec(named_ensemble(name), "l1")
    print(f"{name:<20} {r.tau:9.4f} {r.mec:9.4f} {r.mec_normalized:9.4f} {r.deficit:9.4f}")

# The relative-entropy variant of the same quantities.
r = mec(named_ensemble("e2"), "rel")
print("\ne2 with relative entropy: tau", round(r.tau, 4), "MEC", round(r.mec, 4))
