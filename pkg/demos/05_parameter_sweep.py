"""A small random sweep of the real two-qubit family written to CSV and SVG.

The CLI equivalent is
    enscoh sweep arb2x2-real --samples 40 --seed 1 --out sweep.csv --svg sweep.svg

Run: python demos/05_parameter_sweep.py [output-directory]
"""

import sys
from pathlib import Path

import numpy as np

from enscoh.sweep import Family, SweepSpec, run_sweep, upper_envelope, write_csv, write_svg

out = Path(sys.argv[1] if len(sys.argv) > 1 else ".")
rows = run_sweep(SweepSpec(Family.ARB2X2_REAL, 40, seed=1))
write_csv(rows, out / "sweep.csv")
write_svg(rows, out / "sweep.svg", title="real 2x2 family")

cr = np.array([r["c_r"] for r in rows])
p = np.array([r["p_succ"] for r in rows])
m = np.array([r["mec_n_l1"] for r in rows])
print("rows:", len(rows))
print("P_succ envelope over C_r bins:", np.round(upper_envelope(cr, p, bins=5), 4))
print("corr(MEC^n, P_succ):", round(float(np.corrcoef(m, p)[0, 1]), 4))
