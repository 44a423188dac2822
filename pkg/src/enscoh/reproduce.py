"""Table of published reference values recomputed with the default optimizer."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .coherence import CoherenceMeasure
from .ensemble_coherence import CoherenceReport, OptimizerConfig, mec
from .ensembles import named_ensemble, two_block_bases


@dataclass(frozen=True)
class ReferenceValue:
    name: str
    expected: float
    tol: float
    compute: Callable[[OptimizerConfig], float]


@dataclass(frozen=True)
class ReproducedValue:
    name: str
    expected: float
    actual: float
    tol: float

    @property
    def passed(self) -> bool:
        return abs(self.actual - self.expected) <= self.tol


@lru_cache(maxsize=64)
def _report(name: str, cfg: OptimizerConfig) -> CoherenceReport:
    return mec(named_ensemble(name), CoherenceMeasure.L1, cfg)


def _mec(name):
    return lambda cfg: _report(name, cfg).mec


def _mec_n(name):
    return lambda cfg: _report(name, cfg).mec_normalized


def _cd(name):
    return lambda cfg: _report(name, cfg).deficit


def _saturated_overlap(cfg):
    B1, B2 = two_block_bases(named_ensemble("complex-2x2-saturated"))
    return float(abs(np.vdot(B1[:, 0], B2[:, 0])))


REFERENCE_VALUES = (
    ReferenceValue("MEC_l1(E1)", 3.0, 1e-9, _mec("e1")),
    ReferenceValue("MEC_l1(E2)", 1.914, 5e-3, _mec("e2")),
    ReferenceValue("MEC^n_l1(E2)", 0.638, 2e-3, _mec_n("e2")),
    ReferenceValue("MEC^n_l1(NLWE)", 0.491, 1e-2, _mec_n("nlwe")),
    ReferenceValue("MEC^n_l1(Tiles)", 0.772, 1e-2, _mec_n("tiles")),
    ReferenceValue("MEC^n_l1(NLWE-4th)", 0.567, 1e-2, _mec_n("nlwe-minus-fourth")),
    ReferenceValue("MEC^n_l1(Tiles-stopper)", 0.875, 1e-2, _mec_n("tiles-minus-stopper")),
    ReferenceValue("CD_l1(NLWE)", 4.076, 2e-2, _cd("nlwe")),
    ReferenceValue("CD_l1(Tiles)", 1.823, 2e-2, _cd("tiles")),
    ReferenceValue("MEC_l1(Pyramid)", 7.055, 2e-2, _mec("pyramid")),
    ReferenceValue("CD_l1(Pyramid)", 1.197, 2e-2, _cd("pyramid")),
    ReferenceValue("|<eta1|eta2>|(complex-2x2-saturated)", 0.92388, 1e-5, _saturated_overlap),
)


def reproduce(cfg: OptimizerConfig | None = None, names=None) -> list[ReproducedValue]:
    cfg = cfg or OptimizerConfig()
    rows = []
    for ref in REFERENCE_VALUES:
        if names is not None and ref.name not in names:
            continue
        rows.append(ReproducedValue(ref.name, ref.expected, float(ref.compute(cfg)), ref.tol))
    return rows


def format_table(rows: list[ReproducedValue]) -> str:
    width = max(len(r.name) for r in rows)
    lines = [f"{'item':<{width}}  {'expected':>10}  {'actual':>10}  {'tol':>8}  result"]
    for r in rows:
        lines.append(
            f"{r.name:<{width}}  {r.expected:>10.6g}  {r.actual:>10.6g}  {r.tol:>8.1g}  {'PASS' if r.passed else 'FAIL'}"
        )
    return "\n".join(lines)
