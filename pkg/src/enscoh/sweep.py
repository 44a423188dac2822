"""Random parameter sweeps over the two-block ensemble families.

Each row records the family parameters, the relative local coherence,
normalized MEC for both measures, the l1 coherence deficit and the
one-way success probability. Output is a CSV with 9 significant digits
and an optional self-contained SVG scatter plot against ``c_r``.
"""

from __future__ import annotations

import enum
import io
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .coherence import CoherenceMeasure
from .discrimination import success_probability
from .ensemble_coherence import OptimizerConfig, mec
from .ensembles import make_arb_2x2, make_arb_2x3, relative_local_coherence

COLUMNS = ("theta1", "phi1", "theta2", "phi2", "c_r", "mec_n_l1", "mec_n_rel", "cd_l1", "p_succ")
Y_COLUMNS = ("mec_n_l1", "mec_n_rel", "cd_l1", "p_succ")


class Family(enum.Enum):
    ARB2X2_REAL = "arb2x2-real"
    ARB2X2_COMPLEX = "arb2x2-complex"
    ARB2X3_REAL = "arb2x3-real"


@dataclass(frozen=True)
class SweepSpec:
    family: Family
    samples: int
    seed: int = 0
    criterion: str = "worst"

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if self.criterion not in ("worst", "avg"):
            raise ValueError("criterion must be 'worst' or 'avg'")


def sample_parameters(spec: SweepSpec) -> np.ndarray:
    """``(samples, 4)`` array of ``theta1, phi1, theta2, phi2``.

    Angles ``theta`` are uniform on ``[0, pi]`` and ``phi`` on ``[0, 2 pi)``;
    the real two-qubit family has ``phi = 0``.
    """
    rng = np.random.default_rng(spec.seed)
    n = spec.samples
    theta = rng.uniform(0.0, np.pi, size=(n, 2))
    phi = rng.uniform(0.0, 2 * np.pi, size=(n, 2))
    if spec.family is Family.ARB2X2_REAL:
        phi = np.zeros_like(phi)
    return np.column_stack([theta[:, 0], phi[:, 0], theta[:, 1], phi[:, 1]])


def build_ensemble(family: Family, theta1: float, phi1: float, theta2: float, phi2: float):
    if family is Family.ARB2X3_REAL:
        return make_arb_2x3(theta1, phi1, theta2, phi2)
    return make_arb_2x2(theta1, theta2, phi1, phi2)


def sweep_row(family: Family, params: Sequence[float], cfg: OptimizerConfig | None = None, criterion: str = "worst") -> dict:
    cfg = cfg or OptimizerConfig()
    theta1, phi1, theta2, phi2 = (float(p) for p in params)
    e = build_ensemble(family, theta1, phi1, theta2, phi2)
    l1 = mec(e, CoherenceMeasure.L1, cfg)
    rel = mec(e, CoherenceMeasure.REL, cfg)
    disc = success_probability(e, cfg)
    return {
        "theta1": theta1,
        "phi1": phi1,
        "theta2": theta2,
        "phi2": phi2,
        "c_r": relative_local_coherence(e),
        "mec_n_l1": l1.mec_normalized,
        "mec_n_rel": rel.mec_normalized,
        "cd_l1": l1.deficit,
        "p_succ": disc.p_succ_worst if criterion == "worst" else disc.p_succ_avg,
    }


def _row_task(args):
    return sweep_row(*args)


def worker_count() -> int:
    env = os.environ.get("ENSCOH_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def run_sweep(spec: SweepSpec, cfg: OptimizerConfig | None = None, workers: int | None = None) -> list[dict]:
    """Compute every row of ``spec``; rows come back in sample order."""
    cfg = cfg or OptimizerConfig()
    workers = worker_count() if workers is None else workers
    tasks = [(spec.family, p, cfg, spec.criterion) for p in sample_parameters(spec)]
    if workers <= 1 or len(tasks) == 1:
        return [_row_task(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_row_task, tasks, chunksize=max(1, len(tasks) // (4 * workers))))


def format_csv(rows: Sequence[dict]) -> str:
    buf = io.StringIO()
    buf.write(",".join(COLUMNS) + "\n")
    for row in rows:
        buf.write(",".join(f"{row[c]:.9g}" for c in COLUMNS) + "\n")
    return buf.getvalue()


def write_csv(rows: Sequence[dict], path: str | Path) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(format_csv(rows))


def read_csv(path: str | Path) -> list[dict]:
    with open(path) as fh:
        header = fh.readline().strip().split(",")
        return [dict(zip(header, map(float, line.strip().split(",")))) for line in fh if line.strip()]


_COLORS = {"mec_n_l1": "#2ca02c", "mec_n_rel": "#1f77b4", "cd_l1": "#9467bd", "p_succ": "#d62728"}


def format_svg(rows: Sequence[dict], title: str = "", columns: Sequence[str] = Y_COLUMNS) -> str:
    """800x600 scatter plot of ``columns`` against ``c_r``, no external assets."""
    width, height = 800, 600
    left, right, top, bottom = 70, 160, 40, 60
    pw, ph = width - left - right, height - top - bottom
    x = np.array([r["c_r"] for r in rows], dtype=float)
    ys = {c: np.array([r[c] for r in rows], dtype=float) for c in columns}
    xmax = max(float(x.max(initial=0.0)), 1e-12)
    ymax = max(max(float(v.max(initial=0.0)) for v in ys.values()), 1e-12)

    def sx(v):
        return left + pw * v / xmax

    def sy(v):
        return top + ph * (1 - v / ymax)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<text x="{width / 2:.1f}" y="24" text-anchor="middle" font-family="sans-serif" font-size="16">{title}</text>',
        f'<line x1="{left}" y1="{top + ph}" x2="{left + pw}" y2="{top + ph}" stroke="black"/>',
        f'<line x1="{left}" y1="{top}" x2="{left}" y2="{top + ph}" stroke="black"/>',
    ]
    for t in np.linspace(0, 1, 6):
        out.append(
            f'<text x="{sx(t * xmax):.1f}" y="{top + ph + 18}" text-anchor="middle" font-family="sans-serif" font-size="11">{t * xmax:.3g}</text>'
        )
        out.append(
            f'<text x="{left - 8}" y="{sy(t * ymax) + 4:.1f}" text-anchor="end" font-family="sans-serif" font-size="11">{t * ymax:.3g}</text>'
        )
    out.append(
        f'<text x="{left + pw / 2:.1f}" y="{height - 16}" text-anchor="middle" font-family="sans-serif" font-size="13">c_r</text>'
    )
    for k, c in enumerate(columns):
        color = _COLORS.get(c, "black")
        for xv, yv in zip(x, ys[c]):
            out.append(f'<circle cx="{sx(xv):.2f}" cy="{sy(yv):.2f}" r="2.2" fill="{color}" fill-opacity="0.7"/>')
        ly = top + 20 + 22 * k
        out.append(f'<circle cx="{left + pw + 20}" cy="{ly}" r="5" fill="{color}"/>')
        out.append(f'<text x="{left + pw + 32}" y="{ly + 4}" font-family="sans-serif" font-size="12">{c}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_svg(rows: Sequence[dict], path: str | Path, title: str = "") -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(format_svg(rows, title))


def upper_envelope(x: np.ndarray, y: np.ndarray, bins: int = 10) -> np.ndarray:
    """Maximum of ``y`` in each of ``bins`` equal-width bins of ``x`` (NaN for empty bins)."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    edges = np.linspace(x.min(), x.max(), bins + 1)
    idx = np.clip(np.searchsorted(edges, x, side="right") - 1, 0, bins - 1)
    env = np.full(bins, np.nan)
    for b in range(bins):
        sel = idx == b
        if sel.any():
            env[b] = y[sel].max()
    return env
