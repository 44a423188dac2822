"""Nelder-Mead simplex search run on many starting points at once.

All simplices advance in lock-step so that the objective is called on
whole batches of points; each simplex keeps its own evaluation count and
stopping state. Uses the dimension-adaptive coefficients of Gao and Han
(2012), which behave better than the classic ones beyond a few
dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

BatchObjective = Callable[[np.ndarray], np.ndarray]


@dataclass
class BatchResult:
    x: np.ndarray  # (R, n) best vertex of every simplex
    fun: np.ndarray  # (R,)
    nfev: np.ndarray  # (R,)
    converged: np.ndarray  # (R,) bool


def _coefficients(n: int) -> tuple[float, float, float, float]:
    if n <= 1:
        return 1.0, 2.0, 0.5, 0.5
    return 1.0, 1.0 + 2.0 / n, 0.75 - 1.0 / (2.0 * n), 1.0 - 1.0 / n


def batch_nelder_mead(
    fun: BatchObjective,
    x0: np.ndarray,
    step: float = 0.5,
    max_evals: int | np.ndarray = 20000,
    xatol: float = 1e-10,
    fatol: float = 1e-12,
) -> BatchResult:
    """Minimize ``fun`` from every row of ``x0`` simultaneously.

    ``fun`` maps an ``(k, n)`` array to ``k`` objective values. The
    initial simplex around each start adds ``step`` to one coordinate
    at a time. A simplex stops once both its vertex spread and its
    value spread fall below ``xatol`` and ``fatol``, or once it has used
    ``max_evals`` evaluations (a scalar or one budget per start).
    """
    x0 = np.atleast_2d(np.asarray(x0, dtype=float))
    R, n = x0.shape
    alpha, gamma, rho, sigma = _coefficients(n)

    sim = np.repeat(x0[:, None, :], n + 1, axis=1)
    sim[:, 1:, :] += step * np.eye(n)[None, :, :]
    fs = np.asarray(fun(sim.reshape(-1, n)), dtype=float).reshape(R, n + 1)
    nfev = np.full(R, n + 1)
    active = np.ones(R, dtype=bool)
    converged = np.zeros(R, dtype=bool)
    rows = np.arange(R)

    while True:
        order = np.argsort(fs, axis=1, kind="stable")
        sim = sim[rows[:, None], order]
        fs = fs[rows[:, None], order]

        xspread = np.abs(sim[:, 1:, :] - sim[:, :1, :]).max(axis=(1, 2))
        fspread = fs[:, -1] - fs[:, 0]
        done = (xspread <= xatol) & (fspread <= fatol)
        converged |= done & active
        active &= ~done & (nfev < max_evals)
        if not active.any():
            break

        idx = np.flatnonzero(active)
        S = sim[idx]
        F = fs[idx]
        k = len(idx)
        centroid = S[:, :-1, :].mean(axis=1)
        direction = centroid - S[:, -1, :]
        # reflection, expansion, outside and inside contraction in one batch;
        # only the points the classic sequence would visit are counted
        coeff = np.array([alpha, alpha * gamma, alpha * rho, -rho])
        trial = centroid[None] + coeff[:, None, None] * direction[None]
        ft = np.asarray(fun(trial.reshape(-1, n)), dtype=float).reshape(4, k)
        fr = ft[0]

        best_f, second_worst_f, worst_f = F[:, 0], F[:, -2], F[:, -1]
        expand = fr < best_f
        accept_r = (fr >= best_f) & (fr < second_worst_f)
        outside = (fr >= second_worst_f) & (fr < worst_f)
        inside = fr >= worst_f
        nfev[idx] += np.where(accept_r, 1, 2)

        new_x = trial[0].copy()
        new_f = fr.copy()
        use_e = expand & (ft[1] < fr)
        ok_out = outside & (ft[2] <= fr)
        ok_in = inside & (ft[3] < worst_f)
        for sel, t in ((use_e, 1), (ok_out, 2), (ok_in, 3)):
            new_x[sel] = trial[t][sel]
            new_f[sel] = ft[t][sel]
        shrink = (outside & ~ok_out) | (inside & ~ok_in)

        keep = ~shrink
        S[keep, -1, :] = new_x[keep]
        F[keep, -1] = new_f[keep]
        if shrink.any():
            Ss = S[shrink]
            Ss[:, 1:, :] = Ss[:, :1, :] + sigma * (Ss[:, 1:, :] - Ss[:, :1, :])
            m = Ss.shape[0]
            F[shrink, 1:] = np.asarray(fun(Ss[:, 1:, :].reshape(-1, n)), dtype=float).reshape(m, n)
            S[shrink] = Ss
            nfev[idx[shrink]] += n
        sim[idx] = S
        fs[idx] = F

    return BatchResult(x=sim[:, 0, :].copy(), fun=fs[:, 0].copy(), nfev=nfev, converged=converged)


def multistart_minimize(
    fun: BatchObjective,
    starts: np.ndarray,
    max_evals: int = 20000,
    steps: tuple[float, ...] = (0.5, 0.05, 0.002),
    xatol: float = 1e-10,
    fatol: float = 1e-13,
    coarse_tol: float = 1e-6,
) -> BatchResult:
    """Run :func:`batch_nelder_mead` repeatedly, restarting each simplex
    from its best vertex with a smaller initial step.

    The restarts unstick simplices that collapsed on a ridge or a kink
    before reaching the bottom. Every stage but the last stops at
    ``coarse_tol`` (vertex spread) since a later stage refines the point
    anyway. ``max_evals`` bounds the total per start.
    """
    x = np.atleast_2d(np.asarray(starts, dtype=float))
    total = np.zeros(x.shape[0], dtype=int)
    result = None
    for k, step in enumerate(steps):
        budget = max_evals - total
        if np.all(budget <= x.shape[1] + 1):
            break
        last = k == len(steps) - 1
        xa = xatol if last else max(xatol, coarse_tol)
        fa = fatol if last else max(fatol, coarse_tol**2)
        result = batch_nelder_mead(fun, x, step=step, max_evals=budget, xatol=xa, fatol=fa)
        total += result.nfev
        x = result.x
    if result is None:
        f = np.asarray(fun(x), dtype=float)
        return BatchResult(x=x, fun=f, nfev=np.ones(len(f), dtype=int), converged=np.zeros(len(f), dtype=bool))
    return BatchResult(x=result.x, fun=result.fun, nfev=total, converged=result.converged)
