"""One-way LOCC discrimination of two-block ``2 ⊗ d`` ensembles when Bob
has to measure first.

Bob measures a rank-one projective measurement, tells Alice the
outcome, and Alice measures in the computational basis. Each of Bob's
outcomes ``k`` is read as the reduced set ``{|0 eta1^(i)>, |1 eta2^(j)>}``
that Alice can then resolve perfectly, so the protocol succeeds on a
member exactly when Bob's outcome points to a reduced set containing it.

The pipeline is: pick the configuration (which vector of Bob's second
basis is paired with which vector of the first), then search Bob's
measurement basis maximizing the summed moduli of the ``2d`` overlaps
between each projector direction and the two states of its reduced set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .ensemble_coherence import OptimizerConfig
from .ensembles import ProductEnsemble, two_block_bases
from .linalg import ATOL, is_orthonormal_set
from .neldermead import multistart_minimize
from .unitaries import givens_product, n_coset_params

MAX_CONFIG_DIM = 6


@lru_cache(maxsize=None)
def _permutations(d: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(d))), dtype=int)


@dataclass(frozen=True)
class Configuration:
    """Pairing of Bob's bases: ``eta1^(i)`` is adjacent to ``eta2^(pairing[i])``."""

    d: int
    pairing: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.pairing) != list(range(self.d)):
            raise ValueError(f"pairing {self.pairing} is not a permutation of range({self.d})")


@dataclass(frozen=True)
class ProjectorSet:
    d: int
    directions: np.ndarray  # (d, d), column k is the k-th projector direction

    def __post_init__(self):
        if not is_orthonormal_set(list(self.directions.T), tol=ATOL):
            raise ValueError("projector directions are not orthonormal")

    def projectors(self) -> list[np.ndarray]:
        return [np.outer(f, f.conj()) for f in self.directions.T]


@dataclass(frozen=True)
class DiscriminationResult:
    config: Configuration
    projectors: ProjectorSet
    p_succ_worst: float
    p_succ_avg: float
    reduced_sets: dict = field(default_factory=dict)
    overlaps: np.ndarray = field(default=None, repr=False)  # (2, d): |<f_k|eta1>|, |<f_k|eta2>| per projector

    def reduced_set_label(self, k: int) -> int:
        """Index ``S_n`` (1-based, ``n = i*d + j + 1``) of the set certified by projector ``k``."""
        i, j = self.reduced_sets[k]
        return i * self.config.d + j + 1


def find_configuration(e: ProductEnsemble) -> Configuration:
    """Pairing maximizing ``sum_i |<eta1^(i)|eta2^(pairing[i])>|``.

    Searches all ``d!`` pairings; ties go to the lexicographically first.
    """
    B1, B2 = two_block_bases(e)
    d = B1.shape[0]
    if d > MAX_CONFIG_DIM:
        raise ValueError(f"configuration search is limited to d <= {MAX_CONFIG_DIM}")
    O = np.abs(B1.conj().T @ B2)
    perms = _permutations(d)
    scores = O[np.arange(d), perms].sum(axis=1)
    best = 0
    for k in range(1, len(perms)):
        if scores[k] > scores[best] + 1e-12:
            best = k
    return Configuration(d, tuple(int(p) for p in perms[best]))


def _adjacent_targets(e: ProductEnsemble, c: Configuration) -> np.ndarray:
    B1, B2 = two_block_bases(e)
    if c.d != B1.shape[0]:
        raise ValueError(f"configuration for d={c.d} does not fit a 2x{B1.shape[0]} ensemble")
    return np.concatenate([B1, B2[:, list(c.pairing)]], axis=1)


def _pair_overlaps(W: np.ndarray, d: int) -> np.ndarray:
    """Moduli ``M[..., k, i] = |<f_k|eta1^(i)>| + |<f_k|eta2^(pi(i))>|``."""
    A = np.abs(W)
    return A[..., :d] + A[..., d:]


def optimize_projectors(e: ProductEnsemble, c: Configuration, cfg: OptimizerConfig | None = None) -> DiscriminationResult:
    """Search Bob's measurement basis for configuration ``c``.

    The search maximizes the sum of the ``2d`` adjacent overlaps (each
    projector direction with the two states of its reduced set, the
    direction-to-set assignment chosen best for every candidate basis).
    Reports the squared smallest adjacent overlap at the optimum as the
    worst-case success probability and the mean of the squared overlaps
    as the average one.
    """
    cfg = cfg or OptimizerConfig()
    E = _adjacent_targets(e, c)
    d = c.d
    perms = _permutations(d)
    cols = np.arange(d)

    def objective(P):
        M = _pair_overlaps(givens_product(P, d, E), d)
        return -M[..., perms, cols].sum(axis=-1).max(axis=-1)

    rng = np.random.default_rng(np.random.SeedSequence(cfg.seed).spawn(3)[2])
    starts = rng.uniform(-np.pi, np.pi, size=(cfg.restarts_for(2 * d), n_coset_params(d)))
    res = multistart_minimize(objective, starts, max_evals=cfg.max_evals)

    best = float(res.fun.min())
    tie = np.flatnonzero(res.fun <= best + cfg.f_tol * (1 + abs(best)))
    candidates = []
    for t in tie:
        W = givens_product(res.x[t], d, E)
        M = _pair_overlaps(W, d)
        sigma = perms[int(np.argmax(M[perms, cols].sum(axis=-1)))]
        A = np.abs(W)
        o1 = A[sigma, cols]
        o2 = A[sigma, d + cols]
        worst = float(min(o1.min(), o2.min()) ** 2)
        candidates.append((-worst, tuple(res.x[t]), sigma, o1, o2, t))
    candidates.sort(key=lambda c_: (c_[0], c_[1]))
    neg_worst, _, sigma, o1, o2, t = candidates[0]

    U = givens_product(res.x[t], d)
    F = U.conj().T[:, sigma]
    squares = np.concatenate([o1, o2]) ** 2
    return DiscriminationResult(
        config=c,
        projectors=ProjectorSet(d, F),
        p_succ_worst=-neg_worst,
        p_succ_avg=float(squares.mean()),
        reduced_sets={i: (i, c.pairing[i]) for i in range(d)},
        overlaps=np.vstack([o1, o2]),
    )


def success_probability(e: ProductEnsemble, cfg: OptimizerConfig | None = None) -> DiscriminationResult:
    """Configuration search followed by the projector search."""
    return optimize_projectors(e, find_configuration(e), cfg)


def _grid(lo: float, hi: float, step: float, endpoint: bool) -> np.ndarray:
    n = int(np.ceil((hi - lo) / step))
    return np.linspace(lo, hi, n + 1 if endpoint else n, endpoint=endpoint)


def _best_worst_case(D: list[np.ndarray], d: int) -> float:
    """Max over grid points, pairings and assignments of the smallest adjacent overlap.

    ``D[k]`` has shape ``(n, 2d)``: moduli of direction ``k`` against
    ``eta1^(0..d-1)`` then ``eta2^(0..d-1)``.
    """
    perms = _permutations(d)
    # Q[k][i][j]: min(|<f_k|eta1^i>|, |<f_k|eta2^j>|)
    Q = [[[np.minimum(D[k][:, i], D[k][:, d + j]) for j in range(d)] for i in range(d)] for k in range(d)]
    best = 0.0
    for pairing in perms:
        for sigma in perms:
            m = Q[sigma[0]][0][pairing[0]]
            for i in range(1, d):
                m = np.minimum(m, Q[sigma[i]][i][pairing[i]])
            best = max(best, float(m.max()))
    return best


def brute_force_oracle(
    e: ProductEnsemble, grid_step: float = 1e-3, phase_step: float | None = None, assume_real: bool | None = None
) -> float:
    """Best worst-case success probability over a grid of Bob's measurement bases.

    Independent of :func:`success_probability`: every configuration and
    every assignment of directions to reduced sets is enumerated, and the
    score is the worst-case one. Bases are parameterized as

    * ``d=2``: ``f = (cos t/2, e^{ip} sin t/2)`` and its complement;
    * ``d=3``: ``f1 = (sin th cos ph, sin th sin ph e^{ia}, cos th e^{ib})``,
      ``g = (-sin ph, e^{ia} cos ph, 0)``,
      ``h = (cos th cos ph, cos th sin ph e^{ia}, -sin th e^{ib})``, with
      ``g, h`` rotated into each other by an angle ``chi`` and phase
      ``xi`` so that every orthonormal basis is reachable.

    For real ensembles the phases are held at zero (a real optimum
    exists; ``assume_real=False`` grids them anyway); otherwise they are gridded with ``phase_step``, which makes
    the ``d=3`` case a six-dimensional grid and only practical with a
    coarse step.
    """
    B1, B2 = two_block_bases(e)
    d = B1.shape[0]
    if d not in (2, 3):
        raise NotImplementedError("the grid oracle supports 2x2 and 2x3 ensembles only")
    E = np.concatenate([B1, B2], axis=1)  # (d, 2d)
    real = e.is_real() if assume_real is None else assume_real
    phase_step = grid_step if phase_step is None else phase_step
    phases = np.zeros(1) if real else _grid(0.0, 2 * np.pi, phase_step, endpoint=False)

    if d == 2:
        ts = _grid(0.0, 2 * np.pi, grid_step, endpoint=False) if real else _grid(0.0, np.pi, grid_step, endpoint=True)
        best = 0.0
        for p in phases:
            c = np.cos(ts / 2)[:, None]
            s = np.sin(ts / 2)[:, None]
            ep = np.exp(1j * p)
            f = np.abs(c * E[0] + np.conj(ep) * s * E[1])
            g = np.abs(-ep * s * E[0] + c * E[1])
            best = max(best, _best_worst_case([f, g], 2))
        return best**2

    th = _grid(0.0, np.pi, grid_step, endpoint=True)
    ph = _grid(0.0, 2 * np.pi, grid_step, endpoint=False)
    chis = _grid(0.0, np.pi, grid_step, endpoint=False)
    T, P = np.meshgrid(th, ph, indexing="ij")
    st, ct = np.sin(T).ravel(), np.cos(T).ravel()
    sp, cp = np.sin(P).ravel(), np.cos(P).ravel()
    best = 0.0
    for a in phases:
        for b in phases:
            ea, eb = np.exp(1j * a), np.exp(1j * b)
            f1 = np.stack([st * cp, st * sp * ea, ct * eb], axis=-1)
            g = np.stack([-sp, ea * cp, np.zeros_like(sp)], axis=-1)
            h = np.stack([ct * cp, ct * sp * ea, -st * eb], axis=-1)
            F1 = np.abs(f1.conj() @ E)
            G = g.conj() @ E
            H = h.conj() @ E
            for xi in phases:
                ex = np.exp(1j * xi)
                for chi in chis:
                    cc, sc = np.cos(chi), np.sin(chi)
                    # f2 = cc g + ex sc h, f3 = -conj(ex) sc g + cc h
                    F2 = np.abs(cc * G + np.conj(ex) * sc * H)
                    F3 = np.abs(-ex * sc * G + cc * H)
                    best = max(best, _best_worst_case([F1, F2, F3], 3))
    return best**2
