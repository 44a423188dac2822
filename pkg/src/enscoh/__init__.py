"""Coherence-based quantifiers for orthogonal product-state ensembles.

The package measures how hard a set of orthogonal product states is to
tell apart with local operations and classical communication, using
coherence of a unitarily rotated superposition of the ensemble, and
computes success probabilities of a restricted one-way discrimination
protocol.
"""

from .coherence import CoherenceMeasure, c_l1, c_rel, coherence, max_coherence
from .discrimination import (
    Configuration,
    DiscriminationResult,
    ProjectorSet,
    brute_force_oracle,
    find_configuration,
    optimize_projectors,
    success_probability,
)
from .ensemble_coherence import (
    CoherenceReport,
    OptimizerConfig,
    check_observation1,
    coinciding_bases_maximal,
    mec,
    minimize_tau,
    total_local_coherence,
)
from .ensembles import (
    DistinguishabilityClass,
    ProductEnsemble,
    make_arb_2x2,
    make_arb_2x3,
    make_arb_2xd,
    make_computational,
    make_e2,
    make_nlwe,
    make_nlwe_minus_fourth,
    make_pyramid,
    make_tiles,
    make_tiles_minus_stopper,
    relative_local_coherence,
    superposed_state,
)
from .linalg import (
    apply_unitary,
    dephase,
    inner_product,
    is_orthonormal_set,
    tensor_product,
    von_neumann_entropy,
)
from .unitaries import params_from_unitary, unitary_from_params

__version__ = "0.1.0"
