"""Dyadic linear-interpolation refinements of Jensen- and Young-type bounds.

Scalar families live in :mod:`dyadicref.young` on top of the weight and
interpolation machinery in :mod:`dyadicref.dyadic`; the matrix analogues
over Hermitian positive-definite matrices live in :mod:`dyadicref.matkit`
and :mod:`dyadicref.matineq`.  :mod:`dyadicref.harness` drives randomized
verification sweeps, exposed on the command line as ``dyadicref``.
"""

from .dyadic import (
    MAX_DEPTH,
    DyadicCoord,
    cell_index,
    correction_sum,
    delta,
    jensen_refined,
    node_cached,
    phi,
    piecewise_check,
    r_closed,
    r_recursive,
)
from .young import (
    BoundChainReport,
    YoungInstance,
    best_constant_search,
    d_bounds,
    d_func,
    dragomir_bounds,
    dragomir_coeff,
    g_nk,
    g_nk_diff,
    kantorovich_K,
    kantorovich_bounds,
    minculete_bounds,
    specht,
    specht_bounds,
    young_lower,
    young_upper_chain,
)
from .matkit import (
    SCHATTEN_1,
    SCHATTEN_2,
    SCHATTEN_INF,
    DimensionMismatchError,
    HermitianPD,
    NormKind,
    NotHermitianError,
    NotPositiveDefiniteError,
    abs_power_norm,
    calculus,
    decompose,
    frac_power,
    heinz,
    ky_fan,
    loewner_leq,
    matrix_from_json,
    matrix_to_json,
    nabla,
    sharp,
    sharp_f,
    ui_norm,
)
from .matineq import (
    G_nk,
    GeometricPair,
    MatrixChainReport,
    check_cs_refined,
    check_d_matrix,
    check_geo_mean_refined,
    check_heinz_refined,
    check_inverse_mean,
    check_norm_heinz,
    check_symmetric_power,
)
from .generate import gen_general, gen_pd, gen_scalar, gen_scalar_batch, trial_seed
from .harness import SuiteConfig, run_matrix_suite, run_scalar_suite, run_suite

__version__ = "0.1.0"
