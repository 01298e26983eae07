"""Deterministic seeded generation of scalar and matrix test instances.

Randomness comes from a splitmix-style counter stream: draw i of the stream
for seed s is ``mix64(s + (i+1) * GAMMA) / 2**64`` where mix64 is the
standard 64-bit xor-multiply finalizer and GAMMA the golden-ratio
increment.  Draws are addressable by index with no sequential state, so a
trial's substream is just an offset seed and any failing case is
reconstructible from (seed, trial index) alone.

Gaussian matrix material is drawn from numpy generators seeded from the
same stream, which keeps matrix fixtures reproducible per seed as well.
"""

from __future__ import annotations

import numpy as np

from .matkit import MAX_DIM, HermitianPD, hermitian_part
from .young import YoungInstance

__all__ = [
    "mix64",
    "u01",
    "trial_seed",
    "trial_seeds",
    "gen_scalar",
    "gen_scalar_batch",
    "gen_pd",
    "gen_general",
]

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_SEQ = 0xD1B54A32D192ED03
_MUL1 = 0xBF58476D1CE4E5B9
_MUL2 = 0x94D049BB133111EB
_U01 = 2.0 ** -53


def mix64(z: int) -> int:
    """Splitmix64 finalizer on a 64-bit integer."""
    z &= _MASK
    z = ((z ^ (z >> 30)) * _MUL1) & _MASK
    z = ((z ^ (z >> 27)) * _MUL2) & _MASK
    return z ^ (z >> 31)


def _mix64_np(z: np.ndarray) -> np.ndarray:
    z = z.astype(np.uint64)
    with np.errstate(over="ignore"):
        z = (z ^ (z >> np.uint64(30))) * np.uint64(_MUL1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(_MUL2)
    return z ^ (z >> np.uint64(31))


def u01(seed: int, index: int) -> float:
    """Draw ``index`` of the unit-interval stream for ``seed``."""
    x = mix64((seed + (index + 1) * _GAMMA) & _MASK)
    return (x >> 11) * _U01


def _u01_np(seeds: np.ndarray, index: int) -> np.ndarray:
    with np.errstate(over="ignore"):
        x = _mix64_np(seeds + np.uint64(((index + 1) * _GAMMA) & _MASK))
    return (x >> np.uint64(11)).astype(np.float64) * _U01


def trial_seed(seed: int, index: int) -> int:
    """Substream seed for one trial: mix64(seed + (index+1) * SEQ)."""
    return mix64((seed + (index + 1) * _SEQ) & _MASK)


def trial_seeds(seed: int, count: int, start: int = 0) -> np.ndarray:
    idx = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        return _mix64_np(np.uint64(seed & _MASK) + idx * np.uint64(_SEQ))


def gen_scalar(seed: int, range_exp: float = 3.0) -> YoungInstance:
    """Instance with a, b log-uniform in [10^-range_exp, 10^range_exp], v uniform."""
    if not range_exp > 0.0:
        raise ValueError(f"range_exp must be positive, got {range_exp!r}")
    ua, ub, uv = (u01(seed, i) for i in range(3))
    a = 10.0 ** ((2.0 * ua - 1.0) * range_exp)
    b = 10.0 ** ((2.0 * ub - 1.0) * range_exp)
    return YoungInstance(a, b, uv)


def gen_scalar_batch(
    seed: int, trials: int, range_exp: float = 3.0, start: int = 0
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Vector form of gen_scalar over per-trial substream seeds.

    Returns (substream seeds, a, b, v); entry j reproduces
    gen_scalar(trial_seed(seed, start + j), range_exp) exactly.
    """
    if not range_exp > 0.0:
        raise ValueError(f"range_exp must be positive, got {range_exp!r}")
    seeds = trial_seeds(seed, trials, start)
    ua = _u01_np(seeds, 0)
    ub = _u01_np(seeds, 1)
    uv = _u01_np(seeds, 2)
    a = 10.0 ** ((2.0 * ua - 1.0) * range_exp)
    b = 10.0 ** ((2.0 * ub - 1.0) * range_exp)
    return seeds, a, b, uv


def _pd_parts(seed: int, dim: int, cond_max: float, complex_: bool):
    """Unitary factor, planted eigenvalues, and overall scale for gen_pd."""
    rng = np.random.default_rng(mix64(seed))
    G = rng.standard_normal((dim, dim))
    if complex_:
        G = (G + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2.0)
    Q, _ = np.linalg.qr(G)
    lam = cond_max ** rng.uniform(0.0, 1.0, size=dim)
    scale = float(np.exp(rng.uniform(-np.log(2.0), np.log(2.0))))
    return Q, lam * scale


def gen_pd(seed: int, dim: int, cond_max: float, complex_: bool = False) -> HermitianPD:
    """Random positive definite fixture Q diag(lambda) Q*.

    Q comes from the QR factorization of a seeded Gaussian matrix (real or
    complex), lambda is log-uniform with planted ratio at most cond_max, and
    an overall log-uniform scale in [1/2, 2] is applied.
    """
    if dim != int(dim) or not 1 <= dim <= MAX_DIM:
        raise ValueError(f"dim must be an integer in [1, {MAX_DIM}], got {dim!r}")
    if not cond_max >= 1.0:
        raise ValueError(f"cond_max must be >= 1, got {cond_max!r}")
    Q, lam = _pd_parts(seed, int(dim), float(cond_max), complex_)
    A = hermitian_part((Q * lam) @ Q.conj().T)
    return HermitianPD(A)


def gen_general(seed: int, dim: int, complex_: bool = False) -> np.ndarray:
    """Seeded Gaussian square matrix, unit-variance entries."""
    if dim != int(dim) or not 1 <= dim <= MAX_DIM:
        raise ValueError(f"dim must be an integer in [1, {MAX_DIM}], got {dim!r}")
    rng = np.random.default_rng(mix64(seed ^ 0x5851F42D4C957F2D))
    X = rng.standard_normal((dim, dim))
    if complex_:
        X = (X + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2.0)
    return X
