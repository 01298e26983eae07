"""Checkers for the refined matrix inequalities.

Each checker evaluates one theorem's chain on concrete matrices and returns
a MatrixChainReport carrying the evaluated links and one witness per
asserted relation: the smallest eigenvalue of the difference for orderings
in the positive-semidefinite sense, or the signed slack for scalar-valued
norm chains.  Checkers record, they never raise on a violated inequality.

The caching contexts (GeometricPair and the norm contexts) hold the
spectral data shared across a (v, N) sweep over one fixture; the public
checkers build them on demand and accept them as keyword arguments so the
harness can reuse them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .dyadic import DyadicCoord, _check_depth, _check_level, _check_unit, cell_index, r_closed
from .matkit import (
    HermitianPD,
    NormKind,
    _same_dim,
    f_min,
    hermitian_part,
    ui_norm,
    abs_power_norm,
)
from .young import dragomir_coeff

__all__ = [
    "MatrixChainReport",
    "GeometricPair",
    "HeinzNormContext",
    "CSNormContext",
    "SymmetricNormContext",
    "check_geo_mean_refined",
    "G_nk",
    "check_d_matrix",
    "check_heinz_refined",
    "check_norm_heinz",
    "check_cs_refined",
    "check_symmetric_power",
    "check_inverse_mean",
    "CHECKER_NAMES",
]

DEFAULT_PSD_TOL = 1e-8

CHECKER_NAMES = (
    "geo_mean_refined",
    "d_matrix",
    "heinz_refined",
    "norm_heinz",
    "cs_refined",
    "symmetric_power",
    "inverse_mean",
)


@dataclass(frozen=True)
class MatrixChainReport:
    """One theorem instance: links, witnesses, verdict.

    ``witnesses`` has one entry per asserted relation; passed holds iff all
    witnesses are >= -tol_used.  ``extras`` carries informational values
    (recorded, never failing).
    """

    theorem: str
    relation: str
    links: tuple
    witnesses: tuple[float, ...]
    passed: bool
    tol_used: float
    params: dict
    extras: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "relation": self.relation,
            "witnesses": list(self.witnesses),
            "passed": self.passed,
            "params": dict(self.params),
        }


def _min_eig(M: np.ndarray) -> float:
    return float(np.linalg.eigvalsh(hermitian_part(M))[0])


def _scalar_nodes(n: int, v: float) -> tuple[float, float, float]:
    k = int(cell_index(n, v))
    return (
        math.ldexp(k - 1, -n),
        math.ldexp(k, -n),
        math.ldexp(2 * k - 1, -(n + 1)),
    )


class GeometricPair:
    """Spectral caches for an ordered pair (A, B) of positive definite matrices.

    Weighted geometric means, Heinz means, and inverse arithmetic means are
    all sandwiches of functions of the one conjugated middle matrix or plain
    combinations of A and B, so each distinct parameter value costs a single
    pair of small matrix products after construction.
    """

    def __init__(self, A: HermitianPD, B: HermitianPD):
        _same_dim(A, B)
        self.A = A
        self.B = B
        self.Ah = A.power(0.5).matrix
        Aih = A.power(-0.5).matrix
        self.mid = HermitianPD(Aih @ B.matrix @ Aih)
        self.scale = A.spectral_norm + B.spectral_norm
        self._sharp: dict[float, np.ndarray] = {}
        self._heinz: dict[float, np.ndarray] = {}
        self._inv_nabla: dict[float, np.ndarray] = {}
        self._g_witness: dict[tuple[int, int], float] = {}

    def nabla(self, v: float) -> np.ndarray:
        return (1.0 - v) * self.A.matrix + v * self.B.matrix

    def _sandwich(self, vals: np.ndarray) -> np.ndarray:
        U = self.mid.eigenvectors
        return hermitian_part(self.Ah @ ((U * vals) @ U.conj().T) @ self.Ah)

    def sharp(self, x: float) -> np.ndarray:
        x = float(x)
        out = self._sharp.get(x)
        if out is None:
            out = self._sandwich(self.mid.eigenvalues ** x)
            self._sharp[x] = out
        return out

    def sharp_f(self, f) -> np.ndarray:
        vals = np.array([f(float(lam)) for lam in self.mid.eigenvalues])
        return self._sandwich(vals)

    def heinz(self, x: float) -> np.ndarray:
        x = float(x)
        out = self._heinz.get(x)
        if out is None:
            w = self.mid.eigenvalues
            out = self._sandwich(0.5 * (w ** x + w ** (1.0 - x)))
            self._heinz[x] = out
        return out

    def inv_nabla(self, x: float) -> np.ndarray:
        x = float(x)
        out = self._inv_nabla.get(x)
        if out is None:
            out = hermitian_part(np.linalg.inv(self.nabla(x)))
            self._inv_nabla[x] = out
        return out

    def g_term(self, n: int, k: int, reverse: bool = False) -> np.ndarray:
        """Second sharp-difference across cell (n, k): doubled-node exponents.

        ``reverse`` gives the same quantity for the swapped pair, rewritten
        on this pair through B sharp_x A = A sharp_(1-x) B.
        """
        e_lo = math.ldexp(k - 1, -(n - 1))
        e_hi = math.ldexp(k, -(n - 1))
        e_mid = math.ldexp(2 * k - 1, -n)
        if reverse:
            e_lo, e_hi, e_mid = 1.0 - e_lo, 1.0 - e_hi, 1.0 - e_mid
        return self.sharp(e_lo) + self.sharp(e_hi) - 2.0 * self.sharp(e_mid)

    def g_witness(self, n: int, k: int) -> float:
        key = (n, k)
        w = self._g_witness.get(key)
        if w is None:
            w = _min_eig(self.g_term(n, k))
            self._g_witness[key] = w
        return w


def _report(theorem, relation, links, witnesses, tol, params, extras=None) -> MatrixChainReport:
    witnesses = tuple(float(w) for w in witnesses)
    return MatrixChainReport(
        theorem=theorem,
        relation=relation,
        links=tuple(links),
        witnesses=witnesses,
        passed=bool(all(w >= -tol for w in witnesses)),
        tol_used=tol,
        params=params,
        extras=extras or {},
    )


def check_geo_mean_refined(
    A: HermitianPD,
    B: HermitianPD,
    v: float,
    tol_scale: float = DEFAULT_PSD_TOL,
    pair: GeometricPair | None = None,
) -> MatrixChainReport:
    """Weighted arithmetic vs geometric mean with square and log corrections.

    Three orderings: the corrected geometric mean below the arithmetic mean,
    and the arithmetic mean below both algebraically equal forms of the
    corrected reverse bound.
    """
    v = float(_check_unit(v))
    pair = pair if pair is not None else GeometricPair(A, B)
    r0 = r_closed(0, v)
    alpha = dragomir_coeff(v, 1)
    lhs = pair.nabla(v)
    gap = pair.A.matrix + pair.B.matrix - 2.0 * pair.sharp(0.5)
    log_term = pair.sharp_f(f_min)
    lower = pair.sharp(v) + r0 * gap + alpha * log_term
    upper1 = pair.A.matrix + pair.B.matrix - pair.sharp(1.0 - v) - r0 * gap - alpha * log_term
    upper2 = 2.0 * pair.sharp(0.5) - pair.sharp(1.0 - v) + (1.0 - r0) * gap - alpha * log_term
    tol = tol_scale * pair.scale
    return _report(
        "geo_mean_refined",
        "loewner",
        [("refined_lower", lower), ("mean", lhs), ("upper_sum_form", upper1), ("upper_kmr_form", upper2)],
        [_min_eig(lhs - lower), _min_eig(upper1 - lhs), _min_eig(upper2 - lhs)],
        tol,
        {"v": v, "dim": A.dim},
        extras={"upper_forms_gap": float(np.max(np.abs(upper1 - upper2)))},
    )


def G_nk(A: HermitianPD, B: HermitianPD, c: DyadicCoord) -> np.ndarray:
    """Second difference of the weighted geometric mean along doubled nodes.

    Defined for levels n >= 1 and half-range cells k <= 2^(n-1); the
    exponents are the doubled endpoints and midpoint of cell (n, k).
    """
    n = _check_level(c.n)
    if n < 1:
        raise ValueError("G_nk requires level n >= 1")
    if c.k > 2 ** (n - 1):
        raise IndexError(f"cell index {c.k} out of range: need k <= 2**{n - 1}")
    pair = GeometricPair(A, B)
    return pair.g_term(n, c.k)


def check_d_matrix(
    A: HermitianPD,
    B: HermitianPD,
    v: float,
    N: int,
    tol_scale: float = DEFAULT_PSD_TOL,
    pair: GeometricPair | None = None,
) -> MatrixChainReport:
    """Half-exponent matrix bounds with the case split at v = 1/2."""
    v = float(_check_unit(v))
    N = _check_depth(N)
    pair = pair if pair is not None else GeometricPair(A, B)
    lhs = pair.nabla(v)

    if v <= 0.5:
        w = v
        lower_main = 0.5 * (pair.sharp(2.0 * v) + pair.A.matrix)
        upper_main = pair.A.matrix + 0.5 * pair.B.matrix - 0.5 * pair.sharp(1.0 - 2.0 * v)
    else:
        w = v - 0.5
        lower_main = 0.5 * (pair.sharp(2.0 * v - 1.0) + pair.B.matrix)
        upper_main = 0.5 * pair.A.matrix + pair.B.matrix - 0.5 * pair.sharp(2.0 - 2.0 * v)

    corr_ab = np.zeros_like(lhs)
    corr_ba = np.zeros_like(lhs)
    g_min = math.inf
    for n in range(1, N):
        r = r_closed(n, v)
        if r == 0.0:
            continue
        k = int(cell_index(n, w))
        corr_ab = corr_ab + r * pair.g_term(n, k)
        corr_ba = corr_ba + r * pair.g_term(n, k, reverse=True)
        g_min = min(g_min, pair.g_witness(n, k))

    lower = lower_main + 0.5 * corr_ab
    upper = upper_main - 0.5 * corr_ba
    tol = tol_scale * pair.scale
    extras = {}
    if g_min < math.inf:
        extras["g_term_min_eig"] = g_min
        if g_min < -tol:
            extras["g_term_flag"] = "second sharp-difference not PSD within tolerance"
    return _report(
        "d_matrix",
        "loewner",
        [("half_exponent_lower", lower), ("mean", lhs), ("half_exponent_upper", upper)],
        [_min_eig(lhs - lower), _min_eig(upper - lhs)],
        tol,
        {"v": v, "N": N, "dim": A.dim},
        extras=extras,
    )


def check_heinz_refined(
    A: HermitianPD,
    B: HermitianPD,
    v: float,
    N: int,
    tol_scale: float = DEFAULT_PSD_TOL,
    pair: GeometricPair | None = None,
) -> MatrixChainReport:
    """Heinz mean below the arithmetic mean minus Heinz second differences."""
    v = float(_check_unit(v))
    N = _check_depth(N)
    pair = pair if pair is not None else GeometricPair(A, B)
    lhs = pair.heinz(v)
    bound = pair.nabla(0.5)
    for n in range(N):
        r = r_closed(n, v)
        if r == 0.0:
            continue
        lo, hi, mid = _scalar_nodes(n, v)
        bound = bound - r * (pair.heinz(lo) + pair.heinz(hi) - 2.0 * pair.heinz(mid))
    tol = tol_scale * pair.scale
    return _report(
        "heinz_refined",
        "loewner",
        [("heinz", lhs), ("refined_upper", bound)],
        [_min_eig(bound - lhs)],
        tol,
        {"v": v, "N": N, "dim": A.dim},
    )


def check_inverse_mean(
    A: HermitianPD,
    B: HermitianPD,
    v: float,
    N: int,
    tol_scale: float = DEFAULT_PSD_TOL,
    pair: GeometricPair | None = None,
) -> MatrixChainReport:
    """Inverse of the arithmetic mean below the mean of inverses, refined."""
    v = float(_check_unit(v))
    N = _check_depth(N)
    pair = pair if pair is not None else GeometricPair(A, B)
    lhs = pair.inv_nabla(v)
    bound = (1.0 - v) * pair.A.power(-1.0).matrix + v * pair.B.power(-1.0).matrix
    for n in range(N):
        r = r_closed(n, v)
        if r == 0.0:
            continue
        lo, hi, mid = _scalar_nodes(n, v)
        term = pair.inv_nabla(lo) + pair.inv_nabla(hi) - 2.0 * pair.inv_nabla(mid)
        bound = bound - r * term
    tol = tol_scale * pair.scale
    return _report(
        "inverse_mean",
        "loewner",
        [("inverse_of_mean", lhs), ("refined_upper", bound)],
        [_min_eig(bound - lhs)],
        tol,
        {"v": v, "N": N, "dim": A.dim},
    )


# ---------------------------------------------------------------------------
# norm-valued chains
# ---------------------------------------------------------------------------


class _PowerCache:
    """Fractional powers of a HermitianPD as plain arrays, keyed by exponent."""

    def __init__(self, A: HermitianPD):
        self.A = A

    def __call__(self, p: float) -> np.ndarray:
        return self.A.power(float(p)).matrix


class HeinzNormContext:
    """f(v) = ||| A^(1-v) X B^v + A^v X B^(1-v) |||, cached by v."""

    def __init__(self, A: HermitianPD, B: HermitianPD, X, kind: NormKind):
        _same_dim(A, B)
        self.pa = _PowerCache(A)
        self.pb = _PowerCache(B)
        self.X = np.asarray(X)
        self.kind = kind
        self._f: dict[float, float] = {}

    def f(self, v: float) -> float:
        v = float(v)
        out = self._f.get(v)
        if out is None:
            P = self.pa(1.0 - v) @ self.X @ self.pb(v)
            Q = self.pa(v) @ self.X @ self.pb(1.0 - v)
            out = ui_norm(P + Q, self.kind)
            self._f[v] = out
        return out


class CSNormContext:
    """f(v) = ||| |A^(1-v) X B^v|^t ||| * ||| |A^v X B^(1-v)|^t |||, cached by v."""

    def __init__(self, A: HermitianPD, B: HermitianPD, X, t: float, kind: NormKind):
        _same_dim(A, B)
        if not t > 0.0:
            raise ValueError(f"power must be positive, got {t!r}")
        self.pa = _PowerCache(A)
        self.pb = _PowerCache(B)
        self.X = np.asarray(X)
        self.t = float(t)
        self.kind = kind
        self._f: dict[float, float] = {}

    def f(self, v: float) -> float:
        v = float(v)
        out = self._f.get(v)
        if out is None:
            P = self.pa(1.0 - v) @ self.X @ self.pb(v)
            Q = self.pa(v) @ self.X @ self.pb(1.0 - v)
            out = abs_power_norm(P, self.t, self.kind) * abs_power_norm(Q, self.t, self.kind)
            self._f[v] = out
        return out


class SymmetricNormContext:
    """f(y) = ||| |A^y X B^y|^t ||| * ||| |A^-y X B^-y|^t ||| on [-1, 1], cached by y."""

    def __init__(self, A: HermitianPD, B: HermitianPD, X, t: float, kind: NormKind):
        _same_dim(A, B)
        if not t > 0.0:
            raise ValueError(f"power must be positive, got {t!r}")
        self.pa = _PowerCache(A)
        self.pb = _PowerCache(B)
        self.X = np.asarray(X)
        self.t = float(t)
        self.kind = kind
        self._f: dict[float, float] = {}

    def f(self, y: float) -> float:
        y = float(y)
        out = self._f.get(y)
        if out is None:
            P = self.pa(y) @ self.X @ self.pb(y)
            Q = self.pa(-y) @ self.X @ self.pb(-y)
            out = abs_power_norm(P, self.t, self.kind) * abs_power_norm(Q, self.t, self.kind)
            self._f[y] = out
        return out


def _norm_correction(f, N: int, v: float) -> float:
    total = 0.0
    for n in range(N):
        r = r_closed(n, v)
        if r == 0.0:
            continue
        lo, hi, mid = _scalar_nodes(n, v)
        total += r * (f(lo) + f(hi) - 2.0 * f(mid))
    return total


def check_norm_heinz(
    A: HermitianPD,
    B: HermitianPD,
    X,
    v: float,
    N: int,
    kind: NormKind,
    tol_scale: float = DEFAULT_PSD_TOL,
    ctx: HeinzNormContext | None = None,
) -> MatrixChainReport:
    """Symmetrized two-sided power norm below its endpoint value, refined."""
    v = float(_check_unit(v))
    N = _check_depth(N)
    ctx = ctx if ctx is not None else HeinzNormContext(A, B, X, kind)
    fv = ctx.f(v)
    f0 = ctx.f(0.0)
    bound = f0 - _norm_correction(ctx.f, N, v)
    tol = tol_scale * (1.0 + f0)
    return _report(
        "norm_heinz",
        "norm-scalar",
        [("heinz_norm", fv), ("refined_upper", bound)],
        [bound - fv],
        tol,
        {"v": v, "N": N, "dim": A.dim, "kind": kind.label()},
        extras={"endpoint": f0},
    )


def check_cs_refined(
    A: HermitianPD,
    B: HermitianPD,
    X,
    t: float,
    v: float,
    N: int,
    kind: NormKind,
    tol_scale: float = DEFAULT_PSD_TOL,
    ctx: CSNormContext | None = None,
) -> MatrixChainReport:
    """Interpolated Cauchy-Schwarz norm product, lower and refined upper."""
    v = float(_check_unit(v))
    N = _check_depth(N)
    ctx = ctx if ctx is not None else CSNormContext(A, B, X, t, kind)
    fv = ctx.f(v)
    f0 = ctx.f(0.0)
    mid_sq = ctx.f(0.5)
    bound = f0 - _norm_correction(ctx.f, N, v)
    tol = tol_scale * (1.0 + f0)
    return _report(
        "cs_refined",
        "norm-scalar",
        [("midpoint_square", mid_sq), ("norm_product", fv), ("refined_upper", bound)],
        [fv - mid_sq, bound - fv],
        tol,
        {"v": v, "N": N, "t": float(t), "dim": A.dim, "kind": kind.label()},
        extras={"endpoint": f0},
    )


def check_symmetric_power(
    A: HermitianPD,
    B: HermitianPD,
    X,
    t: float,
    v: float,
    N: int,
    kind: NormKind,
    tol_scale: float = DEFAULT_PSD_TOL,
    ctx: SymmetricNormContext | None = None,
) -> MatrixChainReport:
    """Symmetric-exponent norm product on [-1, 1], refined through u = (v+1)/2.

    The dyadic machinery runs on the reparametrized g(u) = f(2u - 1), so the
    one tested core serves the symmetric interval as well.
    """
    v = float(v)
    if not -1.0 <= v <= 1.0 or not math.isfinite(v):
        raise ValueError(f"v must lie in [-1, 1], got {v!r}")
    N = _check_depth(N)
    ctx = ctx if ctx is not None else SymmetricNormContext(A, B, X, t, kind)

    def g(u: float) -> float:
        return ctx.f(2.0 * u - 1.0)

    u = 0.5 * (v + 1.0)
    fv = ctx.f(v)
    chord = (1.0 - u) * ctx.f(-1.0) + u * ctx.f(1.0)
    bound = chord - _norm_correction(g, N, u)
    f_scale = ctx.f(1.0)
    tol = tol_scale * (1.0 + f_scale)
    return _report(
        "symmetric_power",
        "norm-scalar",
        [("norm_product", fv), ("refined_upper", bound)],
        [bound - fv],
        tol,
        {"v": v, "N": N, "t": float(t), "dim": A.dim, "kind": kind.label()},
        extras={"endpoint": f_scale},
    )
