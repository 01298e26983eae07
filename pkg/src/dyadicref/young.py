"""Refined scalar bounds on the weighted arithmetic mean (1-v)a + v b.

Families: the plain multi-level refinement of the arithmetic-geometric
inequality, its Kantorovich-constant sharpening (with a bisection search
recovering the optimal constant), the logarithmic Dragomir/Minculete
corrections, the Specht-ratio chain, and the half-exponent family built
from the symmetrized ratio D(t) = (t + 1/t)/2.

Each family has a private core that evaluates all chain links for scalars
or broadcast numpy arrays, and a public wrapper returning a
BoundChainReport for a single instance.  The suite driver reuses the cores
directly, so the reported numbers and the bulk-verified numbers come from
one code path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .dyadic import MAX_DEPTH, DyadicCoord, _check_depth, _check_unit, r_closed

__all__ = [
    "YoungInstance",
    "BoundChainReport",
    "pow_pos",
    "g_nk",
    "g_nk_diff",
    "young_lower",
    "young_upper_chain",
    "kantorovich_K",
    "kantorovich_bounds",
    "best_constant_search",
    "dragomir_coeff",
    "dragomir_bounds",
    "minculete_bounds",
    "specht",
    "d_func",
    "specht_bounds",
    "d_bounds",
]

DEFAULT_TOL_REL = 1e-12

# ln S(1+u) = u^2/8 - u^3/8 + 65 u^4/576 - 29 u^5/288 + 4679 u^6/51840 + ...
# used below |u| < 1e-4, where the direct quotient would divide two vanishing
# quantities.  Terms beyond u^4 are far below double rounding there; they are
# kept so the series is accurate through |u| ~ 1e-3 for validation.
_LNS_COEFFS = (1 / 8, -1 / 8, 65 / 576, -29 / 288, 4679 / 51840)
_SPECHT_SERIES_CUTOFF = 1e-4


def _positive(x, name):
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)) or np.any(arr <= 0.0):
        raise ValueError(f"{name} must be positive and finite, got {x!r}")
    return arr


def _scalarize(x):
    return float(x) if np.ndim(x) == 0 else x


def pow_pos(base, expo):
    """x**p for positive x, always as exp(p log x).

    One shared kernel keeps the closed forms and the second-difference forms
    of the same quantity bit-comparable.
    """
    return np.exp(np.asarray(expo, dtype=float) * np.log(base))


@dataclass(frozen=True)
class YoungInstance:
    """A weighted-mean instance: positive endpoints a, b and weight v in [0, 1]."""

    a: float
    b: float
    v: float

    def __post_init__(self):
        _positive(self.a, "a")
        _positive(self.b, "b")
        _check_unit(self.v)

    @property
    def mean(self) -> float:
        return (1.0 - self.v) * self.a + self.v * self.b


@dataclass(frozen=True)
class BoundChainReport:
    """Evaluated inequality chain: the mean, each bound, and per-link slack.

    ``slacks`` carries one signed entry per asserted relation; >= 0 means
    satisfied, and equalities are encoded as minus the absolute gap.
    ``passed`` holds iff every slack is >= -tol_used.
    """

    family: str
    lhs: float
    links: tuple[tuple[str, float], ...]
    relations: tuple[str, ...]
    slacks: tuple[float, ...]
    passed: bool
    tol_used: float

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "lhs": self.lhs,
            "links": [[label, value] for label, value in self.links],
            "relations": list(self.relations),
            "slacks": list(self.slacks),
            "passed": self.passed,
            "tol_used": self.tol_used,
        }


class Chain(NamedTuple):
    """Raw chain evaluation: links and signed slacks, scalar or array valued."""

    lhs: object
    links: list
    slacks: list


def _chord(a, b, v):
    return (1.0 - v) * a + v * b


def _cell_nodes(n, v):
    """Endpoints and midpoint of the active level-n cell, exact dyadic floats."""
    k = np.maximum(np.ceil(np.ldexp(v, n)), 1.0)
    lo = np.ldexp(k - 1.0, -n)
    hi = np.ldexp(k, -n)
    mid = np.ldexp(2.0 * k - 1.0, -(n + 1))
    return lo, hi, mid


def _g_correction(la, lb, v, N, start=0):
    """Sum over levels start <= n < N of r_n(v) times the active square term.

    The square form (sqrt of the node power minus sqrt of the next node
    power, squared) of the cell second difference of a^(1-x) b^x.
    """
    total = np.zeros(np.broadcast(la, lb, v).shape)
    for n in range(start, N):
        r = r_closed(n, v)
        lo, hi, _ = _cell_nodes(n, v)
        s_lo = np.exp(0.5 * ((1.0 - lo) * la + lo * lb))
        s_hi = np.exp(0.5 * ((1.0 - hi) * la + hi * lb))
        total = total + r * (s_lo - s_hi) ** 2
    return total


def g_nk(a, b, c: DyadicCoord):
    """Square form of the cell second difference of a^(1-x) b^x: nonnegative.

    Returned in the subtraction-free form; `g_nk_diff` is the literal
    three-term form kept as its numerical cross-check.
    """
    a = _positive(a, "a")
    b = _positive(b, "b")
    la, lb = np.log(a), np.log(b)
    s_lo = np.exp(0.5 * ((1.0 - c.lo) * la + c.lo * lb))
    s_hi = np.exp(0.5 * ((1.0 - c.hi) * la + c.hi * lb))
    return _scalarize((s_lo - s_hi) ** 2)


def g_nk_diff(a, b, c: DyadicCoord):
    """Three-term second difference of a^(1-x) b^x across cell c."""
    a = _positive(a, "a")
    b = _positive(b, "b")
    la, lb = np.log(a), np.log(b)

    def p(x):
        return np.exp((1.0 - x) * la + x * lb)

    return _scalarize(p(c.lo) + p(c.hi) - 2.0 * p(c.mid))


# ---------------------------------------------------------------------------
# plain refinement
# ---------------------------------------------------------------------------


def _young_lower_chain(a, b, v, N) -> Chain:
    la, lb = np.log(a), np.log(b)
    lhs = _chord(a, b, v)
    lower = np.exp((1.0 - v) * la + v * lb) + _g_correction(la, lb, v, N)
    return Chain(lhs, [("refined_lower", lower)], [("lhs >= refined_lower", lhs - lower)])


def _young_upper_chain(a, b, v, N) -> Chain:
    # The rewriting of the sum form into the square-term form extracts the
    # level-0 term, so the two-form identity and the product form only exist
    # for N >= 1; at N = 0 the reverse bound is the bare sum form.
    la, lb = np.log(a), np.log(b)
    lhs = _chord(a, b, v)
    ba = np.exp(v * la + (1.0 - v) * lb)
    link1 = a + b - ba - _g_correction(lb, la, v, N)
    if N == 0:
        return Chain(lhs, [("upper_sum_form", link1)], [("upper_sum_form >= lhs", link1 - lhs)])
    ab = np.exp((1.0 - v) * la + v * lb)
    sq = (np.sqrt(a) - np.sqrt(b)) ** 2
    R0 = 1.0 - r_closed(0, v)
    tail = _g_correction(lb, la, v, N, start=1)
    link2 = 2.0 * np.sqrt(a * b) - ba + R0 * sq - tail
    link3 = ab + R0 * sq - tail
    return Chain(
        lhs,
        [("upper_sum_form", link1), ("upper_kmr_form", link2), ("upper_product_form", link3)],
        [
            ("upper_sum_form >= lhs", link1 - lhs),
            ("upper_sum_form == upper_kmr_form", -np.abs(link1 - link2)),
            ("upper_product_form >= upper_kmr_form", link3 - link2),
        ],
    )


# ---------------------------------------------------------------------------
# Kantorovich family
# ---------------------------------------------------------------------------


def kantorovich_K(a, b, N):
    """(a^q + b^q)^2 / (4 (ab)^q) with q = 2^-N; >= 1, equal to 1 iff a = b."""
    a = _positive(a, "a")
    b = _positive(b, "b")
    N = _check_depth(N)
    q = np.ldexp(1.0, -N)
    pa = pow_pos(a, q)
    pb = pow_pos(b, q)
    return _scalarize((pa + pb) ** 2 / (4.0 * pa * pb))


def _kantorovich_chain(a, b, v, N) -> Chain:
    # As in the plain reverse chain, the square-term and product forms of
    # the upper bound exist only for N >= 1 (and are false statements at
    # N = 0); the N = 0 chain is the lower bound plus the bare sum form.
    la, lb = np.log(a), np.log(b)
    lhs = _chord(a, b, v)
    K = kantorovich_K(a, b, N)
    rN = r_closed(N, v)
    Kr = pow_pos(K, rN)
    ab = np.exp((1.0 - v) * la + v * lb)
    ba = np.exp(v * la + (1.0 - v) * lb)
    lower = Kr * ab + _g_correction(la, lb, v, N)
    up1 = a + b - Kr * ba - _g_correction(lb, la, v, N)
    if N == 0:
        return Chain(
            lhs,
            [("sharpened_lower", lower), ("upper_sum_form", up1)],
            [("lhs >= sharpened_lower", lhs - lower), ("upper_sum_form >= lhs", up1 - lhs)],
        )
    Kir = pow_pos(K, -rN)
    sq = (np.sqrt(a) - np.sqrt(b)) ** 2
    R0 = 1.0 - r_closed(0, v)
    tail = _g_correction(lb, la, v, N, start=1)
    up2 = 2.0 * np.sqrt(a * b) - Kr * ba + R0 * sq - tail
    up3 = Kir * ab + R0 * sq - tail
    return Chain(
        lhs,
        [
            ("sharpened_lower", lower),
            ("upper_sum_form", up1),
            ("upper_kmr_form", up2),
            ("upper_product_form", up3),
        ],
        [
            ("lhs >= sharpened_lower", lhs - lower),
            ("upper_sum_form >= lhs", up1 - lhs),
            ("upper_sum_form == upper_kmr_form", -np.abs(up1 - up2)),
            ("upper_product_form >= upper_kmr_form", up3 - up2),
        ],
    )


def best_constant_search(a, b, N, steps: int = 80):
    """Largest constant admissible in place of the Kantorovich constant.

    Admissibility of xi is equivalent to nonnegativity of all level-N cell
    second differences of xi^(r_N) a^(1-x) b^x, which only involves the cell
    nodes (where the weight vanishes) and midpoints (where it is 1/2).
    Bisection on [1, K+1]; returns 1 for a == b by convention.
    """
    a = float(_positive(a, "a"))
    b = float(_positive(b, "b"))
    N = _check_depth(N)
    if N > 20:
        raise ValueError("best_constant_search supports N <= 20")
    if a == b:
        return 1.0

    la, lb = np.log(a), np.log(b)
    k = np.arange(1, 2 ** N + 1, dtype=float)
    lo = np.ldexp(k - 1.0, -N)
    hi = np.ldexp(k, -N)
    mid = np.ldexp(2.0 * k - 1.0, -(N + 1))
    p_lo = np.exp((1.0 - lo) * la + lo * lb)
    p_hi = np.exp((1.0 - hi) * la + hi * lb)
    p_mid = np.exp((1.0 - mid) * la + mid * lb)

    def admissible(xi):
        return bool(np.all(p_lo + p_hi - 2.0 * np.sqrt(xi) * p_mid >= 0.0))

    low, high = 1.0, float(kantorovich_K(a, b, N)) + 1.0
    for _ in range(steps):
        midpoint = 0.5 * (low + high)
        if admissible(midpoint):
            low = midpoint
        else:
            high = midpoint
    return low


# ---------------------------------------------------------------------------
# Dragomir / Minculete logarithmic corrections
# ---------------------------------------------------------------------------


def dragomir_coeff(v, N):
    """v(1-v)/2 minus the level sum of r_n(v)/2^(n+2) for n < N.

    Equals r_0(v)|2v - 1|/4 at N = 1 and is <= 0 everywhere once N >= 2.
    """
    v = _check_unit(v)
    N = _check_depth(N)
    c = 0.5 * v * (1.0 - v)
    for n in range(N):
        c = c - np.ldexp(r_closed(n, v), -(n + 2))
    return _scalarize(c)


def _log_sq_min(a, b):
    d = np.log(b) - np.log(a)
    return d * d * np.minimum(a, b)


def _dragomir_chain(a, b, v, N) -> Chain:
    la, lb = np.log(a), np.log(b)
    lhs = _chord(a, b, v)
    zeta = _log_sq_min(a, b)
    co = dragomir_coeff(v, N)
    ab = np.exp((1.0 - v) * la + v * lb)
    ba = np.exp(v * la + (1.0 - v) * lb)
    lower = (ab + _g_correction(la, lb, v, N)) + co * zeta
    upper = (a + b - ba - _g_correction(lb, la, v, N)) - co * zeta
    return Chain(
        lhs,
        [("log_refined_lower", lower), ("log_refined_upper", upper)],
        [("lhs >= log_refined_lower", lhs - lower), ("log_refined_upper >= lhs", upper - lhs)],
    )


def _minculete_chain(a, b, v) -> Chain:
    la, lb = np.log(a), np.log(b)
    lhs = _chord(a, b, v)
    r0 = r_closed(0, v)
    R0 = 1.0 - r0
    alpha = dragomir_coeff(v, 1)
    zeta = _log_sq_min(a, b)
    ab = np.exp((1.0 - v) * la + v * lb)
    ba = np.exp(v * la + (1.0 - v) * lb)
    sq = (np.sqrt(a) - np.sqrt(b)) ** 2
    lower = ab + r0 * sq + alpha * zeta
    up1 = a + b - ba - r0 * sq - alpha * zeta
    up2 = ab + R0 * sq - alpha * zeta
    return Chain(
        lhs,
        [("log_lower", lower), ("log_upper_sum", up1), ("log_upper_product", up2)],
        [
            ("lhs >= log_lower", lhs - lower),
            ("log_upper_sum >= lhs", up1 - lhs),
            ("log_upper_product >= log_upper_sum", up2 - up1),
        ],
    )


def _minculete_dominance(a, b, v) -> Chain:
    """Slack of the refined links over the plain-log forms; valid for a, b >= 1."""
    la, lb = np.log(a), np.log(b)
    lhs = _chord(a, b, v)
    r0 = r_closed(0, v)
    R0 = 1.0 - r0
    alpha = dragomir_coeff(v, 1)
    lnsq = (lb - la) ** 2
    zeta = lnsq * np.minimum(a, b)
    ab = np.exp((1.0 - v) * la + v * lb)
    ba = np.exp(v * la + (1.0 - v) * lb)
    sq = (np.sqrt(a) - np.sqrt(b)) ** 2
    lower = ab + r0 * sq + alpha * zeta
    up1 = a + b - ba - r0 * sq - alpha * zeta
    plain_lower = ab + r0 * sq + alpha * lnsq
    plain_upper = ab + R0 * sq + alpha * lnsq
    return Chain(
        lhs,
        [("plain_log_lower", plain_lower), ("plain_log_upper", plain_upper)],
        [
            ("log_lower >= plain_log_lower", lower - plain_lower),
            ("plain_log_upper >= log_upper_sum", plain_upper - up1),
        ],
    )


# ---------------------------------------------------------------------------
# Specht ratio and the half-exponent family
# ---------------------------------------------------------------------------


def _specht_arr(t):
    u = t - 1.0
    small = np.abs(u) < _SPECHT_SERIES_CUTOFF
    t_safe = np.where(small, 2.0, t)
    u_safe = t_safe - 1.0
    L = np.log(t_safe) / u_safe
    direct = np.exp(L - 1.0 - np.log(L))
    u_series = np.where(small, u, 0.0)
    c2, c3, c4, c5, c6 = _LNS_COEFFS
    lns = u_series * u_series * (c2 + u_series * (c3 + u_series * (c4 + u_series * (c5 + u_series * c6))))
    return np.where(small, np.exp(lns), direct)


def specht(t):
    """Specht ratio: t^(1/(t-1)) / (e ln t^(1/(t-1))); >= 1, symmetric in t <-> 1/t.

    Evaluated as exp(L - 1 - ln L) with L = ln(t)/(t - 1); near t = 1 both
    L - 1 and ln L vanish, so a short series of the logarithm takes over.
    """
    t = _positive(t, "t")
    return _scalarize(_specht_arr(t))


def d_func(t):
    """Symmetrized ratio (t + 1/t)/2; dominates the Specht ratio everywhere."""
    t = _positive(t, "t")
    return _scalarize(0.5 * (t + 1.0 / t))


def _specht_factor(la, lb, x):
    """S((b/a)^(r_0(x))) for broadcastable x."""
    return _specht_arr(np.exp(r_closed(0, x) * (lb - la)))


def _specht_delta(la, lb, v, N, mirror=False):
    """Correction sum with the Specht-weighted power function, by direct deltas."""

    def f(x):
        return _specht_factor(la, lb, x) * np.exp((1.0 - x) * la + x * lb)

    total = np.zeros(np.broadcast(la, lb, v).shape)
    for n in range(N):
        r = r_closed(n, v)
        lo, hi, mid = _cell_nodes(n, v)
        if mirror:
            lo, hi, mid = 1.0 - hi, 1.0 - lo, 1.0 - mid
        total = total + r * (f(lo) + f(hi) - 2.0 * f(mid))
    return total


def _specht_chain(a, b, v, N) -> Chain:
    la, lb = np.log(a), np.log(b)
    lhs = _chord(a, b, v)
    ab = np.exp((1.0 - v) * la + v * lb)
    ba = np.exp(v * la + (1.0 - v) * lb)
    s_v = _specht_factor(la, lb, v)
    s_full = _specht_arr(np.exp(lb - la))
    base_lower = s_v * ab
    refined_lower = base_lower + _specht_delta(la, lb, v, N)
    refined_upper = a + b - ba * s_v - _specht_delta(la, lb, v, N, mirror=True)
    base_upper = s_full * ab
    return Chain(
        lhs,
        [
            ("ratio_lower", base_lower),
            ("refined_lower", refined_lower),
            ("refined_upper", refined_upper),
            ("ratio_upper", base_upper),
        ],
        [
            ("lhs >= ratio_lower", lhs - base_lower),
            ("lhs >= refined_lower", lhs - refined_lower),
            ("refined_upper >= lhs", refined_upper - lhs),
            ("ratio_upper >= lhs", base_upper - lhs),
            ("refined_lower >= ratio_lower", refined_lower - base_lower),
        ],
    )


def _d_chain(a, b, v, N) -> Chain:
    """Half-exponent family: case split at v = 1/2, half-range level sums."""
    la, lb = np.log(a), np.log(b)
    lhs = _chord(a, b, v)
    case1 = np.asarray(v) <= 0.5
    w = np.where(case1, v, v - 0.5)

    low_main = np.where(
        case1,
        0.5 * (np.exp((1.0 - 2.0 * v) * la + 2.0 * v * lb) + a),
        0.5 * (np.exp((2.0 - 2.0 * v) * la + (2.0 * v - 1.0) * lb) + b),
    )
    up_main = np.where(
        case1,
        a + 0.5 * b - 0.5 * np.exp(2.0 * v * la + (1.0 - 2.0 * v) * lb),
        0.5 * a + b - 0.5 * np.exp((2.0 * v - 1.0) * la + (2.0 - 2.0 * v) * lb),
    )

    corr_ab = np.zeros(np.broadcast(la, lb, v).shape)
    corr_ba = np.zeros_like(corr_ab)
    for n in range(1, N):
        r = r_closed(n, v)
        lo, hi, _ = _cell_nodes(n, w)
        # sqrt of a^(1-2x) b^(2x) at the cell endpoints; square-form deltas
        s_lo_ab = np.exp(0.5 * ((1.0 - 2.0 * lo) * la + 2.0 * lo * lb))
        s_hi_ab = np.exp(0.5 * ((1.0 - 2.0 * hi) * la + 2.0 * hi * lb))
        s_lo_ba = np.exp(0.5 * ((1.0 - 2.0 * lo) * lb + 2.0 * lo * la))
        s_hi_ba = np.exp(0.5 * ((1.0 - 2.0 * hi) * lb + 2.0 * hi * la))
        corr_ab = corr_ab + r * (s_lo_ab - s_hi_ab) ** 2
        corr_ba = corr_ba + r * (s_lo_ba - s_hi_ba) ** 2

    lower = low_main + 0.5 * corr_ab
    upper = up_main - 0.5 * corr_ba
    return Chain(
        lhs,
        [("half_exponent_lower", lower), ("half_exponent_upper", upper)],
        [
            ("lhs >= half_exponent_lower", lhs - lower),
            ("half_exponent_upper >= lhs", upper - lhs),
        ],
    )


# ---------------------------------------------------------------------------
# report wrappers
# ---------------------------------------------------------------------------


def _instance_tol(inst: YoungInstance, tol_rel: float) -> float:
    return tol_rel * max(inst.a, inst.b)


def _build_report(family, inst, chain: Chain, tol: float) -> BoundChainReport:
    labels = tuple(label for label, _ in chain.slacks)
    slacks = tuple(float(s) for _, s in chain.slacks)
    return BoundChainReport(
        family=family,
        lhs=float(chain.lhs),
        links=tuple((label, float(x)) for label, x in chain.links),
        relations=labels,
        slacks=slacks,
        passed=bool(all(s >= -tol for s in slacks)),
        tol_used=tol,
    )


def young_lower(inst: YoungInstance, N: int, tol_rel: float = DEFAULT_TOL_REL) -> BoundChainReport:
    """Refined lower bound: power mean plus the level-weighted square terms."""
    N = _check_depth(N)
    chain = _young_lower_chain(inst.a, inst.b, inst.v, N)
    return _build_report("young_lower", inst, chain, _instance_tol(inst, tol_rel))


def young_upper_chain(inst: YoungInstance, N: int, tol_rel: float = DEFAULT_TOL_REL) -> BoundChainReport:
    """Three-link reverse chain; the first two links are algebraically equal."""
    N = _check_depth(N)
    chain = _young_upper_chain(inst.a, inst.b, inst.v, N)
    return _build_report("young_upper", inst, chain, _instance_tol(inst, tol_rel))


def kantorovich_bounds(inst: YoungInstance, N: int, tol_rel: float = DEFAULT_TOL_REL) -> BoundChainReport:
    """Kantorovich-sharpened lower bound plus the three-link reverse chain."""
    N = _check_depth(N)
    chain = _kantorovich_chain(inst.a, inst.b, inst.v, N)
    return _build_report("kantorovich", inst, chain, _instance_tol(inst, tol_rel))


def dragomir_bounds(inst: YoungInstance, N: int, tol_rel: float = DEFAULT_TOL_REL) -> BoundChainReport:
    """Both log-corrected bounds at depth N."""
    N = _check_depth(N)
    chain = _dragomir_chain(inst.a, inst.b, inst.v, N)
    return _build_report("dragomir", inst, chain, _instance_tol(inst, tol_rel))


def minculete_bounds(inst: YoungInstance, tol_rel: float = DEFAULT_TOL_REL) -> BoundChainReport:
    """Depth-1 log-corrected chain; dominance links added when a, b >= 1."""
    chain = _minculete_chain(inst.a, inst.b, inst.v)
    if min(inst.a, inst.b) >= 1.0:
        dom = _minculete_dominance(inst.a, inst.b, inst.v)
        chain = Chain(chain.lhs, chain.links + dom.links, chain.slacks + dom.slacks)
    return _build_report("minculete", inst, chain, _instance_tol(inst, tol_rel))


def specht_bounds(inst: YoungInstance, N: int, tol_rel: float = DEFAULT_TOL_REL) -> BoundChainReport:
    """Specht-ratio chain with composite second-difference corrections."""
    N = _check_depth(N)
    chain = _specht_chain(inst.a, inst.b, inst.v, N)
    return _build_report("specht", inst, chain, _instance_tol(inst, tol_rel))


def d_bounds(inst: YoungInstance, N: int, tol_rel: float = DEFAULT_TOL_REL) -> BoundChainReport:
    """Half-exponent family bounds with the case split at v = 1/2."""
    N = _check_depth(N)
    chain = _d_chain(inst.a, inst.b, inst.v, N)
    return _build_report("d", inst, chain, _instance_tol(inst, tol_rel))


# Vector cores keyed by family name; the harness iterates this mapping.
# Every entry has signature (a, b, v, N) -> Chain on broadcastable arrays.
CHAIN_CORES = {
    "young_lower": _young_lower_chain,
    "young_upper": _young_upper_chain,
    "kantorovich": _kantorovich_chain,
    "dragomir": _dragomir_chain,
    "minculete": lambda a, b, v, N: _minculete_chain(a, b, v),
    "specht": _specht_chain,
    "d": _d_chain,
}


def minculete_dominance_chain(a, b, v) -> Chain:
    """Vector form of the dominance slacks, masked to instances with a, b >= 1."""
    chain = _minculete_dominance(a, b, v)
    mask = np.minimum(a, b) >= 1.0
    slacks = [(label, np.where(mask, s, 0.0)) for label, s in chain.slacks]
    return Chain(chain.lhs, chain.links, slacks)
