"""Dyadic tent weights, cell second differences, and refined chord bounds.

The level-n weight is the tent-shaped piecewise-linear map that vanishes at
the dyadic nodes k/2^n and rises to 1/2 at each cell midpoint.  Weighted
sums of cell second differences turn the chord of a function on [0, 1] into
its piecewise-linear interpolant, which is where the refined two-sided
bounds for convex (and suitable piecewise-convex) functions come from.

Every function here accepts Python floats; the weight and cell helpers also
broadcast over numpy arrays.  All node arithmetic uses exponent shifts
(``ldexp``), so dyadic rationals are handled exactly in binary floating
point up to the supported depth.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

ScalarFn = Callable[[float], float]

# Depth cap: past this, neighbouring nodes of the finest level stop being
# distinguishable on the uniform grids the harness uses.
MAX_DEPTH = 40


def _as_scalar_or_array(x):
    return float(x) if np.ndim(x) == 0 else x


def _check_level(n: int) -> int:
    if n != int(n) or n < 0:
        raise ValueError(f"level must be a nonnegative integer, got {n!r}")
    if n > 2 * MAX_DEPTH:
        raise ValueError(f"level {n} exceeds supported maximum {2 * MAX_DEPTH}")
    return int(n)


def _check_depth(N: int) -> int:
    if N != int(N) or N < 0:
        raise ValueError(f"depth must be a nonnegative integer, got {N!r}")
    if N > MAX_DEPTH:
        raise ValueError(f"depth {N} exceeds supported maximum {MAX_DEPTH}")
    return int(N)


def _check_unit(v):
    if isinstance(v, (float, int)):
        v = float(v)
        if not 0.0 <= v <= 1.0:
            raise ValueError(f"argument must lie in [0, 1], got {v!r}")
        return v
    arr = np.asarray(v, dtype=float)
    if not np.all(np.isfinite(arr)) or np.any(arr < 0.0) or np.any(arr > 1.0):
        raise ValueError(f"argument must lie in [0, 1], got {v!r}")
    return arr


@dataclass(frozen=True)
class DyadicCoord:
    """Cell k (1-based) of the 2^n even subdivision of [0, 1]."""

    n: int
    k: int

    def __post_init__(self):
        _check_level(self.n)
        if self.k != int(self.k) or not 1 <= self.k <= 2 ** self.n:
            raise ValueError(
                f"cell index must satisfy 1 <= k <= 2**{self.n}, got {self.k!r}"
            )

    @property
    def lo(self) -> float:
        return math.ldexp(self.k - 1, -self.n)

    @property
    def hi(self) -> float:
        return math.ldexp(self.k, -self.n)

    @property
    def mid(self) -> float:
        return math.ldexp(2 * self.k - 1, -(self.n + 1))

    def mirrored(self) -> "DyadicCoord":
        """The cell reflected through v = 1/2."""
        return DyadicCoord(self.n, 2 ** self.n - self.k + 1)


def cell_index(n, v):
    """Index of the half-open cell ((k-1)/2^n, k/2^n] containing v.

    v = 0 is assigned to k = 1.  The weight vanishes at every node, so any
    boundary convention gives the same weighted sums; this one is
    branch-minimal.
    """
    n = _check_level(n)
    v = _check_unit(v)
    if isinstance(v, float):
        return max(1, math.ceil(math.ldexp(v, n)))
    k = np.maximum(np.ceil(np.ldexp(v, n)), 1.0)
    return k.astype(np.int64) if k.ndim else int(k)


def r_closed(n, v):
    """Level-n tent weight via O(1) cell arithmetic.

    Exact at dyadic-rational v: the scaling 2^n * v is an exponent shift and
    the surrounding subtractions are exact by Sterbenz's lemma.  Values lie
    in [0, 1/2] and vanish at every node k/2^n.
    """
    n = _check_level(n)
    v = _check_unit(v)
    if isinstance(v, float):
        t = math.ldexp(v, n)
        k = max(1, math.ceil(t))
        return min(t - (k - 1.0), k - t)
    t = np.ldexp(v, n)
    k = np.maximum(np.ceil(t), 1.0)
    return _as_scalar_or_array(np.minimum(t - (k - 1.0), k - t))


def r_recursive(n, v):
    """Level-n tent weight by the defining recursion; oracle for r_closed.

    Starts from min(v, 1 - v) and applies r -> min(2r, 1 - 2r) n times.
    """
    n = _check_level(n)
    v = _check_unit(v)
    if isinstance(v, float):
        r = min(v, 1.0 - v)
        for _ in range(n):
            r = min(2.0 * r, 1.0 - 2.0 * r)
        return r
    r = np.minimum(v, 1.0 - v)
    for _ in range(n):
        r = np.minimum(2.0 * r, 1.0 - 2.0 * r)
    return _as_scalar_or_array(r)


def delta(f: ScalarFn, c: DyadicCoord) -> float:
    """Second difference of f across cell c: f(lo) + f(hi) - 2 f(mid).

    Nonnegative whenever f is convex on the cell.
    """
    return f(c.lo) + f(c.hi) - 2.0 * f(c.mid)


def phi(f: ScalarFn, N: int, v: float) -> float:
    """Piecewise-linear interpolant of f at the level-N nodes, evaluated at v.

    Uses the two-point form on the cell containing v, so node values are
    reproduced exactly.
    """
    N = _check_depth(N)
    v = float(_check_unit(v))
    t = math.ldexp(v, N)
    k = max(1, math.ceil(t))
    lo = math.ldexp(k - 1, -N)
    hi = math.ldexp(k, -N)
    return (k - t) * f(lo) + (t - k + 1.0) * f(hi)


def _correction(f: ScalarFn, N: int, v: float, mirror: bool) -> float:
    total = 0.0
    for n in range(N):
        r = r_closed(n, v)
        if r == 0.0:
            continue
        k = cell_index(n, v)
        cell = DyadicCoord(n, k)
        if mirror:
            cell = cell.mirrored()
        total += r * delta(f, cell)
    return total


def correction_sum(f: ScalarFn, N: int, v: float) -> float:
    """Sum over levels n < N of r_n(v) times the active-cell second difference.

    Chord minus this sum equals phi(f, N, v); the sum is 0 for N = 0 and
    nonnegative for convex f.
    """
    N = _check_depth(N)
    v = float(_check_unit(v))
    return _correction(f, N, v, mirror=False)


def jensen_refined(f: ScalarFn, N: int, v: float) -> tuple[float, float]:
    """Two-sided refined bounds on the chord (1-v) f(0) + v f(1).

    Lower: f(v) plus the correction sum.  Upper: f(0) + f(1) - f(1-v) minus
    the mirrored correction sum.  Valid for convex f, and for piecewise
    convex f accepted by piecewise_check; violations are the harness's
    business, nothing is raised here.
    """
    N = _check_depth(N)
    v = float(_check_unit(v))
    lower = f(v) + _correction(f, N, v, mirror=False)
    upper = f(0.0) + f(1.0) - f(1.0 - v) - _correction(f, N, v, mirror=True)
    return lower, upper


def piecewise_check(f: ScalarFn, N: int, grid: int, tol: float = 1e-12) -> bool:
    """Sampled admissibility test for using jensen_refined at depth N.

    Checks convexity of f on every level-(N+1) cell (the segments on which
    the level-N weight is affine) by second differences on ``grid`` equally
    spaced points per cell, and checks the level-N cell second differences
    are nonnegative.  Tolerances are ``tol`` scaled by max(1, sampled |f|).
    """
    N = _check_depth(N)
    if grid != int(grid) or grid < 3:
        raise ValueError(f"grid must be an integer >= 3, got {grid!r}")
    grid = int(grid)

    cells = 2 ** (N + 1)
    worst = 0.0
    scale = 1.0
    for m in range(1, cells + 1):
        lo = math.ldexp(m - 1, -(N + 1))
        hi = math.ldexp(m, -(N + 1))
        xs = np.linspace(lo, hi, grid)
        ys = np.array([f(float(x)) for x in xs])
        scale = max(scale, float(np.max(np.abs(ys))))
        second = ys[:-2] + ys[2:] - 2.0 * ys[1:-1]
        worst = min(worst, float(np.min(second)))
    if worst < -tol * scale:
        return False
    for k in range(1, 2 ** N + 1):
        if delta(f, DyadicCoord(N, k)) < -tol * scale:
            return False
    return True


def node_cached(f: ScalarFn) -> ScalarFn:
    """Memoize f on the exact float values it is called with.

    Dyadic nodes are exact binary floats up to depth 52, so keying the cache
    by value is sound.  Reads and inserts are plain dict operations, safe
    under concurrent use from multiple threads.
    """
    cache: dict[float, float] = {}

    def wrapped(x: float) -> float:
        y = cache.get(x)
        if y is None:
            y = f(x)
            cache[x] = y
        return y

    return wrapped
