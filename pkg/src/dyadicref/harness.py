"""Suite drivers: randomized verification sweeps and tightness reports.

The scalar suite evaluates every registered inequality family on seeded
random instances (vectorized, in chunks) at each instance's own weight and
on a shared weight grid that includes the dyadic nodes, where exact
equalities make the sharpest regression signals.  The matrix suite runs
every checker over seeded positive definite fixtures on a weight grid.
Violations are recorded and aggregated, never raised.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from . import matineq, young
from .dyadic import MAX_DEPTH
from .generate import gen_general, gen_pd, gen_scalar_batch, trial_seed
from .matkit import (
    MAX_DIM,
    SCHATTEN_1,
    SCHATTEN_2,
    SCHATTEN_INF,
    ky_fan,
    matrix_to_json,
)
from .matineq import (
    CSNormContext,
    GeometricPair,
    HeinzNormContext,
    SymmetricNormContext,
    check_cs_refined,
    check_d_matrix,
    check_geo_mean_refined,
    check_heinz_refined,
    check_inverse_mean,
    check_norm_heinz,
    check_symmetric_power,
)

__all__ = [
    "SuiteConfig",
    "SCALAR_FAMILIES",
    "MATRIX_CHECKERS",
    "dyadic_nodes",
    "default_v_grid",
    "run_scalar_suite",
    "run_matrix_suite",
    "run_suite",
    "SweepRow",
    "SWEEP_FAMILIES",
    "sweep_rows",
    "write_sweep_csv",
]

_SUITES = ("scalar", "matrix", "all")
_COMPLEX_MODES = ("mix", "real", "complex")

# Matrix fixtures per suite run are capped so the default configuration
# stays inside its time budget; the cap matches the acceptance scale.
MATRIX_FIXTURE_CAP = 200


def _n_independent(core):
    core.n_independent = True
    return core


SCALAR_FAMILIES = dict(young.CHAIN_CORES)
SCALAR_FAMILIES["minculete"] = _n_independent(SCALAR_FAMILIES["minculete"])
SCALAR_FAMILIES["minculete_dominance"] = _n_independent(
    lambda a, b, v, N: young.minculete_dominance_chain(a, b, v)
)


@dataclass
class SuiteConfig:
    """Validated configuration for one verification run."""

    suite: str = "all"
    trials: int = 1000
    seed: int = 42
    max_depth: int = 5
    dim_range: tuple[int, int] = (2, 6)
    tol: float = 1e-12
    psd_tol: float = 1e-8
    out_path: str | None = None
    complex_mode: str = "mix"
    timestamp: bool = True
    range_exp: float = 3.0
    cond_max: float = 1e3

    def validate(self) -> "SuiteConfig":
        if self.suite not in _SUITES:
            raise ValueError(f"suite must be one of {_SUITES}, got {self.suite!r}")
        if self.trials != int(self.trials) or self.trials < 1:
            raise ValueError(f"trials must be a positive integer, got {self.trials!r}")
        if not 0 <= int(self.seed) < 2 ** 64:
            raise ValueError(f"seed must fit in 64 unsigned bits, got {self.seed!r}")
        if self.max_depth != int(self.max_depth) or not 0 <= self.max_depth <= MAX_DEPTH:
            raise ValueError(f"max_depth must lie in [0, {MAX_DEPTH}], got {self.max_depth!r}")
        lo, hi = self.dim_range
        if not (1 <= lo <= hi <= MAX_DIM):
            raise ValueError(f"dim_range must satisfy 1 <= lo <= hi <= {MAX_DIM}, got {self.dim_range!r}")
        if not self.tol > 0.0 or not self.psd_tol > 0.0:
            raise ValueError("tolerances must be positive")
        if self.complex_mode not in _COMPLEX_MODES:
            raise ValueError(f"complex_mode must be one of {_COMPLEX_MODES}")
        if not self.range_exp > 0.0:
            raise ValueError("range_exp must be positive")
        if not self.cond_max >= 1.0:
            raise ValueError("cond_max must be >= 1")
        return self

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "trials": int(self.trials),
            "seed": int(self.seed),
            "max_depth": int(self.max_depth),
            "dim_range": [int(self.dim_range[0]), int(self.dim_range[1])],
            "tol": float(self.tol),
            "psd_tol": float(self.psd_tol),
            "complex_mode": self.complex_mode,
            "range_exp": float(self.range_exp),
            "cond_max": float(self.cond_max),
        }


def dyadic_nodes(depth: int) -> np.ndarray:
    """All nodes k/2^depth in [0, 1]; contains every coarser level's nodes."""
    return np.ldexp(np.arange(2 ** depth + 1, dtype=float), -depth)


def default_v_grid(max_depth: int, node_depth_cap: int = 6) -> np.ndarray:
    """33 uniform points joined with the dyadic nodes one level past max_depth."""
    nodes = dyadic_nodes(min(max_depth + 1, node_depth_cap))
    return np.unique(np.concatenate([np.ldexp(np.arange(33, dtype=float), -5), nodes]))


# ---------------------------------------------------------------------------
# scalar suite
# ---------------------------------------------------------------------------


@dataclass
class _RelationStat:
    checks: int = 0
    violations: int = 0
    min_normalized: float = math.inf
    min_slack: float = math.inf
    argmin: dict | None = None

    def update(self, slack, tol, info):
        if isinstance(slack, tuple):
            t = float(tol)
            self.checks += len(slack)
            for j, s in enumerate(slack):
                if s < -t:
                    self.violations += 1
                value = s / t
                if value < self.min_normalized:
                    self.min_normalized = value
                    self.min_slack = s
                    self.argmin = info((j,))
            return
        slack = np.asarray(slack, dtype=float)
        tol_b = np.broadcast_to(np.asarray(tol, dtype=float), slack.shape)
        self.checks += slack.size
        self.violations += int(np.count_nonzero(slack < -tol_b))
        normalized = slack / tol_b
        flat = int(np.argmin(normalized))
        value = float(normalized.flat[flat])
        if value < self.min_normalized:
            self.min_normalized = value
            self.min_slack = float(slack.flat[flat])
            self.argmin = info(np.unravel_index(flat, slack.shape))

    def to_json(self) -> dict:
        return {
            "checks": self.checks,
            "violations": self.violations,
            "min_slack": None if self.checks == 0 else self.min_slack,
            "min_slack_over_tol": None if self.checks == 0 else self.min_normalized,
            "argmin": self.argmin,
        }


def run_scalar_suite(
    trials: int,
    seed: int,
    max_depth: int = 5,
    tol_rel: float = 1e-12,
    range_exp: float = 3.0,
    v_grid=None,
    chunk_size: int = 20000,
    families: dict | None = None,
) -> dict:
    """Evaluate every scalar family over seeded instances; aggregate slacks.

    Each trial is checked at its own random weight; when ``v_grid`` is given
    the trial's endpoints are additionally checked at every grid weight.
    """
    families = SCALAR_FAMILIES if families is None else families
    stats: dict[str, dict[str, _RelationStat]] = {name: {} for name in families}
    grid = None if v_grid is None else np.asarray(v_grid, dtype=float)

    def eval_block(a1d, b1d, v, tol, seeds, start, source):
        gridded = np.ndim(v) > 1
        a = a1d[:, None] if gridded else a1d
        b = b1d[:, None] if gridded else b1d
        shape = np.broadcast(a, b, v).shape
        for N in range(max_depth + 1):
            for name, core in families.items():
                if N > 0 and getattr(core, "n_independent", False):
                    continue
                chain = core(a, b, v, N)
                for label, slack in chain.slacks:
                    slack = np.broadcast_to(np.asarray(slack, dtype=float), shape)

                    def info(idx, name=name, N=N, label=label):
                        i = idx[0]
                        return {
                            "family": name,
                            "relation": label,
                            "trial": int(start + i),
                            "substream_seed": int(seeds[i]),
                            "a": float(a1d[i]),
                            "b": float(b1d[i]),
                            "v": float(v[idx] if gridded else v[i]),
                            "N": N,
                            "source": source,
                        }

                    stats[name].setdefault(label, _RelationStat()).update(slack, tol, info)

    for start in range(0, trials, chunk_size):
        m = min(chunk_size, trials - start)
        seeds, a, b, v = gen_scalar_batch(seed, m, range_exp, start=start)
        tol = tol_rel * np.maximum(a, b)
        eval_block(a, b, v, tol, seeds, start, "instance")
        if grid is not None and grid.size:
            v2 = np.broadcast_to(grid[None, :], (m, grid.size))
            eval_block(a, b, v2, tol[:, None], seeds, start, "grid")

    families_json = {}
    total_checks = total_violations = 0
    for name, rels in stats.items():
        checks = sum(r.checks for r in rels.values())
        violations = sum(r.violations for r in rels.values())
        worst = min(rels.values(), key=lambda r: r.min_normalized, default=None)
        families_json[name] = {
            "checks": checks,
            "violations": violations,
            "passed": violations == 0,
            "relations": {label: r.to_json() for label, r in rels.items()},
            "argmin": worst.argmin if worst is not None else None,
        }
        total_checks += checks
        total_violations += violations
    return {
        "passed": total_violations == 0,
        "checks": total_checks,
        "violations": total_violations,
        "families": families_json,
    }


# ---------------------------------------------------------------------------
# matrix suite
# ---------------------------------------------------------------------------


@dataclass
class MatrixFixture:
    """One generated pair plus the side matrix and cached contexts."""

    index: int
    seed_a: int
    seed_b: int
    seed_x: int
    dim: int
    complex_: bool
    t: float
    kind: object
    A: object
    B: object
    X: object
    pair: GeometricPair
    heinz_ctx: HeinzNormContext
    cs_ctx: CSNormContext
    sym_ctx: SymmetricNormContext

    def describe(self) -> dict:
        return {
            "fixture": self.index,
            "seed_a": self.seed_a,
            "seed_b": self.seed_b,
            "seed_x": self.seed_x,
            "dim": self.dim,
            "complex": self.complex_,
            "t": self.t,
            "kind": self.kind.label(),
        }


def _build_fixture(index: int, seed: int, dim_range, complex_mode: str, cond_max: float) -> MatrixFixture:
    dims = list(range(dim_range[0], dim_range[1] + 1))
    dim = dims[index % len(dims)]
    if complex_mode == "mix":
        complex_ = index % 2 == 1
    else:
        complex_ = complex_mode == "complex"
    seed_a = trial_seed(seed, 3 * index)
    seed_b = trial_seed(seed, 3 * index + 1)
    seed_x = trial_seed(seed, 3 * index + 2)
    A = gen_pd(seed_a, dim, cond_max, complex_)
    B = gen_pd(seed_b, dim, cond_max, complex_)
    X = gen_general(seed_x, dim, complex_)
    kinds = (SCHATTEN_1, SCHATTEN_2, SCHATTEN_INF, ky_fan(max(1, dim // 2)))
    kind = kinds[index % 4]
    t = (0.5, 1.0, 2.0)[index % 3]
    return MatrixFixture(
        index=index,
        seed_a=seed_a,
        seed_b=seed_b,
        seed_x=seed_x,
        dim=dim,
        complex_=complex_,
        t=t,
        kind=kind,
        A=A,
        B=B,
        X=X,
        pair=GeometricPair(A, B),
        heinz_ctx=HeinzNormContext(A, B, X, kind),
        cs_ctx=CSNormContext(A, B, X, t, kind),
        sym_ctx=SymmetricNormContext(A, B, X, t, kind),
    )


def _run_geo(fx, v, N, tol_scale):
    if N > 0:
        return None
    return check_geo_mean_refined(fx.A, fx.B, v, tol_scale, pair=fx.pair)


def _run_d(fx, v, N, tol_scale):
    return check_d_matrix(fx.A, fx.B, v, N, tol_scale, pair=fx.pair)


def _run_heinz(fx, v, N, tol_scale):
    return check_heinz_refined(fx.A, fx.B, v, N, tol_scale, pair=fx.pair)


def _run_norm_heinz(fx, v, N, tol_scale):
    return check_norm_heinz(fx.A, fx.B, fx.X, v, N, fx.kind, tol_scale, ctx=fx.heinz_ctx)


def _run_cs(fx, v, N, tol_scale):
    return check_cs_refined(fx.A, fx.B, fx.X, fx.t, v, N, fx.kind, tol_scale, ctx=fx.cs_ctx)


def _run_symmetric(fx, v, N, tol_scale):
    return check_symmetric_power(
        fx.A, fx.B, fx.X, fx.t, 2.0 * v - 1.0, N, fx.kind, tol_scale, ctx=fx.sym_ctx
    )


def _run_inverse(fx, v, N, tol_scale):
    return check_inverse_mean(fx.A, fx.B, v, N, tol_scale, pair=fx.pair)


MATRIX_CHECKERS = {
    "geo_mean_refined": _run_geo,
    "d_matrix": _run_d,
    "heinz_refined": _run_heinz,
    "norm_heinz": _run_norm_heinz,
    "cs_refined": _run_cs,
    "symmetric_power": _run_symmetric,
    "inverse_mean": _run_inverse,
}


def run_matrix_suite(
    n_pairs: int,
    seed: int,
    dim_range=(2, 6),
    max_depth: int = 4,
    tol_scale: float = 1e-8,
    cond_max: float = 1e3,
    complex_mode: str = "mix",
    v_grid=None,
    checkers: dict | None = None,
) -> dict:
    """Run every matrix checker over seeded fixtures on a weight grid."""
    checkers = MATRIX_CHECKERS if checkers is None else checkers
    if v_grid is None:
        v_grid = default_v_grid(max_depth, node_depth_cap=5)
    stats = {name: _RelationStat() for name in checkers}
    flags: list[dict] = []

    for p in range(n_pairs):
        fx = _build_fixture(p, seed, dim_range, complex_mode, cond_max)
        for v in v_grid:
            v = float(v)
            for N in range(max_depth + 1):
                for name, runner in checkers.items():
                    rep = runner(fx, v, N, tol_scale)
                    if rep is None:
                        continue

                    def info(idx, rep=rep, fx=fx):
                        out = dict(rep.params)
                        out.update(fx.describe())
                        out["relation_index"] = int(idx[0])
                        out["theorem"] = rep.theorem
                        return out

                    stats[name].update(rep.witnesses, rep.tol_used, info)
                    if "g_term_flag" in rep.extras:
                        flags.append({**fx.describe(), "v": v, "N": N,
                                      "g_term_min_eig": rep.extras["g_term_min_eig"]})

    families_json = {}
    total_checks = total_violations = 0
    for name, st in stats.items():
        entry = st.to_json()
        entry["passed"] = st.violations == 0
        if st.argmin is not None:
            fixture_index = st.argmin.get("fixture")
            if fixture_index is not None:
                fx = _build_fixture(int(fixture_index), seed, dim_range, complex_mode, cond_max)
                entry["argmin_fixture"] = {
                    "A": matrix_to_json(fx.A.matrix),
                    "B": matrix_to_json(fx.B.matrix),
                    "X": matrix_to_json(fx.X),
                }
        families_json[name] = entry
        total_checks += st.checks
        total_violations += st.violations
    return {
        "passed": total_violations == 0,
        "checks": total_checks,
        "violations": total_violations,
        "families": families_json,
        "psd_flags": flags,
    }


# ---------------------------------------------------------------------------
# combined driver
# ---------------------------------------------------------------------------


def run_suite(cfg: SuiteConfig) -> tuple[int, dict]:
    """Run the configured suites; exit code 0 iff every check passed."""
    cfg.validate()
    report: dict = {"config": cfg.to_json(), "suites": {}}
    passed = True
    t0 = time.perf_counter()
    if cfg.suite in ("scalar", "all"):
        sc = run_scalar_suite(
            trials=cfg.trials,
            seed=cfg.seed,
            max_depth=cfg.max_depth,
            tol_rel=cfg.tol,
            range_exp=cfg.range_exp,
            v_grid=default_v_grid(cfg.max_depth),
        )
        report["suites"]["scalar"] = sc
        passed = passed and sc["passed"]
    if cfg.suite in ("matrix", "all"):
        mx = run_matrix_suite(
            n_pairs=min(cfg.trials, MATRIX_FIXTURE_CAP),
            seed=cfg.seed,
            dim_range=cfg.dim_range,
            max_depth=min(cfg.max_depth, 4),
            tol_scale=cfg.psd_tol,
            cond_max=cfg.cond_max,
            complex_mode=cfg.complex_mode,
        )
        report["suites"]["matrix"] = mx
        passed = passed and mx["passed"]
    report["passed"] = passed
    if cfg.timestamp:
        report["timestamp"] = time.strftime("%Y-%m-%dT%H:%M:%S")
        report["elapsed_seconds"] = time.perf_counter() - t0
    return (0 if passed else 1), report


# ---------------------------------------------------------------------------
# sweeps
# ---------------------------------------------------------------------------


@dataclass
class SweepRow:
    family: str
    a: float
    b: float
    v: float
    N: int
    lhs: float
    bound: float
    slack: float


# family -> (core name, link label, direction); "lower" slack is lhs - bound.
_SWEEP_SPEC = {
    "young_lower": ("young_lower", "refined_lower", "lower"),
    "young_upper": ("young_upper", "upper_sum_form", "upper"),
    "kantorovich": ("kantorovich", "sharpened_lower", "lower"),
    "dragomir": ("dragomir", "log_refined_lower", "lower"),
    "minculete": ("minculete", "log_lower", "lower"),
    "specht": ("specht", "refined_lower", "lower"),
    "d": ("d", "half_exponent_lower", "lower"),
}

SWEEP_FAMILIES = tuple(_SWEEP_SPEC) + ("dragomir_vs_young",)


def sweep_rows(family: str, a: float, b: float, grid: int, depths) -> list[SweepRow]:
    """Rows for every (v, N) on a uniform v grid of ``grid`` points.

    For the comparison family the lhs column holds the plain refined lower
    bound, the bound column the log-corrected one, and slack their
    difference (positive where the log correction wins).
    """
    if family not in SWEEP_FAMILIES:
        raise ValueError(f"unknown sweep family {family!r}; choose from {sorted(SWEEP_FAMILIES)}")
    if grid != int(grid) or grid < 2:
        raise ValueError(f"grid must be an integer >= 2, got {grid!r}")
    vs = [i / (grid - 1) for i in range(int(grid))]
    rows = []
    for N in depths:
        for v in vs:
            if family == "dragomir_vs_young":
                plain = young.CHAIN_CORES["young_lower"](a, b, v, N)
                logc = young.CHAIN_CORES["dragomir"](a, b, v, N)
                lhs = float(dict(plain.links)["refined_lower"])
                bound = float(dict(logc.links)["log_refined_lower"])
                rows.append(SweepRow(family, a, b, v, N, lhs, bound, bound - lhs))
                continue
            core_name, label, direction = _SWEEP_SPEC[family]
            chain = young.CHAIN_CORES[core_name](a, b, v, N)
            lhs = float(chain.lhs)
            bound = float(dict(chain.links)[label])
            slack = lhs - bound if direction == "lower" else bound - lhs
            rows.append(SweepRow(family, a, b, v, N, lhs, bound, slack))
    return rows


def write_sweep_csv(rows: list[SweepRow], path: str) -> None:
    """CSV with 17 significant digits so doubles round-trip exactly."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("family,a,b,v,N,lhs,bound,slack\n")
        for r in rows:
            fh.write(
                f"{r.family},{r.a:.17g},{r.b:.17g},{r.v:.17g},{r.N},"
                f"{r.lhs:.17g},{r.bound:.17g},{r.slack:.17g}\n"
            )
