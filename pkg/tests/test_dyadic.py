import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dyadicref.dyadic import (
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

import oracles


# Battery of convex functions on [0, 1] used across the interpolation tests.
BATTERY = {
    "square": lambda v: v * v,
    "power_chord_1_4": lambda v: 4.0 ** v,
    "power_chord_9_2": lambda v: 9.0 ** (1.0 - v) * 2.0 ** v,
    "reciprocal": lambda v: 1.0 / (1.0 - v + 4.0 * v),
    "heinz": lambda v: 0.5 * (3.0 ** v + 3.0 ** (1.0 - v)),
}


class TestTentWeights:
    def test_level_zero_is_distance_to_ends(self):
        assert r_closed(0, 0.3) == 0.3
        assert r_recursive(0, 0.7) == pytest.approx(0.3, abs=1e-15)

    def test_recursion_examples(self):
        assert r_closed(1, 0.25) == 0.5
        assert r_closed(2, 0.625) == 0.5
        assert r_recursive(1, 0.5) == 0.0

    def test_zero_at_every_node(self):
        for n in range(0, 9):
            for k in range(0, 2 ** n + 1):
                v = math.ldexp(k, -n)
                assert r_closed(n, v) == 0.0
                assert r_recursive(n, v) == 0.0

    def test_closed_equals_recursive_on_dyadic_grid(self):
        # every point of the 4097-point grid is a level-12 dyadic rational,
        # where both routes are exact in binary floating point
        grid = np.ldexp(np.arange(4097, dtype=float), -12)
        for n in range(13):
            assert np.array_equal(r_closed(n, grid), r_recursive(n, grid))

    def test_closed_equals_recursive_off_grid(self):
        rng = np.random.default_rng(2026)
        v = rng.uniform(0.0, 1.0, size=2000)
        for n in range(13):
            assert np.max(np.abs(r_closed(n, v) - r_recursive(n, v))) <= 1e-15

    @given(st.floats(min_value=0.0, max_value=1.0), st.integers(min_value=0, max_value=12))
    def test_symmetry(self, v, n):
        assert r_closed(n, v) == pytest.approx(r_closed(n, 1.0 - v), abs=1e-12)

    @given(st.floats(min_value=0.0, max_value=1.0), st.integers(min_value=0, max_value=12))
    def test_range_and_agreement(self, v, n):
        r = r_closed(n, v)
        assert 0.0 <= r <= 0.5
        assert r == pytest.approx(r_recursive(n, v), abs=1e-15)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            r_closed(0, -0.1)
        with pytest.raises(ValueError):
            r_closed(0, 1.1)
        with pytest.raises(ValueError):
            r_closed(-1, 0.5)
        with pytest.raises(ValueError):
            r_closed(0, float("nan"))


class TestCells:
    def test_cell_assignment(self):
        assert cell_index(0, 0.0) == 1
        assert cell_index(3, 0.0) == 1
        assert cell_index(1, 1.0) == 2
        assert cell_index(2, 0.3) == 2
        # half-open cells: a node belongs to the cell it closes
        assert cell_index(2, 0.25) == 1

    def test_coord_validation(self):
        with pytest.raises(ValueError):
            DyadicCoord(2, 0)
        with pytest.raises(ValueError):
            DyadicCoord(2, 5)
        c = DyadicCoord(2, 3)
        assert (c.lo, c.hi, c.mid) == (0.5, 0.75, 0.625)
        assert c.mirrored() == DyadicCoord(2, 2)


class TestDelta:
    def test_affine_vanishes(self):
        f = lambda v: 3.0 - 2.0 * v
        for n in range(4):
            for k in range(1, 2 ** n + 1):
                assert delta(f, DyadicCoord(n, k)) == pytest.approx(0.0, abs=1e-15)

    def test_square(self):
        assert delta(lambda v: v * v, DyadicCoord(0, 1)) == pytest.approx(0.5)

    def test_exponential_chord_equals_square_gap(self):
        f = lambda v: 4.0 ** v
        assert delta(f, DyadicCoord(0, 1)) == pytest.approx((1.0 - 2.0) ** 2)


class TestInterpolant:
    def test_depth_zero_is_chord(self):
        f = BATTERY["reciprocal"]
        for v in (0.0, 0.17, 0.5, 0.99):
            assert phi(f, 0, v) == pytest.approx((1 - v) * f(0.0) + v * f(1.0), rel=1e-15)

    def test_node_exactness_is_exact(self):
        for f in BATTERY.values():
            for N in range(0, 7):
                for k in range(0, 2 ** N + 1):
                    v = math.ldexp(k, -N)
                    assert phi(f, N, v) == f(v)

    def test_square_midpoint(self):
        assert phi(lambda v: v * v, 1, 0.25) == pytest.approx(0.125)

    def test_matches_numpy_interp_oracle(self):
        rng = np.random.default_rng(7)
        for name, f in BATTERY.items():
            for N in range(0, 7):
                for v in rng.uniform(0, 1, size=40):
                    want = oracles.interp_linear(f, N, float(v))
                    assert phi(f, N, float(v)) == pytest.approx(want, rel=1e-12, abs=1e-12), (name, N, v)


class TestCorrectionSum:
    def test_empty_sum_is_zero(self):
        assert correction_sum(BATTERY["square"], 0, 0.37) == 0.0

    def test_square_example(self):
        assert correction_sum(lambda v: v * v, 1, 0.25) == pytest.approx(0.125)

    def test_nonnegative_for_convex(self):
        rng = np.random.default_rng(11)
        for f in BATTERY.values():
            for N in range(0, 7):
                for v in rng.uniform(0, 1, size=25):
                    assert correction_sum(f, N, float(v)) >= 0.0

    def test_chord_identity(self):
        rng = np.random.default_rng(13)
        for f in BATTERY.values():
            for N in range(0, 7):
                for v in rng.uniform(0, 1, size=25):
                    v = float(v)
                    chord = (1 - v) * f(0.0) + v * f(1.0)
                    resid = chord - correction_sum(f, N, v) - phi(f, N, v)
                    assert abs(resid) <= 1e-12 * max(1.0, abs(chord))

    def test_monotone_in_depth(self):
        rng = np.random.default_rng(17)
        for f in BATTERY.values():
            for v in rng.uniform(0, 1, size=25):
                v = float(v)
                prev = 0.0
                for N in range(0, 8):
                    cur = correction_sum(f, N, v)
                    assert cur >= prev - 1e-12
                    prev = cur


class TestJensenRefined:
    def test_square_depth_zero(self):
        lower, upper = jensen_refined(lambda v: v * v, 0, 0.5)
        assert (lower, upper) == (0.25, 0.75)
        assert lower <= 0.5 <= upper

    def test_affine_collapses(self):
        f = lambda v: 2.0 + 3.0 * v
        for N in (0, 2, 5):
            lower, upper = jensen_refined(f, N, 0.3)
            chord = f(0.3)
            assert lower == pytest.approx(chord, rel=1e-15)
            assert upper == pytest.approx(chord, rel=1e-15)

    def test_exponential_chord_depth_one(self):
        lower, _ = jensen_refined(lambda v: 4.0 ** v, 1, 0.25)
        assert lower == pytest.approx(math.sqrt(2.0) + 0.25, rel=1e-14)

    def test_bounds_bracket_chord(self):
        rng = np.random.default_rng(19)
        for f in BATTERY.values():
            chord = lambda v: (1 - v) * f(0.0) + v * f(1.0)
            for N in range(0, 7):
                for v in rng.uniform(0, 1, size=25):
                    v = float(v)
                    lower, upper = jensen_refined(f, N, v)
                    c = chord(v)
                    scale = max(1.0, abs(c))
                    assert lower <= c + 1e-12 * scale
                    assert upper >= c - 1e-12 * scale

    def test_envelope_gap_shrinks_with_depth(self):
        grid = np.linspace(0, 1, 257)
        for f in BATTERY.values():
            prev_gap = math.inf
            for N in range(0, 7):
                vals = np.array([phi(f, N, float(v)) for v in grid])
                exact = np.array([f(float(v)) for v in grid])
                assert np.all(vals >= exact - 1e-12 * (1.0 + np.abs(exact)))
                gap = float(np.max(vals - exact))
                assert gap <= prev_gap + 1e-12
                prev_gap = gap


class TestPiecewiseCheck:
    def test_convex_passes(self):
        assert piecewise_check(lambda v: v * v, 2, 9) is True

    def test_concave_fails(self):
        assert piecewise_check(lambda v: -v * v, 0, 9) is False

    def test_kantorovich_composite(self):
        # convex only on quarter cells, with vanishing level-1 deltas
        K = (1.0 + 2.0) ** 2 / (4.0 * 2.0)
        f = lambda v: K ** r_closed(1, v) * 4.0 ** v
        assert piecewise_check(f, 1, 17) is True

    def test_midpoint_violation_fails(self):
        # convex on each half but the midpoint pokes above the chord
        f = lambda v: abs(v - 0.5) * -1.0 + 0.5
        assert piecewise_check(f, 0, 9) is False

    def test_grid_validation(self):
        with pytest.raises(ValueError):
            piecewise_check(lambda v: v, 0, 2)


class TestNodeCache:
    def test_caches_calls(self):
        calls = []

        def f(x):
            calls.append(x)
            return x * x

        g = node_cached(f)
        assert g(0.25) == 0.0625
        assert g(0.25) == 0.0625
        assert calls == [0.25]

    def test_depth_cap(self):
        with pytest.raises(ValueError):
            phi(lambda v: v, MAX_DEPTH + 1, 0.5)
