"""Independent transcriptions of the classical inequality forms.

Written from the literal formulas with Python's power operator and explicit
case splits, deliberately independent of the library's shared kernels, so
agreement with the library is a genuine cross-check and not a tautology.
"""

import math


def r0(v):
    return min(v, 1.0 - v)


def r1(v):
    return min(2.0 * r0(v), 1.0 - 2.0 * r0(v))


def r2(v):
    return min(2.0 * r1(v), 1.0 - 2.0 * r1(v))


def R0(v):
    return 1.0 - r0(v)


def chord(a, b, v):
    return (1.0 - v) * a + v * b


def _sq(a, b):
    return (math.sqrt(a) - math.sqrt(b)) ** 2


def km_lower(a, b, v):
    """Square-term refinement of the weighted arithmetic-geometric bound."""
    return a ** (1.0 - v) * b ** v + r0(v) * _sq(a, b)


def km_upper(a, b, v):
    return a ** (1.0 - v) * b ** v + R0(v) * _sq(a, b)


def zw_lower(a, b, v):
    """Two-level refinement with the quarter-power square terms."""
    quarter = (a * b) ** 0.25
    extra = (math.sqrt(a) - quarter) ** 2 if v < 0.5 else (quarter - math.sqrt(b)) ** 2
    return km_lower(a, b, v) + r1(v) * extra


def K1(a, b):
    return (math.sqrt(a) + math.sqrt(b)) ** 2 / (4.0 * math.sqrt(a * b))


def K2(a, b):
    return (a ** 0.25 + b ** 0.25) ** 2 / (4.0 * (a * b) ** 0.25)


def wu_zhao_lower(a, b, v):
    return K1(a, b) ** r1(v) * a ** (1.0 - v) * b ** v + r0(v) * _sq(a, b)


def wu_zhao_upper(a, b, v):
    return K1(a, b) ** (-r1(v)) * a ** (1.0 - v) * b ** v + R0(v) * _sq(a, b)


def liao_wu_lower(a, b, v):
    quarter = (a * b) ** 0.25
    extra = (quarter - math.sqrt(a)) ** 2 if v < 0.5 else (math.sqrt(b) - quarter) ** 2
    return (
        K2(a, b) ** r2(v) * a ** (1.0 - v) * b ** v
        + r0(v) * _sq(a, b)
        + r1(v) * extra
    )


def liao_wu_upper(a, b, v):
    quarter = (a * b) ** 0.25
    extra = (quarter - math.sqrt(b)) ** 2 if v < 0.5 else (math.sqrt(a) - quarter) ** 2
    return (
        K2(a, b) ** (-r2(v)) * a ** (1.0 - v) * b ** v
        + R0(v) * _sq(a, b)
        - r1(v) * extra
    )


def dragomir_lower(a, b, v):
    return a ** (1.0 - v) * b ** v + 0.5 * v * (1.0 - v) * math.log(b / a) ** 2 * min(a, b)


def dragomir_upper(a, b, v):
    return a ** (1.0 - v) * b ** v + 0.5 * v * (1.0 - v) * math.log(b / a) ** 2 * max(a, b)


def alpha(v):
    return 0.5 * v * (1.0 - v) - 0.25 * r0(v)


def minculete_lower(a, b, v):
    """Log-squared refinement; stated for a, b >= 1."""
    return a ** (1.0 - v) * b ** v + r0(v) * _sq(a, b) + alpha(v) * math.log(b / a) ** 2


def minculete_upper(a, b, v):
    return a ** (1.0 - v) * b ** v + R0(v) * _sq(a, b) + alpha(v) * math.log(b / a) ** 2


def specht_S(t):
    """t^(1/(t-1)) / (e ln t^(1/(t-1))), with the logarithm written out."""
    if t == 1.0:
        return 1.0
    L = math.log(t) / (t - 1.0)
    return t ** (1.0 / (t - 1.0)) / (math.e * L)


def specht_chain_lower(a, b, v):
    c = b / a
    return specht_S(c ** r0(v)) * a ** (1.0 - v) * b ** v


def specht_chain_upper(a, b, v):
    c = b / a
    return specht_S(c) * a ** (1.0 - v) * b ** v


def interp_linear(f, N, v):
    """Piecewise-linear interpolation of f at the level-N nodes via numpy."""
    import numpy as np

    nodes = np.ldexp(np.arange(2 ** N + 1, dtype=float), -N)
    return float(np.interp(v, nodes, [f(float(x)) for x in nodes]))
