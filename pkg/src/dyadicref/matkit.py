"""Hermitian positive-definite matrix numerics.

Spectral decomposition with eager caching, functional calculus, weighted
arithmetic/geometric/Heinz means, unitarily invariant norms from singular
values, and ordering checks in the positive-semidefinite sense.  Real
symmetric input stays in real arithmetic; complex Hermitian input takes the
complex path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dyadic import ScalarFn, _check_unit

__all__ = [
    "NotHermitianError",
    "NotPositiveDefiniteError",
    "DimensionMismatchError",
    "HermitianPD",
    "NormKind",
    "SCHATTEN_1",
    "SCHATTEN_2",
    "SCHATTEN_INF",
    "ky_fan",
    "decompose",
    "calculus",
    "frac_power",
    "nabla",
    "sharp",
    "sharp_f",
    "heinz",
    "loewner_leq",
    "singular_values",
    "ui_norm",
    "abs_power_norm",
    "f_min",
    "f_max",
    "hermitian_part",
    "matrix_to_json",
    "matrix_from_json",
]

HERMITIAN_RTOL = 1e-12
MAX_DIM = 64


class NotHermitianError(ValueError):
    pass


class NotPositiveDefiniteError(ValueError):
    pass


class DimensionMismatchError(ValueError):
    pass


def hermitian_part(M: np.ndarray) -> np.ndarray:
    return 0.5 * (M + M.conj().T)


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


def _as_square(matrix) -> np.ndarray:
    A = np.asarray(matrix)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix entries must be finite")
    if np.iscomplexobj(A):
        return A.astype(np.complex128, copy=True)
    return A.astype(np.float64, copy=True)


def _check_hermitian(A: np.ndarray) -> np.ndarray:
    scale = float(np.max(np.abs(A))) if A.size else 0.0
    dev = float(np.max(np.abs(A - A.conj().T))) if A.size else 0.0
    if dev > HERMITIAN_RTOL * max(scale, np.finfo(float).tiny):
        raise NotHermitianError(
            f"matrix deviates from Hermitian by {dev:.3e} (scale {scale:.3e})"
        )
    return hermitian_part(A)


class HermitianPD:
    """Dense Hermitian positive-definite matrix with cached eigen data.

    The spectral decomposition is computed at construction and is the single
    source for every derived quantity; instances are immutable, so sharing
    them across threads is safe.
    """

    def __init__(self, matrix, *, _spectrum=None):
        A = _check_hermitian(_as_square(matrix))
        if _spectrum is None:
            w, U = np.linalg.eigh(A)
        else:
            w, U = _spectrum
        floor = A.shape[0] * np.finfo(float).eps * float(w[-1]) if A.size else 0.0
        if A.size == 0 or float(w[0]) <= floor:
            raise NotPositiveDefiniteError(
                f"smallest eigenvalue {float(w[0]) if A.size else 0.0:.3e} "
                f"is not safely positive (floor {floor:.3e})"
            )
        self._matrix = _freeze(A)
        self._w = _freeze(np.asarray(w, dtype=float))
        self._U = _freeze(U)
        self._powers: dict[float, "HermitianPD"] = {}

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def dim(self) -> int:
        return self._matrix.shape[0]

    @property
    def eigenvalues(self) -> np.ndarray:
        return self._w

    @property
    def eigenvectors(self) -> np.ndarray:
        return self._U

    @property
    def spectral_norm(self) -> float:
        return float(self._w[-1])

    @property
    def is_complex(self) -> bool:
        return np.iscomplexobj(self._matrix)

    def __repr__(self):
        kind = "complex" if self.is_complex else "real"
        return f"HermitianPD(dim={self.dim}, {kind}, cond={self._w[-1] / self._w[0]:.3e})"

    def _sandwich(self, values: np.ndarray) -> np.ndarray:
        out = (self._U * values) @ self._U.conj().T
        return hermitian_part(out)

    def apply(self, f: ScalarFn) -> np.ndarray:
        """Functional calculus: f applied pointwise to the spectrum."""
        vals = np.array([f(float(lam)) for lam in self._w], dtype=float)
        return self._sandwich(vals)

    def power(self, p: float) -> "HermitianPD":
        """Fractional power sharing this matrix's eigenvectors; cached by exponent."""
        p = float(p)
        cached = self._powers.get(p)
        if cached is not None:
            return cached
        vals = self._w ** p
        M = self._sandwich(vals)
        order = np.argsort(vals)
        out = HermitianPD(M, _spectrum=(vals[order], self._U[:, order]))
        self._powers[p] = out
        return out

    def inv(self) -> "HermitianPD":
        return self.power(-1.0)


def decompose(A: HermitianPD) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending, all positive) and unitary eigenvectors."""
    return A.eigenvalues, A.eigenvectors


def calculus(A: HermitianPD, f: ScalarFn) -> np.ndarray:
    """U f(Lambda) U*; Hermitian by construction, positive definite if f > 0."""
    return A.apply(f)


def frac_power(A: HermitianPD, v: float) -> HermitianPD:
    return A.power(v)


def _same_dim(A, B):
    if A.dim != B.dim:
        raise DimensionMismatchError(f"dimension mismatch: {A.dim} vs {B.dim}")


def nabla(A: HermitianPD, B: HermitianPD, v: float) -> HermitianPD:
    """Weighted arithmetic mean (1-v) A + v B."""
    _same_dim(A, B)
    v = float(_check_unit(v))
    return HermitianPD((1.0 - v) * A.matrix + v * B.matrix)


def _mid_conjugation(A: HermitianPD, B: HermitianPD) -> HermitianPD:
    Aih = A.power(-0.5).matrix
    return HermitianPD(Aih @ B.matrix @ Aih)


def sharp(A: HermitianPD, B: HermitianPD, v: float) -> HermitianPD:
    """Weighted geometric mean A^(1/2) (A^(-1/2) B A^(-1/2))^v A^(1/2)."""
    _same_dim(A, B)
    v = float(_check_unit(v))
    Ah = A.power(0.5).matrix
    mid = _mid_conjugation(A, B).power(v).matrix
    return HermitianPD(Ah @ mid @ Ah)


def sharp_f(A: HermitianPD, B: HermitianPD, f: ScalarFn) -> np.ndarray:
    """A^(1/2) f(A^(-1/2) B A^(-1/2)) A^(1/2) by the functional calculus."""
    _same_dim(A, B)
    Ah = A.power(0.5).matrix
    return hermitian_part(Ah @ _mid_conjugation(A, B).apply(f) @ Ah)


def heinz(A: HermitianPD, B: HermitianPD, v: float) -> np.ndarray:
    """Heinz mean: average of the v- and (1-v)-weighted geometric means."""
    _same_dim(A, B)
    v = float(_check_unit(v))
    return sharp_f(A, B, lambda x: 0.5 * (x ** v + x ** (1.0 - v)))


def f_min(x: float) -> float:
    """min(1, x) ln(x)^2 on x > 0."""
    if x <= 0.0:
        raise ValueError(f"argument must be positive, got {x!r}")
    return min(1.0, x) * math.log(x) ** 2


def f_max(x: float) -> float:
    """max(1, x) ln(x)^2 on x > 0."""
    if x <= 0.0:
        raise ValueError(f"argument must be positive, got {x!r}")
    return max(1.0, x) * math.log(x) ** 2


def _coerce_hermitian(M) -> np.ndarray:
    if isinstance(M, HermitianPD):
        return M.matrix
    return _check_hermitian(_as_square(M))


def loewner_leq(A, B, tol_scale: float = 1e-8) -> tuple[bool, float]:
    """Whether B - A is positive semidefinite up to a scaled tolerance.

    Returns (verdict, witness) where the witness is the smallest eigenvalue
    of B - A and the threshold is -tol_scale times the sum of the two
    spectral norms.
    """
    A = _coerce_hermitian(A)
    B = _coerce_hermitian(B)
    if A.shape != B.shape:
        raise DimensionMismatchError(f"shape mismatch: {A.shape} vs {B.shape}")
    witness = float(np.linalg.eigvalsh(hermitian_part(B - A))[0])
    scale = float(np.linalg.norm(A, 2) + np.linalg.norm(B, 2))
    return witness >= -tol_scale * scale, witness


# ---------------------------------------------------------------------------
# unitarily invariant norms
# ---------------------------------------------------------------------------

_NORM_NAMES = ("schatten-1", "schatten-2", "schatten-inf", "ky-fan")


@dataclass(frozen=True)
class NormKind:
    """Selector for a unitarily invariant norm, applied to singular values."""

    name: str
    k: int | None = None

    def __post_init__(self):
        if self.name not in _NORM_NAMES:
            raise ValueError(f"unknown norm kind {self.name!r}; choose from {_NORM_NAMES}")
        if self.name == "ky-fan":
            if self.k is None or self.k != int(self.k) or self.k < 1:
                raise ValueError("ky-fan norm needs a positive integer k")
        elif self.k is not None:
            raise ValueError(f"{self.name} takes no k parameter")

    def gauge(self, sigma: np.ndarray) -> float:
        """Apply the symmetric gauge to a descending vector of singular values."""
        if self.name == "schatten-1":
            return float(np.sum(sigma))
        if self.name == "schatten-2":
            return float(np.sqrt(np.sum(sigma * sigma)))
        if self.name == "schatten-inf":
            return float(sigma[0]) if sigma.size else 0.0
        if self.k > sigma.size:
            raise ValueError(f"ky-fan k={self.k} exceeds matrix dimension {sigma.size}")
        return float(np.sum(sigma[: self.k]))

    def label(self) -> str:
        return self.name if self.k is None else f"{self.name}({self.k})"


SCHATTEN_1 = NormKind("schatten-1")
SCHATTEN_2 = NormKind("schatten-2")
SCHATTEN_INF = NormKind("schatten-inf")


def ky_fan(k: int) -> NormKind:
    return NormKind("ky-fan", k)


def singular_values(X) -> np.ndarray:
    """Singular values in descending order."""
    X = np.asarray(X)
    if not np.all(np.isfinite(X)):
        raise ValueError("matrix entries must be finite")
    return np.linalg.svd(X, compute_uv=False)


def ui_norm(X, kind: NormKind) -> float:
    """Unitarily invariant norm of X selected by ``kind``."""
    return kind.gauge(singular_values(X))


def abs_power_norm(X, t: float, kind: NormKind) -> float:
    """Norm of |X|^t, i.e. the gauge applied to the singular values to the t."""
    if not t > 0.0:
        raise ValueError(f"power must be positive, got {t!r}")
    return kind.gauge(singular_values(X) ** t)


# ---------------------------------------------------------------------------
# JSON fixture format
# ---------------------------------------------------------------------------


def matrix_to_json(X) -> dict:
    """Row-major fixture dict: {"dim": n, "real": [[...]], "imag": [[...]]}.

    The "imag" key is omitted for real matrices.
    """
    X = np.asarray(X)
    if X.ndim != 2 or X.shape[0] != X.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {X.shape}")
    out = {"dim": int(X.shape[0]), "real": np.real(X).tolist()}
    if np.iscomplexobj(X) and np.any(X.imag != 0.0):
        out["imag"] = np.imag(X).tolist()
    return out


def matrix_from_json(obj: dict) -> np.ndarray:
    """Inverse of matrix_to_json; a missing "imag" key means a real matrix."""
    dim = int(obj["dim"])
    real = np.asarray(obj["real"], dtype=float)
    if real.shape != (dim, dim):
        raise ValueError(f"real part has shape {real.shape}, expected ({dim}, {dim})")
    if "imag" not in obj:
        return real
    imag = np.asarray(obj["imag"], dtype=float)
    if imag.shape != (dim, dim):
        raise ValueError(f"imag part has shape {imag.shape}, expected ({dim}, {dim})")
    return real + 1j * imag
