"""Ricci curvature of the exponential penalty metric on SU(2^N).

The orthonormal frame is ``f_I = i P_I / b^w(I)`` over the ``4^N - 1``
non-identity Pauli words.  Pauli products are monomial, so each ordered pair
of anticommuting words brackets onto exactly one third word:

    alpha_{IJK} = <[f_I, f_J], f_K> = -2 s b^(w(K) - w(I) - w(J)),

where ``P_I P_J = i s P_K`` with ``s = +-1``.

The Ricci form uses the unimodular invariant-frame formula

    Ric(X, Y) = -1/2 sum_i <[X, e_i], [Y, e_i]> - 1/2 B(X, Y)
                + 1/4 sum_{i,j} <[e_i, e_j], X> <[e_i, e_j], Y>

with B the Killing form.  Every term is quadratic in alpha, so the left- and
right-invariant metrics (related by inversion) share the same values.
:func:`ricci_matrix_koszul` rebuilds the same form from Levi-Civita
coefficients and the full curvature tensor and serves as the independent check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import scipy.integrate
import scipy.sparse as sp

from .metric_geometry import as_exact
from .pauli_algebra import PauliWord, all_words, commutes, product

__all__ = [
    "CurvatureConsistencyError",
    "StructureConstants",
    "RicciSpectrum",
    "BishopGromovReport",
    "MAX_QUBITS",
    "structure_constants",
    "ricci_matrix",
    "ricci_matrix_koszul",
    "ricci_tensor",
    "ricci_extremes",
    "log_volume_su",
    "log_model_ball_volume",
    "bishop_gromov_bound",
]

MAX_QUBITS = 4
OFFDIAG_TOL = 1e-10


class CurvatureConsistencyError(RuntimeError):
    """The Ricci form failed to be diagonal in the Pauli frame."""


@dataclass(frozen=True)
class StructureConstants:
    """Nonzero alpha_{IJK} as parallel arrays over anticommuting (I, J)."""

    N: int
    b: Fraction
    words: tuple[PauliWord, ...]
    I: np.ndarray
    J: np.ndarray
    K: np.ndarray
    exact: tuple[Fraction, ...]

    @property
    def dimension(self) -> int:
        return len(self.words)

    @property
    def values(self) -> np.ndarray:
        return np.array([float(v) for v in self.exact])

    def as_dict(self) -> dict[tuple[str, str], tuple[str, Fraction]]:
        w = self.words
        return {
            (str(w[i]), str(w[j])): (str(w[k]), v)
            for i, j, k, v in zip(self.I, self.J, self.K, self.exact)
        }

    def dense(self) -> np.ndarray:
        d = self.dimension
        out = np.zeros((d, d, d))
        out[self.I, self.J, self.K] = self.values
        return out


def _check_cap(N: int, cap: int) -> None:
    if N < 1:
        raise ValueError("N must be positive")
    if N > cap:
        raise ValueError(f"N = {N} exceeds the curvature cap of {cap} qubits")


def structure_constants(N: int, b, cap: int = MAX_QUBITS) -> StructureConstants:
    """All nonzero structure constants of su(2^N) in the penalty-orthonormal frame."""
    _check_cap(N, cap)
    b = as_exact(b)
    if b <= 0:
        raise ValueError("b must be positive")
    words = tuple(all_words(N))
    index = {w: n for n, w in enumerate(words)}
    I, J, K, vals = [], [], [], []
    for i, p in enumerate(words):
        for j, q in enumerate(words):
            if commutes(p, q):
                continue
            pq = product(p, q)
            s = 1 if pq.phase_exp == 1 else -1
            k = index[pq.word]
            I.append(i)
            J.append(j)
            K.append(k)
            vals.append(-2 * s * b ** (pq.word.weight - p.weight - q.weight))
    return StructureConstants(
        N, b, words, np.array(I, dtype=np.int64), np.array(J, dtype=np.int64),
        np.array(K, dtype=np.int64), tuple(vals),
    )


def ricci_matrix(sc: StructureConstants) -> np.ndarray:
    """Full Ricci matrix in the orthonormal frame from sparse contractions."""
    d = sc.dimension
    v = sc.values
    # rows X, columns flattened (i, K): alpha_{X i K}
    A = sp.csr_matrix((v, (sc.I, sc.J * d + sc.K)), shape=(d, d * d))
    # rows Y, columns (J, K) holding alpha_{Y K J}
    At = sp.csr_matrix((v, (sc.I, sc.K * d + sc.J)), shape=(d, d * d))
    # rows X, columns (i, j): alpha_{i j X}
    C = sp.csr_matrix((v, (sc.K, sc.I * d + sc.J)), shape=(d, d * d))
    ric = -0.5 * (A @ A.T) - 0.5 * (A @ At.T) + 0.25 * (C @ C.T)
    return np.asarray(ric.todense())


def ricci_matrix_koszul(sc: StructureConstants) -> np.ndarray:
    """Ricci matrix via Levi-Civita coefficients and the curvature tensor.

    Gamma_{ijk} = <nabla_{e_i} e_j, e_k> = (alpha_ijk - alpha_jki + alpha_kij) / 2,
    R(e_a, e_b) e_c = nabla_a nabla_b e_c - nabla_b nabla_a e_c - nabla_[a,b] e_c,
    Ric(b, c) = sum_a <R(e_a, e_b) e_c, e_a>.  Dense, meant for N <= 3.
    """
    a = sc.dense()
    gamma = 0.5 * (a - np.einsum("jki->ijk", a) + np.einsum("kij->ijk", a))
    trace_gamma = np.einsum("ada->d", gamma)
    term1 = np.einsum("bcd,d->bc", gamma, trace_gamma)
    term2 = np.einsum("acd,bda->bc", gamma, gamma)
    term3 = np.einsum("abf,fca->bc", a, gamma)
    return term1 - term2 - term3


@dataclass(frozen=True)
class RicciSpectrum:
    N: int
    b: Fraction
    dimension: int
    diagonal_values: np.ndarray
    max_offdiagonal: float

    @property
    def lambda_min(self) -> float:
        return float(self.diagonal_values.min())

    @property
    def lambda_max(self) -> float:
        return float(self.diagonal_values.max())

    def by_weight(self) -> dict[int, tuple[float, float]]:
        """(min, max) Ricci value among words of each weight."""
        words = all_words(self.N)
        out: dict[int, list[float]] = {}
        for w, val in zip(words, self.diagonal_values):
            out.setdefault(w.weight, []).append(float(val))
        return {k: (min(v), max(v)) for k, v in sorted(out.items())}


def ricci_tensor(N: int, b, cap: int = MAX_QUBITS) -> RicciSpectrum:
    """Ricci form in the Pauli frame; raises if it is not diagonal there."""
    sc = structure_constants(N, b, cap)
    ric = ricci_matrix(sc)
    diag = np.diag(ric).copy()
    off = ric - np.diag(diag)
    max_off = float(np.abs(off).max()) if off.size else 0.0
    if max_off > OFFDIAG_TOL * max(1.0, float(np.abs(diag).max())):
        raise CurvatureConsistencyError(f"off-diagonal Ricci entry {max_off:g}")
    return RicciSpectrum(N, sc.b, sc.dimension, diag, max_off)


def ricci_extremes(N: int, b, cap: int = MAX_QUBITS) -> tuple[float, float]:
    ric = ricci_tensor(N, b, cap)
    return ric.lambda_min, ric.lambda_max


def log_volume_su(n: int) -> float:
    """log volume of SU(n) for the metric trace(A^dagger B)/n.

    Starts from the Frobenius-metric value
    sqrt(n) (2 pi)^((n^2 + n - 2)/2) / prod_{k<n} k!
    and rescales lengths by 1/sqrt(n).  For n = 2 this is the unit 3-sphere, 2 pi^2.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    frob = (
        0.5 * math.log(n)
        + 0.5 * (n * n + n - 2) * math.log(2 * math.pi)
        - sum(math.lgamma(k + 1) for k in range(1, n))
    )
    return frob - 0.5 * (n * n - 1) * math.log(n)


def _log_sn(t: float, kappa: float) -> float:
    if kappa == 0:
        return math.log(t)
    s = math.sqrt(abs(kappa))
    x = s * t
    if kappa < 0:
        # log sinh(x) without overflow
        return x + math.log1p(-math.exp(-2 * x)) - math.log(2) - math.log(s)
    return math.log(math.sin(x)) - math.log(s)


def log_model_ball_volume(dim: int, kappa: float, radius: float) -> float:
    """log volume of a radius-r ball in the simply connected space of curvature kappa."""
    if radius <= 0:
        raise ValueError("radius must be positive")
    m = dim
    log_sphere = math.log(2) + 0.5 * m * math.log(math.pi) - math.lgamma(0.5 * m)
    if kappa > 0:
        radius = min(radius, math.pi / math.sqrt(kappa))
    if kappa == 0:
        return log_sphere + m * math.log(radius) - math.log(m)
    # normalise by the integrand's largest value before integrating
    peak_t = radius if kappa < 0 else min(radius, 0.5 * math.pi / math.sqrt(kappa))
    peak = (m - 1) * _log_sn(peak_t, kappa)

    def integrand(t):
        if t <= 0:
            return 0.0
        if kappa > 0 and t >= math.pi / math.sqrt(kappa):
            return 0.0
        return math.exp((m - 1) * _log_sn(t, kappa) - peak)

    lo = 0.0
    if kappa < 0:
        # log sinh is concave, so the tangent at the endpoint bounds the integrand;
        # everything left of the window contributes below exp(-40) relatively
        s = math.sqrt(-kappa)
        slope = (m - 1) * s / math.tanh(s * radius)
        lo = max(0.0, radius - (40 + math.log1p(radius * slope)) / slope)
    value, _ = scipy.integrate.quad(integrand, lo, radius, points=[peak_t] if lo < peak_t < radius else None,
                                    limit=400, epsabs=0.0, epsrel=1e-12)
    return log_sphere + peak + math.log(value)


@dataclass(frozen=True)
class BishopGromovReport:
    N: int
    b: Fraction
    d: float
    dimension: int
    lambda_min: float
    kappa: float
    model: str
    log_vol_M: float
    log_vol_ball: float
    log_bound: float
    log_vol_reference: float

    @property
    def log_bound_floored(self) -> float:
        """log of the bound after flooring the bound itself at 1."""
        return max(0.0, self.log_bound)

    @property
    def bound(self) -> float:
        return math.exp(self.log_bound_floored)

    def as_dict(self) -> dict:
        return {
            "N": self.N,
            "b": str(self.b),
            "d": self.d,
            "dimension": self.dimension,
            "lambda_min": self.lambda_min,
            "kappa": self.kappa,
            "model": self.model,
            "log_vol_M": self.log_vol_M,
            "log_vol_ball": self.log_vol_ball,
            "log_bound": self.log_bound,
            "log_bound_floored": self.log_bound_floored,
            "log_vol_reference": self.log_vol_reference,
        }


def bishop_gromov_bound(N: int, b, d: float, vol_reference: float | None = None,
                        spectrum: RicciSpectrum | None = None) -> BishopGromovReport:
    """Volume lower bound vol(M) / vol(ball) on the covering number C(d).

    The ball volume is bounded above by Bishop-Gromov with the comparison
    curvature ``lambda_min / (dim - 1)`` at radius ``d`` (twice the radius of a
    diameter-d set).  ``vol_reference`` is the volume of SU(2^N) at b = 1 and
    defaults to :func:`log_volume_su`'s normalisation; penalising each word
    multiplies the volume by b^w, giving the b^(3N 4^(N-1)) factor.
    """
    if d <= 0:
        raise ValueError("d must be positive")
    b = as_exact(b)
    ric = spectrum if spectrum is not None else ricci_tensor(N, b)
    dim = ric.dimension
    kappa = ric.lambda_min / (dim - 1)
    log_ref = log_volume_su(2**N) if vol_reference is None else math.log(vol_reference)
    total_weight = 3 * N * 4 ** (N - 1)
    log_b = math.log(b.numerator) - math.log(b.denominator)
    log_vol_M = total_weight * log_b + log_ref
    log_ball = log_model_ball_volume(dim, kappa, d)
    model = "hyperbolic" if kappa < 0 else ("spherical" if kappa > 0 else "euclidean")
    return BishopGromovReport(
        N=N, b=b, d=float(d), dimension=dim, lambda_min=ric.lambda_min, kappa=kappa,
        model=model, log_vol_M=log_vol_M, log_vol_ball=log_ball,
        log_bound=log_vol_M - log_ball, log_vol_reference=log_ref,
    )
