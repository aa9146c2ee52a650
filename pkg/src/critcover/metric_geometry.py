"""Penalty metrics, torus diameters and covering-number lower bounds.

Every quantity is available through an exact route (Python integers and
:class:`fractions.Fraction` radicands, square roots taken last) and through a
log-domain route built from ``math.lgamma`` that never forms the large
numbers at all.  The two routes are independent, so each one checks the other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

import mpmath

__all__ = [
    "PenaltyMetric",
    "CoveringBoundReport",
    "as_exact",
    "cumulative_binomial",
    "torus_radicand",
    "torus_diameter",
    "log_torus_diameter",
    "diameter_proxy",
    "trivial_bound",
    "lemma_bound",
    "certified_floor_ratio",
    "theorem_bound",
    "bound_ratio_exact",
    "log_bound_ratio_exact",
    "bound_ratio_approx",
    "covering_report",
    "LOG_DOMAIN_MIN_N",
]

# Reports switch their floating fields to the log-domain route above this N.
LOG_DOMAIN_MIN_N = 31

_LOG_PI = math.log(math.pi)


def as_exact(value) -> Fraction:
    """Convert ``value`` (int, Fraction, decimal string or float) to a Fraction.

    Strings are parsed as decimals, so ``"2.1"`` is exactly 21/10 rather than
    the nearest binary float.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a decimal number: {value!r}") from exc
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"non-finite value: {value!r}")
        return Fraction(value)
    raise TypeError(f"cannot interpret {type(value).__name__} as a number")


def _check_k(N: int, k: int) -> None:
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    if not 1 <= k <= N:
        raise ValueError(f"k must lie in [1, N={N}], got {k}")


def _check_base(b: Fraction) -> None:
    if b <= 1:
        raise ValueError(f"base b must exceed 1, got {b}")


def _exp(x: float) -> float:
    # floats saturate to inf; the log-domain value stays available
    try:
        return math.exp(x)
    except OverflowError:
        return math.inf


def _log_rational(q: Fraction) -> float:
    # math.log accepts arbitrarily large ints
    return math.log(q.numerator) - math.log(q.denominator)


@dataclass(frozen=True)
class PenaltyMetric:
    """Diagonal right-invariant metric on su(2^N) with squared length b^(2w).

    The inner product is trace(A^dagger B)/2^N scaled by ``b**(2*weight)`` on
    each Pauli word, so the words are orthonormal when b = 1.
    """

    base_b: Fraction
    n_qubits: int

    def __post_init__(self):
        object.__setattr__(self, "base_b", as_exact(self.base_b))
        if self.n_qubits < 1:
            raise ValueError("n_qubits must be positive")
        _check_base(self.base_b)

    def squared_length(self, weight: int) -> Fraction:
        """Squared length of any Pauli word of the given weight."""
        if not 0 <= weight <= self.n_qubits:
            raise ValueError(f"weight {weight} outside [0, {self.n_qubits}]")
        return self.base_b ** (2 * weight)


def cumulative_binomial(k: int, N: int) -> int:
    """Sum of binomial(N, i) for i = 1..k, exactly."""
    _check_k(N, k)
    return sum(math.comb(N, i) for i in range(1, k + 1))


def torus_radicand(N: int, k: int, b) -> Fraction:
    """Exact value of sum_{i<=k} binomial(N, i) b^(2i), the squared e_k / pi."""
    _check_k(N, k)
    b = as_exact(b)
    _check_base(b)
    b2 = b * b
    return sum((math.comb(N, i) * b2**i for i in range(1, k + 1)), Fraction(0))


def _log_radicand_lgamma(N: int, k: int, b) -> float:
    # log-sum-exp over log binomial(N, i) + 2 i log b, from lgamma only
    log_b = _log_rational(as_exact(b))
    terms = [
        math.lgamma(N + 1) - math.lgamma(i + 1) - math.lgamma(N - i + 1) + 2 * i * log_b
        for i in range(1, k + 1)
    ]
    top = max(terms)
    return top + math.log(math.fsum(math.exp(t - top) for t in terms))


def torus_diameter(N: int, k: int, b) -> float:
    """Diameter e_k = pi * sqrt(radicand) of the torus spanned by <=k-body X words."""
    radicand = torus_radicand(N, k, b)
    try:
        return math.pi * math.sqrt(radicand)
    except OverflowError:
        return _exp(log_torus_diameter(N, k, b))


def log_torus_diameter(N: int, k: int, b) -> float:
    """Natural log of e_k, evaluated without forming the radicand."""
    _check_k(N, k)
    b = as_exact(b)
    _check_base(b)
    return _LOG_PI + 0.5 * _log_radicand_lgamma(N, k, b)


def diameter_proxy(N: int, b) -> float:
    """Default stand-in for the critical diameter: e_N, the full-torus diameter."""
    return torus_diameter(N, N, b)


def trivial_bound(d: float, d_c: float) -> float:
    """Covering a diameter-realising arc by sets of diameter d needs d_c/d of them."""
    if d <= 0 or d_c <= 0:
        raise ValueError("d and d_c must be positive")
    return d_c / d


def lemma_bound(N: int, k: int) -> int:
    """Cohomological lower bound binomial(N, k) on covering T_k at scale b^k."""
    _check_k(N, k)
    return math.comb(N, k)


def _floor_sqrt_rational(q: Fraction) -> int:
    # floor(sqrt(p/q)) == isqrt(floor(p/q))
    return math.isqrt(q.numerator // q.denominator)


def certified_floor_ratio(N: int, k: int, b, d_c=None) -> int:
    """floor(d_c / e_k), certified exactly.

    With the default ``d_c = e_N`` the pi factors cancel and the floor is the
    largest m with m^2 * radicand_k <= radicand_N, decided on rationals.  An
    explicit ``d_c`` is compared against m * pi * sqrt(radicand_k) in interval
    arithmetic, widening precision until the floor is unambiguous.
    """
    r_k = torus_radicand(N, k, b)
    if d_c is None:
        r_n = torus_radicand(N, N, b)
        m = _floor_sqrt_rational(r_n / r_k)
        assert m * m * r_k <= r_n < (m + 1) * (m + 1) * r_k
        return m

    d_c = as_exact(d_c)
    if d_c < 0:
        raise ValueError("d_c must be nonnegative")
    if d_c == 0:
        return 0
    # m <= d_c/(pi sqrt r_k) < m+1, decided on rationals with pi bracketed
    target = d_c * d_c
    prec = 96
    while prec <= 1 << 16:
        with mpmath.workprec(prec):
            m = int(mpmath.floor(mpmath.mpf(d_c.numerator) / d_c.denominator
                                 / (mpmath.pi * mpmath.sqrt(mpmath.mpf(r_k.numerator) / r_k.denominator))))
        pi_lo, pi_hi = _pi_bracket(prec)
        if m * m * pi_hi * pi_hi * r_k <= target < (m + 1) * (m + 1) * pi_lo * pi_lo * r_k:
            return m
        prec *= 2
    raise ArithmeticError("could not certify floor(d_c/e_k)")


def _pi_bracket(prec: int) -> tuple[Fraction, Fraction]:
    saved = mpmath.iv.prec
    try:
        mpmath.iv.prec = prec
        interval = mpmath.iv.pi
        lo, hi = interval.a, interval.b
        return _mpf_to_fraction(lo), _mpf_to_fraction(hi)
    finally:
        mpmath.iv.prec = saved


def _mpf_to_fraction(x) -> Fraction:
    man, exp = mpmath.mpf(x).man_exp
    return Fraction(int(man)) * Fraction(2) ** int(exp)


def theorem_bound(N: int, k: int, b, d_c=None) -> int:
    """floor(d_c / e_k) * binomial(N, k): disjoint torus copies along a diameter arc."""
    return certified_floor_ratio(N, k, b, d_c) * lemma_bound(N, k)


def bound_ratio_exact(N: int, k: int, b) -> float:
    """Topological over trivial bound, (b^k / e_k) * binomial(N, k), keeping pi."""
    return _exp(log_bound_ratio_exact(N, k, b))


def log_bound_ratio_exact(N: int, k: int, b) -> float:
    """Natural log of :func:`bound_ratio_exact` computed from the exact radicand."""
    b = as_exact(b)
    r_k = torus_radicand(N, k, b)
    return (
        k * _log_rational(b)
        + math.log(math.comb(N, k))
        - _LOG_PI
        - 0.5 * _log_rational(r_k)
    )


def bound_ratio_approx(N: int, k: int) -> float:
    """Small-k approximation sqrt(binomial(N, k)) of the ratio (pi dropped)."""
    if N < 1 or not 0 <= k <= N:
        raise ValueError(f"need 0 <= k <= N, got k={k}, N={N}")
    c = math.comb(N, k)
    try:
        return math.sqrt(c)
    except OverflowError:
        return _exp(0.5 * math.log(c))


@dataclass(frozen=True)
class CoveringBoundReport:
    N: int
    b: Fraction
    k: int
    e_k: float
    d_c: float
    scale: float
    trivial_bound: float
    lemma_bound: int
    theorem_bound: int
    ratio_exact: float
    ratio_approx: float
    log_e_k: float
    log_d_c: float
    log_domain: bool
    d_c_overridden: bool

    def as_dict(self) -> dict:
        return {
            "N": self.N,
            "b": str(self.b),
            "k": self.k,
            "e_k": self.e_k,
            "d_c": self.d_c,
            "scale": self.scale,
            "trivial_bound": self.trivial_bound,
            "lemma_bound": self.lemma_bound,
            "theorem_bound": self.theorem_bound,
            "ratio_exact": self.ratio_exact,
            "ratio_approx": self.ratio_approx,
            "log_e_k": self.log_e_k,
            "log_d_c": self.log_d_c,
            "log_domain": self.log_domain,
            "d_c_overridden": self.d_c_overridden,
        }


def covering_report(N: int, k: int, b, d_c=None, scale=None) -> CoveringBoundReport:
    """All covering quantities for one (N, k, b).

    ``scale`` is the covering diameter d; it defaults to b^k, the scale of the
    cohomological lemma.  ``d_c`` defaults to e_N.
    """
    _check_k(N, k)
    b = as_exact(b)
    _check_base(b)
    log_domain = N >= LOG_DOMAIN_MIN_N

    log_e_k = log_torus_diameter(N, k, b)
    if d_c is None:
        log_d_c = log_torus_diameter(N, N, b)
    else:
        d_exact = as_exact(d_c)
        if d_exact <= 0:
            raise ValueError("d_c override must be positive")
        log_d_c = _log_rational(d_exact)

    if log_domain:
        e_k = _exp(log_e_k)
        d_c_val = _exp(log_d_c)
    else:
        e_k = torus_diameter(N, k, b)
        d_c_val = diameter_proxy(N, b) if d_c is None else float(as_exact(d_c))

    scale_exact = b**k if scale is None else as_exact(scale)
    if scale_exact <= 0:
        raise ValueError("scale must be positive")
    trivial = _exp(log_d_c - _log_rational(scale_exact))

    ratio = bound_ratio_exact(N, k, b)
    return CoveringBoundReport(
        N=N,
        b=b,
        k=k,
        e_k=e_k,
        d_c=d_c_val,
        scale=float(scale_exact),
        trivial_bound=trivial,
        lemma_bound=lemma_bound(N, k),
        theorem_bound=theorem_bound(N, k, b, d_c),
        ratio_exact=ratio,
        ratio_approx=bound_ratio_approx(N, k),
        log_e_k=log_e_k,
        log_d_c=log_d_c,
        log_domain=log_domain,
        d_c_overridden=d_c is not None,
    )
