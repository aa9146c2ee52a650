import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from critcover.metric_geometry import (
    PenaltyMetric,
    as_exact,
    bound_ratio_approx,
    bound_ratio_exact,
    covering_report,
    cumulative_binomial,
    diameter_proxy,
    lemma_bound,
    log_bound_ratio_exact,
    log_torus_diameter,
    theorem_bound,
    torus_diameter,
    torus_radicand,
    trivial_bound,
)


def mp_floor_ratio(N, k, b, d_c=None, dps=60):
    """Independent high-precision floor(d_c / e_k)."""
    with mpmath.workdps(dps):
        def e(kk):
            return mpmath.pi * mpmath.sqrt(sum(math.comb(N, i) * mpmath.mpf(b) ** (2 * i)
                                               for i in range(1, kk + 1)))
        top = e(N) if d_c is None else mpmath.mpf(d_c)
        return int(mpmath.floor(top / e(k)))


class TestExactParsing:
    def test_decimal_strings_are_exact(self):
        assert as_exact("2.1") == Fraction(21, 10)
        assert as_exact(4) == 4
        assert as_exact(Fraction(3, 2)) == Fraction(3, 2)

    @pytest.mark.parametrize("bad", ["abc", float("nan"), True])
    def test_rejects(self, bad):
        with pytest.raises((ValueError, TypeError)):
            as_exact(bad)


def test_penalty_metric():
    m = PenaltyMetric(4, 3)
    assert m.squared_length(0) == 1
    assert m.squared_length(2) == 256
    with pytest.raises(ValueError):
        PenaltyMetric(1, 3)
    with pytest.raises(ValueError):
        m.squared_length(4)


class TestCumulativeBinomial:
    @pytest.mark.parametrize("k, N, value", [(1, 4, 4), (2, 4, 10), (4, 4, 15)])
    def test_values(self, k, N, value):
        assert cumulative_binomial(k, N) == value

    def test_recurrence_and_identity(self):
        for N in range(2, 61):
            assert cumulative_binomial(N, N) == 2**N - 1
            for k in range(2, N + 1):
                assert cumulative_binomial(k, N) == cumulative_binomial(k - 1, N) + math.comb(N, k)

    @pytest.mark.parametrize("k, N", [(0, 3), (4, 3)])
    def test_range(self, k, N):
        with pytest.raises(ValueError):
            cumulative_binomial(k, N)


class TestTorusDiameter:
    @pytest.mark.parametrize("b", [2, 3, Fraction(5, 2)])
    def test_one_qubit(self, b):
        assert torus_diameter(1, 1, b) == pytest.approx(math.pi * float(b), rel=1e-15)

    def test_anchor_40pi(self):
        assert torus_radicand(4, 2, 4) == 1600
        assert abs(torus_diameter(4, 2, 4) - 40 * math.pi) < 1e-9

    def test_full_torus(self):
        assert torus_radicand(4, 4, 4) == 64 + 1536 + 16384 + 65536 == 83520
        assert torus_diameter(4, 4, 4) == pytest.approx(math.pi * math.sqrt(83520), rel=1e-15)
        assert diameter_proxy(4, 4) == torus_diameter(4, 4, 4)
        assert diameter_proxy(1, 2) == pytest.approx(2 * math.pi)

    def test_monotone(self):
        for b in (2, 4, 8):
            for N in range(1, 21):
                e = [torus_diameter(N, k, b) for k in range(1, N + 1)]
                assert all(x < y for x, y in zip(e, e[1:]))
                if N < 20:
                    for k in range(1, N + 1):
                        assert torus_diameter(N, k, b) < torus_diameter(N + 1, k, b)
            if b < 8:
                assert torus_diameter(5, 3, b) < torus_diameter(5, 3, 2 * b)

    def test_log_domain_agreement(self):
        for b in (2, 4, Fraction(3, 2), "1.25"):
            for N in range(1, 31):
                for k in range(1, N + 1):
                    exact = torus_diameter(N, k, b)
                    logged = math.exp(log_torus_diameter(N, k, b))
                    assert abs(logged - exact) <= 1e-12 * exact

    def test_large_N_does_not_overflow(self):
        val = log_torus_diameter(2000, 1500, 4)
        assert math.isfinite(val)
        assert torus_diameter(2000, 1500, 4) == math.inf
        assert math.isfinite(torus_diameter(2000, 3, 4))


class TestBounds:
    def test_trivial(self):
        assert trivial_bound(5.0, 5.0) == 1
        assert trivial_bound(16, 907.9148415897732) == pytest.approx(56.7447, rel=1e-5)
        assert trivial_bound(8, 100) == 2 * trivial_bound(16, 100)
        with pytest.raises(ValueError):
            trivial_bound(0, 1)

    @pytest.mark.parametrize("N, k, value", [(4, 2, 6), (7, 7, 1), (100, 5, 75287520)])
    def test_lemma(self, N, k, value):
        assert lemma_bound(N, k) == value

    @pytest.mark.parametrize("N, k, b, value", [(4, 2, 4, 42), (4, 4, 4, 1), (4, 1, 4, 144)])
    def test_theorem_anchors(self, N, k, b, value):
        assert theorem_bound(N, k, b) == value
        assert value == mp_floor_ratio(N, k, b) * math.comb(N, k)

    def test_theorem_matches_mp_oracle_grid(self):
        for b in (2, 3, 4, Fraction(3, 2)):
            for N in range(1, 13):
                for k in range(1, N + 1):
                    expected = mp_floor_ratio(N, k, float(b)) * math.comb(N, k)
                    assert theorem_bound(N, k, b) == expected
                    assert theorem_bound(N, k, b) >= lemma_bound(N, k)

    def test_override_d_c(self):
        assert theorem_bound(4, 2, 4, d_c=1000) == 7 * 6
        assert theorem_bound(4, 2, 4, d_c=10) == 0
        assert theorem_bound(4, 2, 4, d_c=0) == 0
        # 40 pi * 3 = 376.99111843...
        assert theorem_bound(4, 2, 4, d_c="376.9911184") == 2 * 6
        assert theorem_bound(4, 2, 4, d_c="376.9911185") == 3 * 6

    @settings(max_examples=60, deadline=None)
    @given(st.integers(1, 9), st.integers(1, 9), st.integers(2, 6),
           st.decimals(min_value=1, max_value=10**6, places=3))
    def test_override_against_oracle(self, N, k, b, d_c):
        k = min(k, N)
        assert theorem_bound(N, k, b, d_c=str(d_c)) == mp_floor_ratio(N, k, b, str(d_c)) * math.comb(N, k)


class TestRatios:
    def test_one_qubit(self):
        for b in (2, 5):
            assert bound_ratio_exact(1, 1, b) == pytest.approx(1 / math.pi, rel=1e-14)

    def test_small_value(self):
        assert bound_ratio_exact(4, 2, 4) == pytest.approx(16 * 6 / (40 * math.pi), rel=1e-14)

    @pytest.mark.parametrize("N, k, b", [(100, 5, 4), (400, 3, 2)])
    def test_approximation_quality(self, N, k, b):
        q = bound_ratio_exact(N, k, b) * math.pi / bound_ratio_approx(N, k)
        assert 0.98 <= q <= 1.02

    def test_approx_values(self):
        assert bound_ratio_approx(7, 7) == 1
        assert bound_ratio_approx(4, 2) == pytest.approx(math.sqrt(6))
        assert bound_ratio_approx(100, 5) == pytest.approx(8676.8, abs=0.05)
        assert math.isqrt(75287520) == 8676

    def test_log_ratio(self):
        assert math.exp(log_bound_ratio_exact(6, 3, 3)) == pytest.approx(
            3**3 * 20 / (math.pi * math.sqrt(6 * 9 + 15 * 81 + 20 * 729)), rel=1e-13)


class TestReport:
    def test_four_two_four(self):
        r = covering_report(4, 2, 4)
        assert r.e_k == pytest.approx(40 * math.pi)
        assert r.theorem_bound == 42
        assert r.lemma_bound == 6
        assert r.e_k <= r.d_c
        assert r.theorem_bound == math.floor(r.d_c / r.e_k) * r.lemma_bound
        assert r.trivial_bound == pytest.approx(r.d_c / 16)
        assert not r.log_domain

    def test_one_one_two(self):
        r = covering_report(1, 1, 2)
        assert r.e_k == pytest.approx(2 * math.pi)
        assert r.lemma_bound == 1
        assert r.ratio_exact == pytest.approx(1 / math.pi)

    def test_large_uses_log_domain(self):
        r = covering_report(100, 5, 4)
        assert r.log_domain
        assert r.ratio_approx == pytest.approx(8676.8, abs=0.05)
        assert r.e_k == pytest.approx(torus_diameter(100, 5, 4), rel=1e-12)

    def test_log_and_exact_fields_agree(self):
        for N in range(1, 31):
            for k in range(1, N + 1):
                r = covering_report(N, k, 3)
                assert math.exp(r.log_e_k) == pytest.approx(r.e_k, rel=1e-12)
                assert math.exp(r.log_d_c) == pytest.approx(r.d_c, rel=1e-12)

    def test_override_passthrough(self):
        r = covering_report(4, 2, 4, d_c=1000)
        assert r.d_c == 1000 and r.d_c_overridden
        assert r.theorem_bound == 42
