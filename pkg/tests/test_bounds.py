"""Bound functions, ratio sweeps, and chi-quantile limit tables."""

from __future__ import annotations

import math

import numpy as np
import pytest

from gaussbalance.bounds import (
    bound_profile,
    f_alpha,
    f_beta,
    f_covering,
    limit_lower_bounds,
    ratio_infimum,
)
from gaussbalance.errors import DomainError
from gaussbalance.gaussian_core import cdf, chi_quantile, inv_cdf, inv_psi


class TestBoundValues:
    def test_at_half(self):
        assert f_covering(0.5) == pytest.approx(1.0 / (2.0 * 0.6744897501960817), abs=1e-12)
        assert f_covering(0.5) == pytest.approx(0.74130, abs=1e-5)

    def test_beta_at_quarter(self):
        assert f_beta(0.25) == pytest.approx(5.0 * 0.6744897501960817 / 0.3186393639643751,
                                             abs=1e-9)
        assert f_beta(0.25) == pytest.approx(10.583, abs=1e-3)

    def test_constant_above_half(self):
        assert f_covering(0.7) == f_covering(0.51) == f_covering(0.99)
        assert f_beta(0.7) == 5.0

    def test_equality_f_falpha(self):
        for p in np.linspace(0.001, 0.999, 997):
            assert f_covering(float(p)) == f_alpha(float(p))

    def test_ratio_beta_alpha(self):
        target = 10.0 * inv_psi(0.5)
        for p in np.linspace(0.001, 0.5, 500):
            assert f_beta(float(p)) / f_alpha(float(p)) == pytest.approx(target, abs=1e-12)

    def test_monotone_nonincreasing(self):
        grid = np.linspace(0.001, 0.999, 1000)
        for fn in (f_covering, f_alpha, f_beta):
            vals = [fn(float(p)) for p in grid]
            assert all(a >= b - 1e-12 for a, b in zip(vals, vals[1:]))


class TestBoundProfile:
    def test_above_half_fields(self):
        prof = bound_profile(0.75, n_list=(2,))
        z = inv_cdf(0.75)
        assert prof.q == pytest.approx(cdf(math.sqrt(2.0) * z), abs=1e-15)
        p_2 = cdf(0.5 * z)
        assert prof.f_n[2] == pytest.approx(1.0 / (2.0 * inv_psi(p_2)), abs=1e-12)
        assert p_2 == pytest.approx(0.6320, abs=1e-4)
        assert prof.r_ball[2] == pytest.approx(math.sqrt(2.0) / (2.0 * z), abs=1e-12)

    def test_below_half_fields_absent(self):
        prof = bound_profile(0.25, n_list=(2, 3))
        assert prof.q is None and prof.f_n == {} and prof.r_ball == {}
        assert prof.t_pn[2] == pytest.approx(inv_psi(0.25 ** 0.5), abs=1e-12)

    def test_f_n_limit_large_n(self):
        prof = bound_profile(0.75, n_list=(40,))
        c = 1.0 / (2.0 * inv_psi(0.5))
        assert prof.f_n[40] == pytest.approx(c, abs=1e-6)

    def test_ball_vs_f_n_comparison(self):
        # 2 r_ball < f_n requires p extremely close to 1 at n = 5: it fails
        # at p = 0.999 and holds at p = 1 - 1e-15.
        for p, expected in ((0.999, False), (1.0 - 1e-15, True)):
            prof = bound_profile(p, n_list=(5,))
            assert (2.0 * prof.r_ball[5] < prof.f_n[5]) is expected


class TestRatioInfimum:
    def test_infimum_below_sample(self):
        for n in (100, 10_000):
            inf_val, _ = ratio_infimum(n, grid=200)
            sample = inv_psi(0.5 ** (1.0 / n)) / (2.0 * inv_psi(0.5))
            assert inf_val <= sample + 1e-12

    def test_normalized_band(self):
        for n in (100, 10_000, 1_000_000):
            inf_val, argmin = ratio_infimum(n, grid=200)
            norm = inf_val / math.sqrt(math.log(n))
            assert 0.2 <= norm <= 5.0, (n, norm)
            assert 0.0 < argmin <= 0.5

    def test_lower_band_form(self):
        for n in (100, 10_000, 1_000_000):
            inf_val, _ = ratio_infimum(n, grid=200)
            assert 2.0 * inf_val >= math.sqrt(math.log(n))

    def test_domain(self):
        with pytest.raises(DomainError):
            ratio_infimum(1)


class TestLimitLowerBounds:
    def test_bound_at_thousand(self):
        rows = limit_lower_bounds(0.99, (1000,))
        floor = 1.0 - 2.0 * math.sqrt(abs(math.log(0.01))) / math.sqrt(1000.0)
        assert floor == pytest.approx(0.8642, abs=1e-4)
        assert rows[0].beta_ratio >= floor

    def test_ratio_increases_toward_one(self):
        rows = limit_lower_bounds(0.99, (10, 100, 1000))
        ratios = [r.beta_ratio for r in rows]
        assert ratios[0] < ratios[1] < ratios[2] < 1.0

    def test_alpha_is_half_beta(self):
        for row in limit_lower_bounds(0.9, (5, 50)):
            assert row.alpha_ratio == pytest.approx(0.5 * row.beta_ratio, abs=1e-15)

    def test_radius_matches_chi_quantile(self):
        rows = limit_lower_bounds(0.99, (100,))
        assert rows[0].radius == pytest.approx(chi_quantile(100, 0.99), abs=1e-12)
