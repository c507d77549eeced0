import math

import numpy as np
import pytest
from scipy import stats
from scipy.special import erfc

from poissonfield import (
    CsStableParams,
    DegenerateDistributionError,
    StableParams,
    char_function,
    mixer_params,
    pdf,
    sample_cs_stable,
    sample_stable,
)


def levy_cdf(x, c):
    """CDF of the Levy law with scale c (positive support).

    Matched to dispersion gamma of S(1/2, 1, gamma) through the Laplace
    transform exp(-gamma*sqrt(2s)) == exp(-sqrt(2cs)), i.e. c = gamma^2.
    """
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    pos = x > 0
    out[pos] = erfc(np.sqrt(c / (2.0 * x[pos])))
    return out


def levy_pdf(x, c):
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    pos = x > 0
    xp = x[pos]
    out[pos] = np.sqrt(c / (2.0 * np.pi)) * np.exp(-c / (2.0 * xp)) / xp ** 1.5
    return out


class TestParams:
    def test_validation(self):
        with pytest.raises(ValueError):
            StableParams(0.0, 0.0, 1.0)
        with pytest.raises(ValueError):
            StableParams(2.5, 0.0, 1.0)
        with pytest.raises(ValueError):
            StableParams(1.0, 1.5, 1.0)
        with pytest.raises(ValueError):
            StableParams(1.0, 0.0, -0.1)
        with pytest.raises(ValueError):
            CsStableParams(2.1, 1.0)

    def test_scale(self):
        assert StableParams(0.5, 1.0, 2.0).scale == pytest.approx(4.0)

    def test_marginal(self):
        m = CsStableParams(1.5, 0.7).marginal()
        assert m == StableParams(1.5, 0.0, 0.7)


class TestCharFunction:
    def test_gaussian_case_real(self):
        val = char_function(StableParams(2.0, 0.0, 1.0), 1.0)
        assert val == pytest.approx(math.exp(-1.0))
        assert val.imag == 0.0

    def test_origin_is_one(self):
        for p in [StableParams(0.5, 1.0, 3.0), StableParams(1.0, -0.5, 2.0),
                  StableParams(1.7, 0.2, 0.1)]:
            assert char_function(p, 0.0) == pytest.approx(1.0 + 0.0j)

    def test_levy_point(self):
        # direct evaluation: exp[-(1 - j tan(pi/4))] = e^-1 (cos 1 + j sin 1)
        val = char_function(StableParams(0.5, 1.0, 1.0), 1.0)
        expected = math.exp(-1.0) * complex(math.cos(1.0), math.sin(1.0))
        assert val == pytest.approx(expected, abs=1e-12)

    def test_modulus_bounded(self):
        w = np.linspace(-20.0, 20.0, 201)
        for p in [StableParams(0.5, 1.0, 1.0), StableParams(1.0, 0.7, 2.0),
                  StableParams(1.9, -1.0, 0.3)]:
            assert np.all(np.abs(char_function(p, w)) <= 1.0 + 1e-12)

    def test_alpha_one_snap_matches_branch(self):
        w = np.array([0.3, 1.0, 4.0])
        snapped = char_function(StableParams(1.0 + 1e-9, 0.5, 1.0), w)
        exact = char_function(StableParams(1.0, 0.5, 1.0), w)
        assert np.allclose(snapped, exact)


class TestSampleStable:
    def test_gamma_zero_rejected(self):
        rng = np.random.default_rng(0)
        with pytest.raises(DegenerateDistributionError):
            sample_stable(StableParams(0.5, 1.0, 0.0), rng)

    def test_levy_ks(self):
        rng = np.random.default_rng(101)
        x = sample_stable(StableParams(0.5, 1.0, 1.0), rng, 100_000)
        stat = stats.kstest(x, lambda v: levy_cdf(v, 1.0)).statistic
        assert stat < 0.01

    def test_gaussian_variance(self):
        rng = np.random.default_rng(7)
        x = sample_stable(StableParams(2.0, 0.0, 1.0), rng, 100_000)
        var = x.var()
        se = var * math.sqrt(2.0 / x.size)
        assert abs(var - 2.0) < 3.0 * se

    @pytest.mark.parametrize("b", [1.5, 2.0, 3.0])
    def test_laplace_identity(self, b):
        # E[e^{-sB}] = exp(-s^(1/b)) for the sub-Gaussian mixer law
        rng = np.random.default_rng(42)
        x = sample_stable(mixer_params(2.0 / b), rng, 100_000)
        for s in (0.5, 1.0, 2.0):
            vals = np.exp(-s * x)
            err = abs(vals.mean() - math.exp(-s ** (1.0 / b)))
            assert err < 3.0 * vals.std(ddof=1) / math.sqrt(vals.size)

    def test_positive_support(self):
        rng = np.random.default_rng(3)
        x = sample_stable(StableParams(0.5, 1.0, 1.0), rng, 1_000_000)
        assert np.all(x > 0.0)

    @pytest.mark.parametrize("p", [
        StableParams(0.5, 1.0, 1.0),
        StableParams(0.5, -1.0, 2.0),
        StableParams(1.0, 0.0, 1.0),
        StableParams(1.0, 0.7, 1.5),
        StableParams(1.5, 0.5, 1.0),
        StableParams(2.0, 0.0, 1.0),
        StableParams(1.0 + 5e-7, 0.3, 1.0),
    ])
    def test_empirical_cf_matches(self, p):
        rng = np.random.default_rng(11)
        x = sample_stable(p, rng, 100_000)
        for w in (0.2, 0.5, 1.0, 2.0, 5.0):
            target = char_function(p, w)
            cw = np.cos(w * x)
            sw = np.sin(w * x)
            for sample_part, true_part in ((cw, target.real), (sw, target.imag)):
                se = sample_part.std(ddof=1) / math.sqrt(x.size)
                assert abs(sample_part.mean() - true_part) < 4.0 * se, (p, w)

    @pytest.mark.parametrize("p", [
        StableParams(0.5, 1.0, 1.0),
        StableParams(1.5, 0.3, 2.0),
    ])
    def test_stability_under_addition(self, p):
        rng = np.random.default_rng(19)
        n_add, n = 5, 100_000
        parts = sample_stable(p, rng, (n_add, n))
        rescaled = parts.sum(axis=0) / n_add ** (1.0 / p.alpha)
        fresh = sample_stable(p, rng, n)
        assert stats.ks_2samp(rescaled, fresh).pvalue > 0.01


class TestSampleCsStable:
    def test_gamma_zero(self):
        rng = np.random.default_rng(0)
        assert sample_cs_stable(CsStableParams(1.0, 0.0), rng) == 0.0 + 0.0j
        z = sample_cs_stable(CsStableParams(1.0, 0.0), rng, 8)
        assert np.all(z == 0.0)

    def test_gaussian_component_variance(self):
        # alpha = 2 marginals are S(2, 0, gamma), i.e. variance 2*gamma
        rng = np.random.default_rng(5)
        z = sample_cs_stable(CsStableParams(2.0, 1.0), rng, 100_000)
        for part in (z.real, z.imag):
            var = part.var()
            se = var * math.sqrt(2.0 / part.size)
            assert abs(var - 2.0) < 3.0 * se

    def test_empirical_cf(self):
        p = CsStableParams(1.0, 1.0)
        rng = np.random.default_rng(23)
        z = sample_cs_stable(p, rng, 100_000)
        for w in (0.5, 1.0, 2.0):
            target = math.exp(-p.gamma * w ** p.alpha)
            vals = np.cos(w * z.real)
            se = vals.std(ddof=1) / math.sqrt(vals.size)
            assert abs(vals.mean() - target) < 3.0 * se

    def test_marginals_match_real_law(self):
        p = CsStableParams(1.4, 0.8)
        rng = np.random.default_rng(29)
        z = sample_cs_stable(p, rng, 100_000)
        ref = sample_stable(p.marginal(), rng, 100_000)
        assert stats.ks_2samp(z.real, ref).pvalue > 0.01
        assert stats.ks_2samp(z.imag, ref).pvalue > 0.01


class TestPdf:
    def test_gaussian_at_zero(self):
        val = pdf(StableParams(2.0, 0.0, 1.0), [0.0])[0]
        assert val == pytest.approx(1.0 / math.sqrt(4.0 * math.pi), abs=1e-4)

    def test_levy_zero_left_of_support(self):
        vals = pdf(StableParams(0.5, 1.0, 1.0), [-2.0, -0.5])
        assert np.all(np.abs(vals) < 1e-4)

    def test_levy_pointwise(self):
        xs = np.array([0.2, 0.5, 1.0, 2.0, 5.0, 10.0])
        got = pdf(StableParams(0.5, 1.0, 1.0), xs)
        assert np.allclose(got, levy_pdf(xs, 1.0), atol=1e-4)

    def test_cauchy_pointwise(self):
        xs = np.array([-3.0, -1.0, 0.0, 0.5, 2.0])
        got = pdf(StableParams(1.0, 0.0, 2.0), xs)
        expected = 2.0 / (np.pi * (4.0 + xs ** 2))
        assert np.allclose(got, expected, atol=1e-6)

    def test_gaussian_normalization(self):
        xs = np.linspace(-12.0, 12.0, 801)
        vals = pdf(StableParams(2.0, 0.0, 1.0), xs)
        assert np.trapezoid(vals, xs) == pytest.approx(1.0, abs=1e-3)

    def test_levy_partial_mass_matches_cdf(self):
        xs = np.linspace(1e-3, 40.0, 2001)
        vals = pdf(StableParams(0.5, 1.0, 1.0), xs)
        mass = np.trapezoid(vals, xs)
        assert mass == pytest.approx(levy_cdf(np.array([40.0]), 1.0)[0], abs=1e-3)

    def test_alpha_one_skewed_unsupported(self):
        with pytest.raises(ValueError):
            pdf(StableParams(1.0, 0.5, 1.0), [0.0])

    @pytest.mark.parametrize("p", [
        StableParams(1.5, 0.7, 1.0),
        StableParams(2.0 / 3.0, 1.0, 1.3),
    ])
    def test_matches_sampler_histogram(self, p):
        # closes the loop between the two independent routes: numerical
        # inversion of the characteristic function vs CMS sampling; the
        # inverted density is bin-averaged (Simpson) before comparing
        rng = np.random.default_rng(37)
        x = sample_stable(p, rng, 400_000)
        lo, hi = np.percentile(x, [2, 90])
        edges = np.linspace(lo, hi, 25)
        counts, _ = np.histogram(x, bins=edges)
        hist = counts / (x.size * np.diff(edges))
        centers = 0.5 * (edges[:-1] + edges[1:])
        f_edges = pdf(p, edges)
        f_centers = pdf(p, centers)
        bin_avg = (f_edges[:-1] + 4.0 * f_centers + f_edges[1:]) / 6.0
        width = edges[1] - edges[0]
        se = np.sqrt(np.maximum(bin_avg, 1e-12) / (x.size * width))
        assert np.all(np.abs(hist - bin_avg) < 4.0 * se + 0.01 * bin_avg)

    def test_gamma_zero(self):
        with pytest.raises(DegenerateDistributionError):
            pdf(StableParams(1.5, 0.0, 0.0), [0.0])
