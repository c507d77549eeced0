import cmath
import math

import numpy as np
import pytest
from scipy import stats

from poissonfield import SingularityError
from poissonfield.errorprob import (
    average_error_probability,
    ser_conditional,
    ser_mpsk,
    sinr,
)
from poissonfield.field import (
    FieldRealization,
    NetworkScenario,
    interference_params,
    power_factor,
    power_factor_params,
    sample_field,
    sigma_from_db,
    truncation_radius,
)
from poissonfield.modulation import abs_moment, baseband_variance, decision_geometry, mpsk
from poissonfield.oracle import (
    InterfererDraw,
    aggregate_interference,
    empirical_power_factor,
    interference_sample,
    projection_error,
    sample_aggregate_interference,
    simulate_ser,
)
from poissonfield.stable import sample_stable

BPSK = mpsk(2)


def draw(s1=0.8 + 0.3j, s2=-0.5 + 0.9j, u=0.3716429135, amp=1.2, phase=0.7):
    return InterfererDraw(symbol_pair=(s1, s2), delay_frac=u,
                          fade_amp=amp, fade_phase=phase)


class TestInterferenceSample:
    def test_validation(self):
        with pytest.raises(ValueError):
            draw(u=1.2)
        with pytest.raises(ValueError):
            draw(amp=-0.1)

    def test_zero_delay_keeps_second_symbol(self):
        d = draw(u=0.0)
        expected = 2.0 * d.fade_amp * cmath.exp(1j * d.fade_phase) * d.symbol_pair[1]
        assert interference_sample(d, 2.0) == pytest.approx(expected)

    def test_full_delay_keeps_first_symbol(self):
        d = draw(u=1.0, amp=1.0, phase=0.0)
        assert interference_sample(d, 3.0) == pytest.approx(3.0 * d.symbol_pair[0])

    def test_constant_symbol_independent_of_delay(self):
        vals = [interference_sample(draw(s1=0.6 - 0.2j, s2=0.6 - 0.2j, u=u), 1.0)
                for u in (0.0, 0.3, 0.9)]
        assert vals[0] == pytest.approx(vals[1]) == pytest.approx(vals[2])


class TestAggregateInterference:
    def test_empty_field(self):
        f = FieldRealization(np.array([]), np.array([]), 1.0)
        assert aggregate_interference(f, [], 2.0, 1.0, 1.0) == 0.0

    def test_single_node_reduces_to_sample(self):
        f = FieldRealization(np.array([1.0]), np.array([0.0]), 2.0)
        d = draw()
        assert aggregate_interference(f, [d], 2.0, 1.0, 1.5) == pytest.approx(
            interference_sample(d, 1.5))

    def test_distance_and_shadowing_scaling(self):
        f = FieldRealization(np.array([2.0]), np.array([1.0]), 3.0)
        d = draw()
        expected = math.exp(0.5) * interference_sample(d, 1.0) / 2.0 ** 2.5
        assert aggregate_interference(f, [d], 2.5, 0.5, 1.0) == pytest.approx(expected)

    def test_colocated_raises(self):
        f = FieldRealization.__new__(FieldRealization)
        object.__setattr__(f, "distances", np.array([0.0]))
        object.__setattr__(f, "shadowing", np.array([0.0]))
        object.__setattr__(f, "r_max", 1.0)
        with pytest.raises(SingularityError):
            aggregate_interference(f, [draw()], 2.0, 1.0, 1.0)

    def test_length_mismatch(self):
        f = FieldRealization(np.array([1.0]), np.array([0.0]), 2.0)
        with pytest.raises(ValueError):
            aggregate_interference(f, [], 2.0, 1.0, 1.0)


class TestProjection:
    def test_bound_and_scaling(self):
        d = draw()
        e100 = projection_error(d, 100.0)
        e1000 = projection_error(d, 1000.0)
        assert e100 < 0.02  # k = 1
        assert e1000 < e100 / 5.0

    def test_bound_scales_with_k(self):
        d = draw()
        assert projection_error(d, 100.0, k=3.0) < 0.02 * 3.0

    def test_constant_symbol_integer_carrier_exact(self):
        d = draw(s1=0.8 + 0.3j, s2=0.8 + 0.3j, u=0.4, amp=1.0, phase=0.2)
        assert projection_error(d, 100.0) < 1e-10

    def test_undersampling_rejected(self):
        with pytest.raises(ValueError):
            projection_error(draw(), 1000.0, n_time_samples=1000)
        with pytest.raises(ValueError):
            projection_error(draw(), 5.0)


class TestSimulateSer:
    def test_no_interference_matches_rayleigh_bpsk(self):
        s = NetworkScenario(lam=0.0, b=2.0, sigma=0.0, E0=1.0, N0=1.0, G0=0.0)
        est = simulate_ser(s, BPSK, BPSK, "fast", 1_000_000, seed=5, workers=4)
        assert abs(est.value - ser_mpsk(2, 1.0)) < 3.0 * est.std_err

    def test_high_snr_error_free(self):
        s = NetworkScenario(lam=0.0, b=2.0, sigma=0.0, E0=1e6, N0=1.0, G0=0.0)
        n = 1_000_000
        est = simulate_ser(s, BPSK, BPSK, "fast", n, seed=6, workers=4)
        assert est.value < 10.0 / n

    def test_detection_sanity_zero_noise(self):
        s = NetworkScenario(lam=0.0, b=2.0, sigma=0.0, E0=1.0, N0=1e-300, G0=0.0)
        est = simulate_ser(s, mpsk(8), mpsk(8), "fast", 10_000, seed=7)
        assert est.value == 0.0

    def test_reproducible(self):
        s = NetworkScenario.from_db(lam=1e-2, b=3.0, sigma_db=10.0,
                                    snr_db=15.0, inr_db=15.0, G0=0.0)
        a = simulate_ser(s, BPSK, BPSK, "fast", 50_000, seed=8, workers=2)
        b = simulate_ser(s, BPSK, BPSK, "fast", 50_000, seed=8, workers=2)
        assert a == b

    def test_mode_validation(self):
        s = NetworkScenario(lam=0.0, b=2.0)
        with pytest.raises(ValueError):
            simulate_ser(s, BPSK, BPSK, "medium", 10, seed=0)

    def test_fast_mode_agrees_with_average_formula(self):
        # small-sample version of the exact-regime acceptance check
        s = NetworkScenario.from_db(lam=1e-2, b=3.0, sigma_db=10.0,
                                    snr_db=20.0, inr_db=20.0, G0=0.0)
        ber = simulate_ser(s, BPSK, BPSK, "fast", 300_000, seed=21, workers=4,
                           rel_tol=0.005)
        pe = average_error_probability(s, BPSK, n_b=400_000, seed=22, workers=4)
        assert abs(ber.value - pe.value) < 3.0 * math.hypot(ber.std_err, pe.std_err)

    def test_fast_mode_with_qpsk_interferers(self):
        # different interferer constellation: exercises the moment path
        # end to end (the aggregate law is exact for any of them)
        qpsk = mpsk(4)
        s = NetworkScenario.from_db(lam=1e-2, b=3.0, sigma_db=10.0,
                                    snr_db=20.0, inr_db=20.0, G0=0.0)
        ber = simulate_ser(s, BPSK, qpsk, "fast", 250_000, seed=31, workers=4,
                           rel_tol=0.005)
        pe = average_error_probability(s, BPSK, n_b=400_000, seed=32,
                                       interferer_c=qpsk)
        assert abs(ber.value - pe.value) < 3.0 * math.hypot(ber.std_err, pe.std_err)

    def test_fast_mode_without_interferer_fading(self):
        s = NetworkScenario.from_db(lam=1e-2, b=3.0, sigma_db=10.0,
                                    snr_db=20.0, inr_db=20.0, G0=0.0)
        ber = simulate_ser(s, BPSK, BPSK, "fast", 250_000, seed=33, workers=4,
                           rel_tol=0.005, interferer_fading="none")
        pe = average_error_probability(s, BPSK, n_b=400_000, seed=34,
                                       fading="none")
        assert abs(ber.value - pe.value) < 3.0 * math.hypot(ber.std_err, pe.std_err)

    def test_slow_mode_matches_conditional_formula(self):
        s = NetworkScenario.from_db(lam=1e-2, b=3.0, sigma_db=10.0,
                                    snr_db=25.0, inr_db=25.0, G0=0.0)
        rng = np.random.default_rng(77)
        fld = sample_field(s, truncation_radius(s, rel_tol=0.003), rng)
        a = power_factor(fld, s.b, s.sigma)
        eta = sinr(s, a, baseband_variance(BPSK, s.E))
        pe_cond = ser_conditional(decision_geometry(BPSK), BPSK.probs, eta)
        est = simulate_ser(s, BPSK, BPSK, "slow", 400_000, seed=13, workers=4,
                           frozen_field=fld)
        assert abs(est.value - pe_cond) < max(0.05 * pe_cond, 3.0 * est.std_err)


class TestEmpiricalPowerFactor:
    def test_zero_density(self):
        s = NetworkScenario(lam=0.0, b=2.0)
        assert np.all(empirical_power_factor(s, 100, np.random.default_rng(0)) == 0.0)

    def test_matches_loop_construction(self):
        # the batched generator must be distributionally identical to
        # looping sample_field + power_factor
        s = NetworkScenario(lam=0.1, b=2.0, sigma=sigma_from_db(10.0))
        r_max = truncation_radius(s, rel_tol=0.05)
        rng = np.random.default_rng(3)
        batched = empirical_power_factor(s, 3000, rng, r_max=r_max)
        looped = np.array([power_factor(sample_field(s, r_max, rng), s.b, s.sigma)
                           for _ in range(3000)])
        assert stats.ks_2samp(batched, looped).pvalue > 0.01

    def test_quantiles_match_stable_law(self):
        s = NetworkScenario(lam=0.1, b=2.0, sigma=sigma_from_db(10.0))
        rng = np.random.default_rng(9)
        a_emp = empirical_power_factor(s, 30_000, rng, rel_tol=0.005)
        a_ref = sample_stable(power_factor_params(s), rng, 400_000)
        q = [10, 25, 50, 75, 90]
        emp, ref = np.percentile(a_emp, q), np.percentile(a_ref, q)
        assert np.all(np.abs(emp - ref) / ref < 0.06)

    def test_median_ordering_in_loss_exponent(self):
        # at this density the power factor sits higher for b = 1.5 than b = 2
        rng = np.random.default_rng(11)
        med = {}
        for b in (1.5, 2.0):
            s = NetworkScenario(lam=0.1, b=b, sigma=sigma_from_db(10.0))
            med[b] = np.median(empirical_power_factor(s, 4000, rng, rel_tol=0.05))
        assert med[1.5] > med[2.0]


class TestAggregateInterferenceDistribution:
    def test_empirical_cf_matches_stable_law(self):
        s = NetworkScenario(lam=0.1, b=2.0, sigma=sigma_from_db(10.0), E=1.0)
        rng = np.random.default_rng(15)
        y = sample_aggregate_interference(s, BPSK, 30_000, rng, rel_tol=0.005)
        gam = interference_params(s, abs_moment(BPSK, s.b, energy=s.E)).gamma
        for w in (0.5, 1.0, 2.0):
            target = math.exp(-gam * w ** (2.0 / s.b))
            vals = np.cos(w * y.real)
            se = vals.std(ddof=1) / math.sqrt(vals.size)
            assert abs(vals.mean() - target) < 4.0 * se

    def test_circular_symmetry_phase_uniform(self):
        s = NetworkScenario(lam=0.1, b=2.0, sigma=sigma_from_db(10.0), E=1.0)
        rng = np.random.default_rng(19)
        y = sample_aggregate_interference(s, BPSK, 100_000, rng, rel_tol=0.02)
        phases = np.angle(y[np.abs(y) > 0.0])
        n = phases.size
        r_bar_sq = np.cos(phases).mean() ** 2 + np.sin(phases).mean() ** 2
        p_value = math.exp(-n * r_bar_sq)
        assert p_value > 0.01
