"""Waveform-level oracle versus the semi-analytical formulas.

Runs the brute-force symbol simulator in both field modes and compares:
fast-varying geometry against the decomposition-based average (an exact
correspondence), and a few frozen geometries against the conditional
formula (which rides on a per-interferer Gaussian approximation).
"""

import math

import numpy as np

from poissonfield import (
    NetworkScenario,
    average_error_probability,
    baseband_variance,
    decision_geometry,
    mpsk,
    power_factor,
    sample_field,
    ser_conditional,
    simulate_ser,
    sinr,
    truncation_radius,
)

bpsk = mpsk(2)
s = NetworkScenario.from_db(lam=1e-2, b=3.0, sigma_db=10.0,
                            snr_db=20.0, inr_db=20.0, G0=0.0)

print("fast-varying geometry (exact regime):")
ber = simulate_ser(s, bpsk, bpsk, "fast", 400_000, seed=1, workers=4,
                   rel_tol=0.005)
pe = average_error_probability(s, bpsk, n_b=400_000, seed=2)
combined = math.hypot(ber.std_err, pe.std_err)
print(f"  simulated SER {ber.value:.5f} (se {ber.std_err:.5f})")
print(f"  formula       {pe.value:.5f} (se {pe.std_err:.5f})")
print(f"  gap {abs(ber.value - pe.value):.2e} vs combined se {combined:.2e}")

print()
print("frozen geometries (Gaussian-approximation regime):")
s25 = s.replace(E0=s.N0 * 10 ** 2.5, E=s.N0 * 10 ** 2.5)
geom = decision_geometry(bpsk)
v_x = baseband_variance(bpsk, s25.E)
rng = np.random.default_rng(303)
r_max = truncation_radius(s25, rel_tol=0.003)
for i in range(4):
    fld = sample_field(s25, r_max, rng)
    eta = sinr(s25, power_factor(fld, s25.b, s25.sigma), v_x)
    pe_cond = ser_conditional(geom, bpsk.probs, eta)
    est = simulate_ser(s25, bpsk, bpsk, "slow", 400_000, seed=50 + i,
                       workers=4, frozen_field=fld)
    print(f"  field {i}: {len(fld):3d} nodes  conditional {pe_cond:.5f}  "
          f"simulated {est.value:.5f}  rel dev {abs(est.value - pe_cond) / pe_cond:.2%}")
