"""Brute-force waveform-level Monte Carlo ground truth.

Simulates interferer symbols, delays, fading and shadowing per the complex
baseband model, forms the received sample, runs nearest-neighbor detection,
and produces empirical symbol error rates and empirical interference
distributions.  Every closed form in the library is validated against this
module.

The per-interferer baseband sample is the post-projection form
``k * alpha * e^{j phase} * [u * s + (1 - u) * s']`` with ``u`` the fraction
of the observation window occupied by the first of the two straddling
symbols; the projection algebra itself (that the double-carrier-frequency
terms are negligible) is validated separately by :func:`projection_error`
on the explicit passband waveform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import simpson

from .exceptions import SingularityError
from .field import FieldRealization, NetworkScenario, sample_field, truncation_radius
from .modulation import Constellation
from .util import McEstimate, merge_proportions, split_count

__all__ = [
    "InterfererDraw",
    "interference_sample",
    "aggregate_interference",
    "projection_error",
    "simulate_ser",
    "sample_aggregate_interference",
    "empirical_power_factor",
]


@dataclass(frozen=True)
class InterfererDraw:
    """One interferer's randomness for one observation window.

    ``symbol_pair`` holds the two successive physical symbols (the first
    occupies the initial ``delay_frac`` of the window); ``fade_amp`` is the
    unit-power fading amplitude and ``fade_phase`` its uniform phase.
    """

    symbol_pair: tuple[complex, complex]
    delay_frac: float
    fade_amp: float
    fade_phase: float

    def __post_init__(self):
        if not 0.0 <= self.delay_frac <= 1.0:
            raise ValueError("delay_frac must lie in [0, 1]")
        if self.fade_amp < 0.0:
            raise ValueError("fade_amp must be >= 0")


def interference_sample(d: InterfererDraw, k: float) -> complex:
    """Baseband contribution of one interferer at unit distance, no shadowing."""
    s1, s2 = d.symbol_pair
    u = d.delay_frac
    return (k * d.fade_amp * complex(math.cos(d.fade_phase), math.sin(d.fade_phase))
            * (u * s1 + (1.0 - u) * s2))


def aggregate_interference(f: FieldRealization, draws, b: float, sigma: float,
                           k: float) -> complex:
    """Aggregate baseband interference sum e^{sigma G_i} X_i / R_i^b."""
    if len(draws) != len(f):
        raise ValueError("one draw per field node required")
    total = 0.0 + 0.0j
    for r, g, d in zip(f.distances, f.shadowing, draws):
        if r == 0.0:
            raise SingularityError("interferer co-located with the probe receiver")
        total += math.exp(sigma * g) * interference_sample(d, k) / r ** b
    return total


def _segment_integral(t0, t1, func, n):
    if t1 <= t0:
        return 0.0
    t = np.linspace(t0, t1, n + 1)
    return float(simpson(func(t), x=t))


def projection_error(d: InterfererDraw, fc_t: float, n_time_samples: int = 200_000,
                     k: float = 1.0, T: float = 1.0) -> float:
    """Deviation between the explicit passband projection and the baseband form.

    Builds the two-sinusoid waveform of one interferer over one observation
    window, projects it numerically onto the in-phase and quadrature basis
    functions, and returns the larger absolute deviation from the closed
    baseband components.  The deviation comes from the neglected
    double-carrier-frequency integrals and shrinks as O(1 / fc_t).
    """
    if fc_t < 10.0:
        raise ValueError("carrier must satisfy fc * T >= 10")
    if n_time_samples < int(40 * fc_t):
        raise ValueError("time grid under-samples the double-frequency terms")
    fc = fc_t / T
    s1, s2 = d.symbol_pair
    a1, th1 = abs(s1), math.atan2(s1.imag, s1.real)
    a2, th2 = abs(s2), math.atan2(s2.imag, s2.real)
    delay = d.delay_frac * T
    amp = k * d.fade_amp * math.sqrt(2.0 / T)
    ph = d.fade_phase

    def waveform(t, a, th):
        return amp * a * np.cos(2.0 * math.pi * fc * t + th + ph)

    basis = [lambda t: math.sqrt(2.0 / T) * np.cos(2.0 * math.pi * fc * t),
             lambda t: -math.sqrt(2.0 / T) * np.sin(2.0 * math.pi * fc * t)]
    n_half = n_time_samples // 2
    projections = []
    for psi in basis:
        val = (_segment_integral(0.0, delay, lambda t: waveform(t, a1, th1) * psi(t), n_half)
               + _segment_integral(delay, T, lambda t: waveform(t, a2, th2) * psi(t), n_half))
        projections.append(val)

    expected = interference_sample(d, k)
    return max(abs(projections[0] - expected.real),
               abs(projections[1] - expected.imag))


def _grouped_sums(contrib: np.ndarray, counts: np.ndarray) -> np.ndarray:
    """Sum consecutive groups of ``contrib`` with the given group sizes."""
    out = np.zeros(counts.size, dtype=contrib.dtype)
    nz = counts > 0
    if not np.any(nz):
        return out
    starts = np.concatenate(([0], np.cumsum(counts)[:-1]))[nz]
    out[nz] = np.add.reduceat(contrib, starts)
    return out


def _pow_2b(r_sq: np.ndarray, b: float) -> np.ndarray:
    """(R^2)^b with fast paths for the common loss exponents."""
    if b == 2.0:
        return r_sq * r_sq
    if b == 1.5:
        return r_sq * np.sqrt(r_sq)
    if b == 3.0:
        return r_sq * r_sq * r_sq
    return r_sq ** b


def _fade_amplitudes(model, rng, n):
    if model == "rayleigh":
        return np.sqrt(rng.standard_exponential(n))
    if model == "none":
        return np.ones(n)
    raise ValueError(f"unknown interferer fading model {model!r}")


def _interference_mix(pts_phys, k, rng, n, fading):
    """n i.i.d. per-interferer baseband samples X (delay, symbols, fading)."""
    u = rng.uniform(0.0, 1.0, n)
    i1 = rng.integers(0, pts_phys.size, n)
    i2 = rng.integers(0, pts_phys.size, n)
    alpha = _fade_amplitudes(fading, rng, n)
    phase = rng.uniform(0.0, 2.0 * math.pi, n)
    return (k * alpha * np.exp(1j * phase)
            * (u * pts_phys[i1] + (1.0 - u) * pts_phys[i2]))


def _batch_interference(s, pts_phys, m, rng, r_max, fading):
    """Aggregate interference for m independent windows, fresh field each."""
    counts = rng.poisson(s.lam * math.pi * r_max * r_max, m)
    n = int(counts.sum())
    if n == 0:
        return np.zeros(m, dtype=complex)
    r_sq = rng.uniform(0.0, r_max * r_max, n)
    g = rng.standard_normal(n)
    x = _interference_mix(pts_phys, s.k, rng, n, fading)
    contrib = np.exp(s.sigma * g) / np.sqrt(_pow_2b(r_sq, s.b)) * x
    return _grouped_sums(contrib, counts)


def sample_aggregate_interference(s: NetworkScenario, interferer_c: Constellation,
                                  n: int, rng: np.random.Generator,
                                  rel_tol: float = 0.01,
                                  fading: str = "rayleigh",
                                  chunk_nodes: int = 4_000_000) -> np.ndarray:
    """n draws of the aggregate baseband interference over fresh fields."""
    r_max = truncation_radius(s, rel_tol)
    pts_phys = math.sqrt(s.E) / s.k * interferer_c.points
    mean_nodes = max(s.lam * math.pi * r_max * r_max, 1.0)
    step = max(1, int(chunk_nodes / mean_nodes))
    out = np.empty(n, dtype=complex)
    for lo in range(0, n, step):
        m = min(step, n - lo)
        out[lo:lo + m] = _batch_interference(s, pts_phys, m, rng, r_max, fading)
    return out


def empirical_power_factor(s: NetworkScenario, n_realizations: int,
                           rng: np.random.Generator, rel_tol: float = 0.01,
                           r_max: float | None = None,
                           chunk_nodes: int = 4_000_000) -> np.ndarray:
    """n draws of the aggregate interference power factor from truncated
    field realizations; feeds the distribution-matching validations."""
    if n_realizations < 1:
        raise ValueError("n_realizations must be >= 1")
    if r_max is None:
        r_max = truncation_radius(s, rel_tol)
    if s.lam == 0.0:
        return np.zeros(n_realizations)
    mean_nodes = max(s.lam * math.pi * r_max * r_max, 1.0)
    step = max(1, int(chunk_nodes / mean_nodes))
    two_sigma = 2.0 * s.sigma
    out = np.empty(n_realizations)
    for lo in range(0, n_realizations, step):
        m = min(step, n_realizations - lo)
        counts = rng.poisson(s.lam * math.pi * r_max * r_max, m)
        n = int(counts.sum())
        if n == 0:
            out[lo:lo + m] = 0.0
            continue
        r_sq = rng.uniform(0.0, r_max * r_max, n)
        g = rng.standard_normal(n)
        contrib = np.exp(two_sigma * g) / _pow_2b(r_sq, s.b)
        out[lo:lo + m] = _grouped_sums(contrib, counts)
    return out


def simulate_ser(s: NetworkScenario, probe_c: Constellation,
                 interferer_c: Constellation, mode: str, n_symbols: int,
                 seed: int, workers: int = 1, rel_tol: float = 0.01,
                 interferer_fading: str = "rayleigh",
                 frozen_field: FieldRealization | None = None,
                 chunk: int = 65_536) -> McEstimate:
    """Empirical symbol error rate of the probe link by full simulation.

    Per symbol: a probe symbol rides Rayleigh fading (amplitude known to the
    coherent detector, phase removed), circularly symmetric Gaussian noise of
    total variance N0 is added along with the aggregate interference, the
    received sample is rescaled by the known probe gain and detected by
    nearest neighbor.

    ``mode="slow"`` freezes a single field realization (drawn internally or
    supplied via ``frozen_field``) and estimates the error probability
    conditioned on it; ``mode="fast"`` redraws the field every symbol and
    estimates the geometry-averaged error probability.
    """
    if mode not in ("slow", "fast"):
        raise ValueError("mode must be 'slow' or 'fast'")
    if n_symbols < 1:
        raise ValueError("n_symbols must be >= 1")
    ss = np.random.SeedSequence(seed)
    children = ss.spawn(workers + 1)
    field_rng = np.random.Generator(np.random.PCG64(children[workers]))

    r_max = truncation_radius(s, rel_tol)
    interference_on = s.lam > 0.0 and s.E > 0.0
    if mode == "slow" and interference_on:
        fld = frozen_field if frozen_field is not None else sample_field(s, r_max, field_rng)
        q = np.exp(s.sigma * fld.shadowing) / fld.distances ** s.b
    else:
        q = np.zeros(0)

    pts_probe = probe_c.points
    probe_gain0 = math.sqrt(s.E0) * math.exp(s.sigma * s.pinned_g0()) / s.r0 ** s.b
    pts_int = math.sqrt(s.E) / s.k * interferer_c.points if s.E > 0 else interferer_c.points
    noise_std = math.sqrt(s.N0 / 2.0)

    errors, ns = [], []
    for child, n_w in zip(children[:workers], split_count(n_symbols, workers)):
        if n_w == 0:
            continue
        rng = np.random.Generator(np.random.PCG64(child))
        err = 0
        for lo in range(0, n_w, chunk):
            m = min(chunk, n_w - lo)
            if not interference_on:
                y = np.zeros(m, dtype=complex)
            elif mode == "fast":
                y = _batch_interference(s, pts_int, m, rng, r_max, interferer_fading)
            else:
                n_nodes = q.size
                if n_nodes == 0:
                    y = np.zeros(m, dtype=complex)
                else:
                    x = _interference_mix(pts_int, s.k, rng, m * n_nodes,
                                          interferer_fading)
                    y = x.reshape(m, n_nodes) @ q
            idx0 = rng.integers(0, pts_probe.size, m)
            alpha0 = np.sqrt(rng.standard_exponential(m))
            gain = probe_gain0 * alpha0
            w = noise_std * (rng.standard_normal(m) + 1j * rng.standard_normal(m))
            z = gain * pts_probe[idx0] + y + w
            z_norm = z / gain
            detected = np.argmin(np.abs(z_norm[:, None] - pts_probe[None, :]) ** 2,
                                 axis=1)
            err += int(np.count_nonzero(detected != idx0))
        errors.append(err)
        ns.append(n_w)
    return merge_proportions(errors, ns, seed)
