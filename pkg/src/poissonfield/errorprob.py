"""Semi-analytical error performance of the probe link.

Conditional symbol error probability given the interferer geometry, outage
probability over slow-varying geometry and shadowing, and average error
probability over fast-varying geometry via the sub-Gaussian decomposition.
All conditional formulas assume Rayleigh fading on the probe link and a
coherent nearest-neighbor detector; the interference enters only as an
additive term ``2 * A * V_X`` (or ``2 * B * V_G``) on top of the noise
variance in the SINR.

The angular error integrals have the closed antiderivative used by the
vectorized Monte Carlo paths; the public quadrature routines are kept as an
independent reference and the two are cross-checked in the test suite, as
is a direct 2-D Gaussian integration over the decision cells.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from . import field, modulation, stable
from .exceptions import AccuracyError, BracketingError
from .util import McEstimate, merge_means, merge_proportions, spawn_streams, split_count

__all__ = [
    "sinr",
    "fading_integral",
    "ser_conditional",
    "ser_mpsk",
    "ser_mqam",
    "ser_awgn",
    "gaussian_ser_oracle",
    "gaussian_ser_oracle_rayleigh",
    "outage_probability",
    "average_error_probability",
    "IsoInrResult",
    "inr_for_outage",
]

_QUAD_TOL = 1e-9


def sinr(s: field.NetworkScenario, power: float, variance_term: float) -> float:
    """Received SINR averaged over the fast fading.

    ``power`` is the aggregate interference power factor (or its mixer
    stand-in) and ``variance_term`` the matching per-interferer variance, so
    the denominator is ``r0^(2b) * (2 * power * variance_term + N0)``.
    """
    if power < 0.0 or variance_term < 0.0:
        raise ValueError("power and variance_term must be >= 0")
    g0 = s.pinned_g0()
    return (math.exp(2.0 * s.sigma * g0) * s.E0
            / (s.r0 ** (2.0 * s.b) * (2.0 * power * variance_term + s.N0)))


def fading_integral(x: float, g: float, eta: float) -> float:
    """(1/pi) * integral_0^x (1 + g*eta/sin^2 theta)^-1 dtheta.

    Monotone nonincreasing in eta, bounded by x/pi, exact limit x/pi at
    eta = 0.  Evaluated by adaptive quadrature to 1e-9 absolute.
    """
    if not 0.0 <= x <= 2.0 * math.pi:
        raise ValueError("x must lie in [0, 2*pi]")
    if g <= 0.0:
        raise ValueError("g must be > 0")
    if eta < 0.0:
        raise ValueError("eta must be >= 0")
    if x == 0.0:
        return 0.0
    if eta == 0.0:
        return x / math.pi
    c = g * eta

    def integrand(theta):
        st = math.sin(theta) ** 2
        return st / (st + c)

    val, err = quad(integrand, 0.0, x, epsabs=1e-13, epsrel=1e-12, limit=200)
    if err > _QUAD_TOL:
        raise AccuracyError(f"fading integral error estimate {err:.2e} > {_QUAD_TOL:.0e}")
    return val / math.pi


def _angular_antiderivative(u: float, c: np.ndarray) -> np.ndarray:
    """J(u, c) = integral_0^u sin^2/(sin^2 + c) dtheta for u in [0, pi].

    Closed form: u - sqrt(c/(1+c)) * [atan(sqrt((1+c)/c) tan u) + pi*(u > pi/2)].
    Vectorized over c; c = 0 gives u, c = inf gives 0.
    """
    c = np.asarray(c, dtype=float)
    out = np.full(c.shape, u, dtype=float)
    pos = c > 0.0
    if np.any(pos):
        cp = c[pos]
        ratio = np.sqrt(cp / (1.0 + cp))
        branch = math.pi if u > math.pi / 2.0 else 0.0
        phi = np.arctan(np.sqrt((1.0 + cp) / cp) * math.tan(u)) + branch
        out[pos] = u - ratio * phi
    inf = ~np.isfinite(c)
    if np.any(inf):
        out[inf] = 0.0
    return out


def _ser_batch(flat, eta: np.ndarray) -> np.ndarray:
    """Conditional SER for an array of SINR values via the closed form.

    ``flat`` is the (p_k, weight, phi, psi) quadruple from
    :meth:`DecisionGeometry.flatten`.
    """
    pk, w, phi, psi = flat
    eta = np.asarray(eta, dtype=float)
    total = np.zeros(eta.shape, dtype=float)
    for p_i, w_i, phi_i, psi_i in zip(pk, w, phi, psi):
        c = w_i * eta / 4.0
        total += (p_i / (2.0 * math.pi)) * (
            _angular_antiderivative(psi_i + phi_i, c)
            - _angular_antiderivative(psi_i, c))
    return total


def ser_conditional(geom: modulation.DecisionGeometry, probs, eta: float) -> float:
    """Conditional symbol error probability from the wedge decomposition.

    Sums, over symbols k and their cell edges, the angular integrals
    (1/2pi) * integral_0^phi (1 + w*eta / (4 sin^2(theta+psi)))^-1 dtheta,
    each evaluated by adaptive quadrature.
    """
    if eta < 0.0:
        raise ValueError("eta must be >= 0")
    probs = np.asarray(probs, dtype=float)
    total = 0.0
    for k, wedges in enumerate(geom.wedges):
        for wd in wedges:
            if eta == 0.0:
                total += probs[k] * wd.phi / (2.0 * math.pi)
                continue
            c = wd.weight * eta / 4.0

            def integrand(theta):
                st = math.sin(theta + wd.psi) ** 2
                return st / (st + c)

            val, err = quad(integrand, 0.0, wd.phi,
                            epsabs=1e-13, epsrel=1e-12, limit=200)
            if err > _QUAD_TOL:
                raise AccuracyError(
                    f"wedge integral error estimate {err:.2e} > {_QUAD_TOL:.0e}")
            total += probs[k] * val / (2.0 * math.pi)
    return total


def _check_psk_m(m: int):
    if m < 2 or (m & (m - 1)) != 0:
        raise ValueError(f"M must be a power of two >= 2, got {m}")


def ser_mpsk(m: int, eta: float) -> float:
    """Symbol error probability of M-PSK over Rayleigh fading at mean SINR eta."""
    _check_psk_m(m)
    return fading_integral((m - 1) * math.pi / m, math.sin(math.pi / m) ** 2, eta)


def ser_mqam(m: int, eta: float) -> float:
    """Symbol error probability of square M-QAM over Rayleigh fading."""
    side = math.isqrt(m)
    if m < 4 or side * side != m or (m & (m - 1)) != 0:
        raise ValueError(f"M must be an even power of two >= 4, got {m}")
    g = 3.0 / (2.0 * (m - 1))
    frac = 1.0 - 1.0 / side
    return (4.0 * frac * fading_integral(math.pi / 2.0, g, eta)
            - 4.0 * frac * frac * fading_integral(math.pi / 4.0, g, eta))


def ser_awgn(geom: modulation.DecisionGeometry, probs, eta0: float) -> float:
    """Symbol error probability without fading, from the wedge decomposition.

    ``eta0`` is symbol energy over total noise variance; the wedge integrand
    is exp(-(w/4) * eta0 / sin^2(theta + psi)).
    """
    if eta0 < 0.0:
        raise ValueError("eta0 must be >= 0")
    probs = np.asarray(probs, dtype=float)
    total = 0.0
    for k, wedges in enumerate(geom.wedges):
        for wd in wedges:
            a = wd.weight * eta0 / 4.0

            def integrand(theta):
                return math.exp(-a / math.sin(theta + wd.psi) ** 2)

            val, err = quad(integrand, 0.0, wd.phi,
                            epsabs=1e-13, epsrel=1e-12, limit=200)
            if err > _QUAD_TOL:
                raise AccuracyError(
                    f"wedge integral error estimate {err:.2e} > {_QUAD_TOL:.0e}")
            total += probs[k] * val / (2.0 * math.pi)
    return total


def _exit_distance_factory(c: modulation.Constellation, k: int):
    """Distance from s_k to the cell boundary along direction theta.

    Independent of the wedge construction: the ray leaves the cell at the
    first bisector crossing, at distance d_l^2 / (2 <s_l - s_k, e(theta)>)
    over neighbors with positive heading.  Also returns the directions where
    the exit distance has kinks (active constraint changes), for use as
    quadrature breakpoints.
    """
    pts = c.points
    others = np.delete(np.arange(pts.size), k)
    a = pts[others] - pts[k]
    d_sq = np.abs(a) ** 2

    def exit_distance(theta):
        e = complex(math.cos(theta), math.sin(theta))
        heading = 2.0 * (a.real * e.real + a.imag * e.imag)
        with np.errstate(divide="ignore"):
            rho = np.where(heading > 0.0, d_sq / heading, np.inf)
        return float(rho.min())

    breaks = set()

    def add_perpendiculars(z: complex):
        if abs(z) > 0.0:
            base = math.atan2(z.imag, z.real)
            for offset in (math.pi / 2.0, -math.pi / 2.0):
                breaks.add((base + offset) % (2.0 * math.pi))

    for i in range(a.size):
        add_perpendiculars(a[i])
        for j in range(i + 1, a.size):
            add_perpendiculars(d_sq[i] * a[j] - d_sq[j] * a[i])
    return exit_distance, sorted(breaks)


def gaussian_ser_oracle(c: modulation.Constellation, noise_std: float) -> float:
    """Brute-force SER by integrating the 2-D Gaussian over each decision
    cell's complement (radial part exact, angular part by quadrature).

    ``noise_std`` is the per-component noise standard deviation.  Serves as
    the independent reference for the wedge-based formulas.
    """
    if noise_std <= 0.0:
        raise ValueError("noise_std must be > 0")
    two_var = 2.0 * noise_std * noise_std
    total = 0.0
    for k in range(c.size):
        exit_distance, breaks = _exit_distance_factory(c, k)

        def integrand(theta):
            rho = exit_distance(theta)
            return 0.0 if not math.isfinite(rho) else math.exp(-rho * rho / two_var)

        val = quad(integrand, 0.0, 2.0 * math.pi, points=breaks,
                   epsabs=1e-12, epsrel=1e-12, limit=50 + 10 * len(breaks),
                   full_output=1)[0]
        total += c.probs[k] * val / (2.0 * math.pi)
    return total


def gaussian_ser_oracle_rayleigh(c: modulation.Constellation, eta: float) -> float:
    """Same direct integration, averaged over Rayleigh fading at mean SINR eta."""
    if eta < 0.0:
        raise ValueError("eta must be >= 0")
    total = 0.0
    for k in range(c.size):
        exit_distance, breaks = _exit_distance_factory(c, k)

        def integrand(theta):
            rho = exit_distance(theta)
            if not math.isfinite(rho):
                return 0.0
            return 1.0 / (1.0 + rho * rho * eta)

        val = quad(integrand, 0.0, 2.0 * math.pi, points=breaks,
                   epsabs=1e-12, epsrel=1e-12, limit=50 + 10 * len(breaks),
                   full_output=1)[0]
        total += c.probs[k] * val / (2.0 * math.pi)
    return total


def outage_probability(s: field.NetworkScenario, probe_c: modulation.Constellation,
                       p_star: float, n_mc: int, seed: int, workers: int = 1,
                       interferer_c: modulation.Constellation | None = None) -> McEstimate:
    """Probability that the conditional error probability exceeds ``p_star``
    over the slow-varying interferer geometry and probe shadowing.

    Monte Carlo over i.i.d. draws of the probe shadowing (standard normal
    unless pinned via ``s.G0``) and of the interference power factor sampled
    from its stable law.  Per stream, shadowing draws precede power draws.
    Deterministic for fixed (seed, workers).
    """
    if not 0.0 < p_star <= 1.0:
        raise ValueError("p_star must be in (0, 1]")
    if n_mc < 1:
        raise ValueError("n_mc must be >= 1")
    v_x = modulation.baseband_variance(interferer_c or probe_c, s.E)
    a_params = field.power_factor_params(s)
    flat = modulation.decision_geometry(probe_c).flatten(probe_c.probs)
    denom_base = s.r0 ** (2.0 * s.b)

    counts, ns = [], []
    for rng, n_w in zip(spawn_streams(seed, workers), split_count(n_mc, workers)):
        if n_w == 0:
            continue
        if s.G0 is None:
            g0 = rng.standard_normal(n_w)
        else:
            g0 = np.full(n_w, s.G0)
        if a_params.gamma == 0.0 or v_x == 0.0:
            a = np.zeros(n_w)
        else:
            a = stable.sample_stable(a_params, rng, n_w)
        eta = np.exp(2.0 * s.sigma * g0) * s.E0 / (denom_base * (2.0 * a * v_x + s.N0))
        ser = _ser_batch(flat, eta)
        counts.append(int(np.count_nonzero(ser > p_star)))
        ns.append(n_w)
    return merge_proportions(counts, ns, seed)


def average_error_probability(s: field.NetworkScenario,
                              probe_c: modulation.Constellation,
                              n_b: int, seed: int, workers: int = 1,
                              interferer_c: modulation.Constellation | None = None,
                              fading="rayleigh") -> McEstimate:
    """Average symbol error probability over fast-varying interferer geometry.

    Uses the sub-Gaussian decomposition: draws of the variance mixer B feed
    the conditional formula through the SINR, and the expectation over B is
    a sample mean reusing each draw across the angular grid.  The probe
    shadowing stays pinned at ``s.pinned_g0()``.  With no interference the
    result is deterministic and carries zero standard error.
    """
    if n_b < 1:
        raise ValueError("n_b must be >= 1")
    moment = modulation.abs_moment(interferer_c or probe_c, s.b, fading=fading,
                                   energy=s.E)
    v_g = field.decomposition_gaussian_variance(s, moment)
    flat = modulation.decision_geometry(probe_c).flatten(probe_c.probs)
    g0 = s.pinned_g0()
    num = math.exp(2.0 * s.sigma * g0) * s.E0
    denom_base = s.r0 ** (2.0 * s.b)

    if v_g == 0.0:
        eta = num / (denom_base * s.N0)
        value = float(_ser_batch(flat, np.array([eta]))[0])
        return McEstimate(value=value, std_err=0.0, n=1, seed=seed)

    mixer = field.decomposition_mixer_params(s.b)
    sums, sumsqs, ns = [], [], []
    for rng, n_w in zip(spawn_streams(seed, workers), split_count(n_b, workers)):
        if n_w == 0:
            continue
        b_draws = stable.sample_stable(mixer, rng, n_w)
        eta = num / (denom_base * (2.0 * b_draws * v_g + s.N0))
        ser = _ser_batch(flat, eta)
        sums.append(ser.sum())
        sumsqs.append(np.sum(ser * ser))
        ns.append(n_w)
    return merge_means(sums, sumsqs, ns, seed)


@dataclass(frozen=True)
class IsoInrResult:
    """Root of the outage-vs-INR curve; ``capped`` flags an unbounded root."""

    inr_db: float
    capped: bool


def inr_for_outage(s: field.NetworkScenario, probe_c: modulation.Constellation,
                   lam: float, target_pout: float, p_star: float, seed: int,
                   n_mc: int = 20_000, workers: int = 1,
                   inr_cap_db: float = 60.0, inr_floor_db: float = -60.0,
                   tol_db: float = 0.1,
                   interferer_c: modulation.Constellation | None = None) -> IsoInrResult:
    """Interferer INR (dB) at which the outage probability hits the target.

    Bisection on INR with common random numbers (the same seed at every
    evaluation), which makes the observed outage curve monotone in INR so
    the bracket never tears.  If even ``inr_cap_db`` keeps the outage below
    target, the cap is returned flagged; if the target is exceeded with no
    interference at all, it is unachievable.
    """
    if not 0.0 < target_pout < 1.0:
        raise ValueError("target_pout must be in (0, 1)")
    base = s.replace(lam=lam)

    def pout_at(inr_db: float | None) -> float:
        e = 0.0 if inr_db is None else base.N0 * 10.0 ** (inr_db / 10.0)
        sc = base.replace(E=e)
        return outage_probability(sc, probe_c, p_star, n_mc, seed, workers,
                                  interferer_c=interferer_c).value

    if pout_at(None) > target_pout:
        raise BracketingError(
            "outage target is below the interference-free floor")
    if pout_at(inr_cap_db) < target_pout:
        return IsoInrResult(inr_db=inr_cap_db, capped=True)
    lo, hi = inr_floor_db, inr_cap_db
    while pout_at(lo) > target_pout and lo > -240.0:
        lo -= 60.0
    while hi - lo > tol_db:
        mid = 0.5 * (lo + hi)
        if pout_at(mid) > target_pout:
            hi = mid
        else:
            lo = mid
    return IsoInrResult(inr_db=0.5 * (lo + hi), capped=False)
