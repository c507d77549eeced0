"""Spatial Poisson field of interferers and the stable laws it induces.

Physical parameters live in :class:`NetworkScenario`.  A realization of the
field (distances plus per-node shadowing) is a :class:`FieldRealization`;
its aggregate interference power factor ``sum_i exp(2*sigma*G_i) / R_i^(2b)``
follows a totally skewed stable law whose parameters
:func:`power_factor_params` derives in closed form.  The cross-validated
closed forms for the aggregate complex interference and its sub-Gaussian
decomposition live here as well.

Shadowing is stored in natural-log units internally; dB values are accepted
only at interface boundaries via :func:`sigma_from_db`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np
from scipy.special import gamma as gamma_fn

from . import stable
from .exceptions import DivergenceError, SingularityError

__all__ = [
    "NetworkScenario",
    "FieldRealization",
    "sigma_from_db",
    "sigma_to_db",
    "stability_coeff",
    "power_factor_params",
    "interference_params",
    "decomposition_mixer_params",
    "decomposition_gaussian_variance",
    "sample_field",
    "power_factor",
    "truncation_radius",
]

LN10_OVER_20 = math.log(10.0) / 20.0


def sigma_from_db(sigma_db: float) -> float:
    """Convert a shadowing standard deviation in dB to natural-log units."""
    if sigma_db < 0.0:
        raise ValueError("sigma_db must be >= 0")
    return LN10_OVER_20 * sigma_db


def sigma_to_db(sigma: float) -> float:
    """Inverse of :func:`sigma_from_db`."""
    if sigma < 0.0:
        raise ValueError("sigma must be >= 0")
    return sigma / LN10_OVER_20


@dataclass(frozen=True)
class NetworkScenario:
    """All physical parameters of the probe link and the interferer field.

    Attributes
    ----------
    lam : float
        Interferer density in nodes/m^2.
    b : float
        Amplitude loss exponent (power decays as r^-2b); must exceed 1 for
        the infinite-plane aggregate interference to converge.
    sigma : float
        Shadowing coefficient in natural-log units (see :func:`sigma_from_db`).
    k : float
        Median amplitude path-gain constant.
    N0 : float
        Noise spectral density (total complex noise variance).
    T : float
        Symbol period.
    E : float
        Interferer average symbol energy measured 1 m away.
    E0 : float
        Probe average symbol energy measured 1 m away.
    r0 : float
        Probe link length in m.
    G0 : float or None
        Probe shadowing draw.  ``None`` means "not pinned": metrics over
        slow-varying randomness sample it as standard normal, while metrics
        conditioned on the probe link treat it as 0.
    """

    lam: float
    b: float
    sigma: float = 0.0
    k: float = 1.0
    N0: float = 1.0
    T: float = 1.0
    E: float = 0.0
    E0: float = 1.0
    r0: float = 1.0
    G0: float | None = None

    def __post_init__(self):
        if self.b <= 1.0:
            raise DivergenceError(
                "infinite-plane interference power diverges for b <= 1")
        if self.lam < 0.0:
            raise ValueError("lam must be >= 0")
        if self.sigma < 0.0:
            raise ValueError("sigma must be >= 0")
        if self.k <= 0.0:
            raise ValueError("k must be > 0")
        if self.N0 <= 0.0:
            raise ValueError("N0 must be > 0")
        if self.T <= 0.0:
            raise ValueError("T must be > 0")
        if self.E < 0.0 or self.E0 < 0.0:
            raise ValueError("symbol energies must be >= 0")
        if self.r0 <= 0.0:
            raise ValueError("r0 must be > 0")

    @property
    def snr(self) -> float:
        return self.E0 / self.N0

    @property
    def inr(self) -> float:
        return self.E / self.N0

    @classmethod
    def from_db(cls, lam, b, sigma_db=0.0, snr_db=None, inr_db=None,
                N0=1.0, **kwargs) -> "NetworkScenario":
        """Build a scenario from dB-domain quantities.

        SNR_dB = 10 log10(E0/N0) and INR_dB = 10 log10(E/N0); an INR of
        ``-inf`` (or None) means no interferer energy.
        """
        e0 = kwargs.pop("E0", N0 * 10.0 ** (snr_db / 10.0) if snr_db is not None else 1.0)
        if inr_db is None or inr_db == -math.inf:
            e = kwargs.pop("E", 0.0)
        else:
            e = kwargs.pop("E", N0 * 10.0 ** (inr_db / 10.0))
        return cls(lam=lam, b=b, sigma=sigma_from_db(sigma_db),
                   N0=N0, E0=e0, E=e, **kwargs)

    def pinned_g0(self) -> float:
        """Probe shadowing value used when conditioning on the probe link."""
        return 0.0 if self.G0 is None else self.G0

    def replace(self, **changes) -> "NetworkScenario":
        return replace(self, **changes)


@dataclass(frozen=True)
class FieldRealization:
    """One draw of interferer distances and shadowing inside radius r_max."""

    distances: np.ndarray
    shadowing: np.ndarray
    r_max: float

    def __post_init__(self):
        d = np.asarray(self.distances, dtype=float)
        g = np.asarray(self.shadowing, dtype=float)
        object.__setattr__(self, "distances", d)
        object.__setattr__(self, "shadowing", g)
        if d.shape != g.shape:
            raise ValueError("distances and shadowing must have equal length")
        if d.size and (np.any(np.diff(d) < 0.0) or d[0] <= 0.0 or d[-1] > self.r_max):
            raise ValueError("distances must satisfy 0 < R_1 <= ... <= r_max")

    def __len__(self) -> int:
        return self.distances.size


def stability_coeff(x: float) -> float:
    """The normalization (1-x) / (Gamma(2-x) cos(pi x/2)), continuous at
    x = 1 where it equals 2/pi.  Defined on (0, 2)."""
    if not 0.0 < x < 2.0:
        raise ValueError(f"stability coefficient defined on (0, 2), got {x}")
    if x == 1.0:
        return 2.0 / math.pi
    return (1.0 - x) / (gamma_fn(2.0 - x) * math.cos(math.pi * x / 2.0))


def _check_b(b: float):
    if b <= 1.0:
        raise DivergenceError(
            "infinite-plane interference power diverges for b <= 1")


def power_factor_params(s: NetworkScenario) -> stable.StableParams:
    """Stable law of the aggregate interference power factor.

    alpha = 1/b, beta = 1 (positive support), and dispersion
    lam * pi * C(1/b)^-1 * exp(2 sigma^2 / b^2).
    """
    _check_b(s.b)
    gam = (s.lam * math.pi / stability_coeff(1.0 / s.b)
           * math.exp(2.0 * s.sigma ** 2 / s.b ** 2))
    return stable.StableParams(alpha=1.0 / s.b, beta=1.0, gamma=gam)


def interference_params(s: NetworkScenario, abs_moment: float) -> stable.CsStableParams:
    """CS complex stable law of the aggregate baseband interference.

    ``abs_moment`` is the per-interferer 2/b-th absolute moment of one
    baseband component (see :func:`poissonfield.modulation.abs_moment`).
    """
    _check_b(s.b)
    if abs_moment < 0.0:
        raise ValueError("abs_moment must be >= 0")
    gam = (s.lam * math.pi / stability_coeff(2.0 / s.b)
           * math.exp(2.0 * s.sigma ** 2 / s.b ** 2) * abs_moment)
    return stable.CsStableParams(alpha=2.0 / s.b, gamma=gam)


def decomposition_mixer_params(b: float) -> stable.StableParams:
    """Law S(1/b, 1, cos(pi/2b)) of the variance mixer in the sub-Gaussian
    representation sqrt(B) * G of the aggregate interference."""
    _check_b(b)
    return stable.mixer_params(2.0 / b)


def decomposition_gaussian_variance(s: NetworkScenario, abs_moment: float) -> float:
    """Per-component variance of the Gaussian factor in sqrt(B) * G.

    Satisfies (V/2)^(1/b) == dispersion of :func:`interference_params`, which
    is what makes the decomposition exact in distribution.
    """
    _check_b(s.b)
    if abs_moment < 0.0:
        raise ValueError("abs_moment must be >= 0")
    base = s.lam * math.pi / stability_coeff(2.0 / s.b) * abs_moment
    return 2.0 * math.exp(2.0 * s.sigma ** 2 / s.b) * base ** s.b


def sample_field(s: NetworkScenario, r_max: float,
                 rng: np.random.Generator) -> FieldRealization:
    """Draw one field realization inside a disk of radius ``r_max``.

    The node count is Poisson(lam * pi * r_max^2) and squared distances are
    uniform on [0, r_max^2] (sorted), which is the arrival-times view of the
    radial process.  Shadowing draws are i.i.d. standard normal.
    """
    if r_max <= 0.0:
        raise ValueError("r_max must be > 0")
    n = rng.poisson(s.lam * math.pi * r_max * r_max)
    r_sq = np.sort(rng.uniform(0.0, r_max * r_max, n))
    g = rng.standard_normal(n)
    return FieldRealization(distances=np.sqrt(r_sq), shadowing=g, r_max=r_max)


def power_factor(f: FieldRealization, b: float, sigma: float) -> float:
    """Aggregate interference power factor sum_i e^{2 sigma G_i} / R_i^{2b}."""
    _check_b(b)
    if f.distances.size == 0:
        return 0.0
    if f.distances[0] == 0.0:
        raise SingularityError("interferer co-located with the probe receiver")
    return float(np.sum(np.exp(2.0 * sigma * f.shadowing)
                        / f.distances ** (2.0 * b)))


def truncation_radius(s: NetworkScenario, rel_tol: float = 0.01,
                      default_r_max: float = 10.0) -> float:
    """Disk radius at which the truncated field is a faithful stand-in for
    the infinite plane.

    The expected contribution of nodes beyond radius r is
    ``lam * pi * e^{2 sigma^2} * r^(2-2b) / (b-1)``; the returned radius
    makes it at most ``rel_tol`` times the scale gamma^b of the power-factor
    law (its median is proportional to that scale, and the law has no mean
    for b > 1), i.e.::

        r_max = [lam * pi * e^{2 sigma^2} / ((b-1) * rel_tol * gamma^b)]^(1/(2b-2))

    For lam = 0 any radius is admissible and ``default_r_max`` is returned.
    """
    _check_b(s.b)
    if not 0.0 < rel_tol < 1.0:
        raise ValueError("rel_tol must be in (0, 1)")
    if s.lam == 0.0:
        return default_r_max
    scale = power_factor_params(s).gamma ** s.b
    num = s.lam * math.pi * math.exp(2.0 * s.sigma ** 2)
    return (num / ((s.b - 1.0) * rel_tol * scale)) ** (1.0 / (2.0 * s.b - 2.0))
