"""Aggregate network interference from a Poisson field of interferers.

Stable-law interference distributions, semi-analytical outage and average
symbol error probabilities for a probe link, and a waveform-level Monte
Carlo oracle that validates every closed form.
"""

__version__ = "0.1.0"

from .exceptions import (
    AccuracyError,
    BracketingError,
    ConfigError,
    DegenerateDistributionError,
    DivergenceError,
    GeometryError,
    PoissonFieldError,
    SingularityError,
)
from .util import McEstimate, spawn_streams
from .stable import (
    CsStableParams,
    StableParams,
    char_function,
    mixer_params,
    pdf,
    sample_cs_stable,
    sample_stable,
)
from .field import (
    FieldRealization,
    NetworkScenario,
    decomposition_gaussian_variance,
    decomposition_mixer_params,
    interference_params,
    power_factor,
    power_factor_params,
    sample_field,
    sigma_from_db,
    sigma_to_db,
    stability_coeff,
    truncation_radius,
)
from .modulation import (
    Constellation,
    DecisionGeometry,
    Wedge,
    abs_moment,
    baseband_variance,
    constellation,
    constellation_from_json,
    decision_geometry,
    fading_moment,
    moment_table,
    mpsk,
    mqam,
    overlap_moment,
)
from .errorprob import (
    IsoInrResult,
    average_error_probability,
    fading_integral,
    gaussian_ser_oracle,
    gaussian_ser_oracle_rayleigh,
    inr_for_outage,
    outage_probability,
    ser_awgn,
    ser_conditional,
    ser_mpsk,
    ser_mqam,
    sinr,
)
from .oracle import (
    InterfererDraw,
    aggregate_interference,
    empirical_power_factor,
    interference_sample,
    projection_error,
    sample_aggregate_interference,
    simulate_ser,
)

__all__ = [
    "__version__",
    # exceptions
    "AccuracyError", "BracketingError", "ConfigError",
    "DegenerateDistributionError", "DivergenceError", "GeometryError",
    "PoissonFieldError", "SingularityError",
    # plumbing
    "McEstimate", "spawn_streams",
    # stable laws
    "StableParams", "CsStableParams", "char_function", "mixer_params",
    "sample_stable", "sample_cs_stable", "pdf",
    # field
    "NetworkScenario", "FieldRealization", "sigma_from_db", "sigma_to_db",
    "stability_coeff", "power_factor_params", "interference_params",
    "decomposition_mixer_params", "decomposition_gaussian_variance",
    "sample_field", "power_factor", "truncation_radius",
    # modulation
    "Constellation", "DecisionGeometry", "Wedge", "constellation",
    "constellation_from_json", "mpsk", "mqam", "decision_geometry",
    "baseband_variance", "overlap_moment", "abs_moment", "fading_moment",
    "moment_table",
    # error probability
    "sinr", "fading_integral", "ser_conditional", "ser_mpsk", "ser_mqam",
    "ser_awgn", "gaussian_ser_oracle", "gaussian_ser_oracle_rayleigh",
    "outage_probability", "average_error_probability", "IsoInrResult",
    "inr_for_outage",
    # oracle
    "InterfererDraw", "interference_sample", "aggregate_interference",
    "projection_error", "simulate_ser", "sample_aggregate_interference",
    "empirical_power_factor",
]
