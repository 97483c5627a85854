from epikit.epimetrics.domain.generation_interval import GenerationInterval
from epikit.epimetrics.domain.renewal import (
    effective_r_envelope,
    effective_r_series,
    generation_interval_bin_masses,
    generation_interval_cdf,
    generation_interval_density,
)
from epikit.epimetrics.domain.rt_series import RtEnvelope, RtSeries

__all__ = [
    "GenerationInterval",
    "RtEnvelope",
    "RtSeries",
    "effective_r_envelope",
    "effective_r_series",
    "generation_interval_bin_masses",
    "generation_interval_cdf",
    "generation_interval_density",
]
