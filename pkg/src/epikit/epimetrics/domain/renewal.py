"""Generation-interval density and the renewal-equation estimate of the effective reproduction number.

The density is the hypoexponential

    h(t) = b1 b2 (exp(-b1 t) - exp(-b2 t)) / (b2 - b1),    mean 1/b1 + 1/b2,

and R(t) = c(t) / sum_{s=1..t} c(t - s) hbar(s) with hbar(s) the mass of h on the week [s - 1, s).
"""

import logging
from itertools import product
from typing import Optional, Tuple

import numpy as np

from epikit.calibration.domain.incidence_series import IncidenceSeries
from epikit.epimetrics.domain.exceptions import InvalidRateRangeException, NegativeTimeException
from epikit.epimetrics.domain.generation_interval import GenerationInterval
from epikit.epimetrics.domain.rt_series import RtEnvelope, RtSeries

logger = logging.getLogger(__name__)

DEFAULT_ENVELOPE_RESOLUTION = 5


def generation_interval_density(gi: GenerationInterval, t: float) -> float:
    """h(t) per week; the Erlang limit b^2 t exp(-b t) when the rates coincide.

    Raises:
        NegativeTimeException: If t < 0.
    """
    if t < 0.0:
        raise NegativeTimeException(t=t)
    if gi.has_equal_rates:
        rate = 0.5 * (gi.b1 + gi.b2)
        return rate * rate * t * float(np.exp(-rate * t))
    return gi.b1 * gi.b2 * float(np.exp(-gi.b1 * t) - np.exp(-gi.b2 * t)) / (gi.b2 - gi.b1)


def generation_interval_cdf(gi: GenerationInterval, t: np.ndarray) -> np.ndarray:
    """Closed-form distribution function of the generation interval, for t >= 0."""
    t = np.asarray(t, dtype=np.float64)
    if gi.has_equal_rates:
        rate = 0.5 * (gi.b1 + gi.b2)
        return 1.0 - np.exp(-rate * t) * (1.0 + rate * t)
    return 1.0 - (gi.b2 * np.exp(-gi.b1 * t) - gi.b1 * np.exp(-gi.b2 * t)) / (gi.b2 - gi.b1)


def generation_interval_bin_masses(gi: GenerationInterval, horizon: int) -> np.ndarray:
    """hbar(1), ..., hbar(horizon): the density integrated over the weeks [s - 1, s)."""
    if horizon < 0:
        raise NegativeTimeException(t=float(horizon), message="The horizon must not be negative.")
    edges = generation_interval_cdf(gi, np.arange(horizon + 1, dtype=np.float64))
    return np.diff(edges)


def renewal_denominators(new_cases: np.ndarray, masses: np.ndarray) -> np.ndarray:
    """sum_{s=1..t} c(t - s) hbar(s) for every week t, with `masses[s - 1]` = hbar(s)."""
    n = new_cases.size
    kernel = np.concatenate([[0.0], masses[: max(n - 1, 0)]])
    return np.convolve(new_cases, kernel)[:n]


def effective_r_series(data: IncidenceSeries, gi: GenerationInterval) -> RtSeries:
    """Weekly R(t); weeks whose denominator is zero are marked undefined instead of raising."""
    cases = np.asarray(data.new_cases)
    denominators = renewal_denominators(cases, generation_interval_bin_masses(gi, cases.size - 1))
    defined = denominators > 0.0
    rt = np.full(cases.size, np.nan)
    rt[defined] = cases[defined] / denominators[defined]
    series = RtSeries(week_index=data.week_index, rt=rt, defined=defined)
    logger.debug(
        "Effective reproduction number estimated",
        extra={"context": {"weeks": cases.size, "defined_from": series.defined_from}},
    )
    return series


def _rate_grid(name: str, bounds: Tuple[float, float], resolution: int) -> np.ndarray:
    low, high = (float(value) for value in bounds)
    if not (np.isfinite(low) and np.isfinite(high) and 0.0 < low <= high):
        raise InvalidRateRangeException(rate=name, bounds=(low, high))
    if low == high:
        return np.array([low])
    return np.linspace(low, high, resolution)


def effective_r_envelope(
    data: IncidenceSeries,
    b1_range: Tuple[float, float],
    b2_range: Tuple[float, float],
    resolution: Optional[int] = None,
) -> RtEnvelope:
    """Point-wise min and max of R(t) over a `resolution` x `resolution` grid of (b1, b2).

    This is a deterministic band under parameter uncertainty, not a statistical interval.

    Raises:
        InvalidRateRangeException: If a range is not a positive interval.
    """
    steps = DEFAULT_ENVELOPE_RESOLUTION if resolution is None else resolution
    if steps < 2:
        raise ValueError("resolution must be at least 2")
    b1_values = _rate_grid("b1", b1_range, steps)
    b2_values = _rate_grid("b2", b2_range, steps)
    stacked = np.array(
        [
            effective_r_series(data, GenerationInterval(b1=b1, b2=b2)).rt
            for b1, b2 in product(b1_values, b2_values)
        ]
    )
    defined = np.all(np.isfinite(stacked), axis=0)
    lower = np.full(stacked.shape[1], np.nan)
    upper = np.full(stacked.shape[1], np.nan)
    lower[defined] = stacked[:, defined].min(axis=0)
    upper[defined] = stacked[:, defined].max(axis=0)
    return RtEnvelope(
        week_index=data.week_index,
        lower=lower,
        upper=upper,
        defined=defined,
        combinations=int(stacked.shape[0]),
    )
