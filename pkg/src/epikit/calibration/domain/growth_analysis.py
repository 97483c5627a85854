"""Early-growth analysis of incidence data: growth-rate regression, the closed-form R0 it feeds, and trend fits."""

import logging
from typing import Optional

import numpy as np
from numpy.polynomial import Polynomial
from scipy.stats import linregress

from epikit.calibration.domain.exceptions import DegenerateWindowException
from epikit.calibration.domain.exponential_phase_r0 import ExponentialPhaseR0
from epikit.calibration.domain.fit_target_enum import FitTargetEnum
from epikit.calibration.domain.growth_regression import GrowthRegression
from epikit.calibration.domain.incidence_series import MINIMUM_FIT_WEEKS, IncidenceSeries
from epikit.calibration.domain.least_squares import observed_series
from epikit.calibration.domain.polynomial_trend import PolynomialTrend
from epikit.calibration.domain.week_window import WeekWindow
from epikit.model.domain.exceptions import DegenerateParameterException
from epikit.model.domain.parameter_set import ParameterSet

logger = logging.getLogger(__name__)


def _bounded_r_squared(value: float) -> float:
    if not np.isfinite(value):
        return 0.0
    return float(min(max(value, 0.0), 1.0))


def epidemic_growth_rate(data: IncidenceSeries, window: Optional[WeekWindow] = None) -> GrowthRegression:
    """Regress weekly new cases q on cumulative cases Q over `window`; q ~ slope * Q in the exponential phase.

    Cumulative cases count from the first week of `data`, whatever the window.

    Raises:
        InsufficientDataException: If `data` holds fewer than two weeks.
        DegenerateWindowException: If the window holds fewer than two weeks or Q is constant on it.
    """
    data.require_weeks(MINIMUM_FIT_WEEKS, "epidemic_growth_rate")
    if window is None:
        window = WeekWindow(start=int(data.week_index[0]), stop=int(data.week_index[-1]))
    mask = window.mask(data.week_index)
    cumulative = data.cumulative_cases[mask]
    new_cases = np.asarray(data.new_cases)[mask]
    points = int(mask.sum())
    if points < 2:
        raise DegenerateWindowException(
            window=(window.start, window.stop), message="The window holds fewer than two weeks.", points=points
        )
    if np.ptp(cumulative) == 0.0:
        raise DegenerateWindowException(
            window=(window.start, window.stop), message="Cumulative cases are constant on the window.", points=points
        )
    fit = linregress(cumulative, new_cases)
    regression = GrowthRegression(
        slope=float(fit.slope),
        intercept=float(fit.intercept),
        r_squared=_bounded_r_squared(float(fit.rvalue) ** 2),
        window=window,
        points=points,
    )
    logger.debug("Growth regression fitted", extra={"context": {"window": str(window), "slope": regression.slope}})
    return regression


def r0_from_exponential_phase(
    growth: GrowthRegression, p: ParameterSet, scale: Optional[float] = None
) -> ExponentialPhaseR0:
    """Evaluate the early-growth closed form with g = slope * scale in place of every Lambda.

        R0 = g alpha beta2 / ((mu + phi)(alpha + mu) b2)
             + alpha mu (g + alpha + mu - beta1 g / mu)(g + b2) / ((mu + phi)(alpha + mu) b2),

    with b2 = mu + delta + gamma + gamma1 and `scale` defaulting to the recruitment rate.

    Raises:
        DegenerateParameterException: If mu, mu + phi, alpha + mu or b2 is zero.
    """
    mu = p.natural_death
    alpha = p.progression
    for quantity, value in (
        ("mu", mu),
        ("mu+phi", mu + p.vaccination_rate),
        ("alpha+mu", p.exposed_exit_rate),
        ("mu+delta+gamma+gamma1", p.infected_exit_rate),
    ):
        if not value > 0.0:
            raise DegenerateParameterException(quantity=quantity, values=p.to_symbols())
    g = growth.slope * (p.recruitment if scale is None else scale)
    b2 = p.infected_exit_rate
    denominator = (mu + p.vaccination_rate) * (alpha + mu) * b2
    first = g * alpha * p.contact_infected / denominator
    second = alpha * mu * (g + alpha + mu - p.contact_exposed * g / mu) * (g + b2) / denominator
    return ExponentialPhaseR0(value=first + second, growth_value=g)


def polynomial_trend_fit(
    data: IncidenceSeries, degree: int, target: FitTargetEnum = FitTargetEnum.WEEKLY
) -> PolynomialTrend:
    """Ordinary least-squares polynomial of the weekly (or cumulative) series against the week index.

    Raises:
        DegenerateWindowException: If there are not more weeks than the degree.
    """
    if degree < 0:
        raise ValueError("degree must be non-negative")
    if data.size <= max(degree, 1):
        raise DegenerateWindowException(
            window=(int(data.week_index[0]), int(data.week_index[-1])),
            message="A polynomial fit needs more weeks than its degree.",
            points=data.size,
        )
    weeks = data.week_index.astype(np.float64)
    observed = observed_series(data, target)
    polynomial = Polynomial.fit(weeks, observed, degree).convert()
    fitted = polynomial(weeks)
    residual = observed - fitted
    total = float(np.sum((observed - observed.mean()) ** 2))
    r_squared = 1.0 - float(np.sum(residual**2)) / total if total > 0.0 else 1.0
    return PolynomialTrend(
        degree=degree,
        coefficients=np.pad(polynomial.coef, (0, degree + 1 - polynomial.coef.size)),
        fitted=fitted,
        residuals=residual,
        r_squared=r_squared,
        target=target,
    )
