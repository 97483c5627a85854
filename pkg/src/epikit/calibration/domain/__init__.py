from epikit.calibration.domain.exponential_phase_r0 import ExponentialPhaseR0
from epikit.calibration.domain.fit_result import FitResult
from epikit.calibration.domain.fit_target_enum import FitTargetEnum
from epikit.calibration.domain.growth_analysis import (
    epidemic_growth_rate,
    polynomial_trend_fit,
    r0_from_exponential_phase,
)
from epikit.calibration.domain.growth_regression import GrowthRegression
from epikit.calibration.domain.incidence_model import model_cumulative_series, model_series, model_weekly_incidence
from epikit.calibration.domain.incidence_series import IncidenceSeries
from epikit.calibration.domain.least_squares import observed_series, residuals, series_residuals, sse
from epikit.calibration.domain.nelder_mead_fit import nelder_mead_fit
from epikit.calibration.domain.polynomial_trend import PolynomialTrend
from epikit.calibration.domain.week_window import WeekWindow

__all__ = [
    "ExponentialPhaseR0",
    "FitResult",
    "FitTargetEnum",
    "GrowthRegression",
    "IncidenceSeries",
    "PolynomialTrend",
    "WeekWindow",
    "epidemic_growth_rate",
    "model_cumulative_series",
    "model_series",
    "model_weekly_incidence",
    "nelder_mead_fit",
    "observed_series",
    "polynomial_trend_fit",
    "r0_from_exponential_phase",
    "residuals",
    "series_residuals",
    "sse",
]
