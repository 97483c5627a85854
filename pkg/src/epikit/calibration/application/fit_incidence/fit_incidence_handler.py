import logging
from typing import Any, Dict, Optional

from epikit.calibration.application.fit_incidence.fit_incidence_command import FitIncidenceCommand
from epikit.calibration.domain.exponential_phase_r0 import ExponentialPhaseR0
from epikit.calibration.domain.fit_result import FitResult
from epikit.calibration.domain.growth_analysis import (
    epidemic_growth_rate,
    polynomial_trend_fit,
    r0_from_exponential_phase,
)
from epikit.calibration.domain.growth_regression import GrowthRegression
from epikit.calibration.domain.nelder_mead_fit import fitted_values, nelder_mead_fit
from epikit.calibration.domain.polynomial_trend import PolynomialTrend
from epikit.shared import BaseValue

logger = logging.getLogger(__name__)


class FitOutcome(BaseValue):
    fit: FitResult
    fitted: Dict[str, float]
    growth: GrowthRegression
    exponential_phase_r0: ExponentialPhaseR0
    trend: Optional[PolynomialTrend] = None

    def summary(self) -> Dict[str, Any]:
        """The fit report: fitted values, SSE, search diagnostics, residuals and the growth analysis."""
        report: Dict[str, Any] = {
            "fitted": self.fitted,
            "parameters": self.fit.parameters.to_symbols(),
            "target": self.fit.target,
            "sse": self.fit.sse,
            "iterations": self.fit.iterations,
            "evaluations": self.fit.evaluations,
            "converged": self.fit.converged,
            "at_bound": list(self.fit.at_bound),
            "interior": self.fit.interior,
            "residuals": [float(value) for value in self.fit.residuals],
            "growth": {
                "window": str(self.growth.window),
                "slope": self.growth.slope,
                "intercept": self.growth.intercept,
                "r_squared": self.growth.r_squared,
            },
            "exponential_phase_r0": self.exponential_phase_r0.to_record(),
        }
        if self.trend is not None:
            report["trend"] = {
                "degree": self.trend.degree,
                "target": self.trend.target,
                "coefficients": [float(value) for value in self.trend.coefficients],
                "r_squared": self.trend.r_squared,
            }
        return report


class FitIncidenceHandler:
    def handle(self, command: FitIncidenceCommand) -> FitOutcome:
        fit = nelder_mead_fit(
            command.data,
            command.initial_state,
            command.parameters,
            command.free,
            command.bounds,
            target=command.target,
            steps_per_week=command.steps_per_week,
        )
        if not fit.converged:
            logger.warning("Simplex search hit its evaluation cap", extra={"context": {"sse": fit.sse}})
        growth = epidemic_growth_rate(command.data, command.window)
        trend = (
            polynomial_trend_fit(command.data, command.degree, command.target) if command.degree is not None else None
        )
        return FitOutcome(
            fit=fit,
            fitted=fitted_values(fit, command.free),
            growth=growth,
            exponential_phase_r0=r0_from_exponential_phase(growth, fit.parameters, command.growth_scale),
            trend=trend,
        )
