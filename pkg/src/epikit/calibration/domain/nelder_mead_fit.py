"""Least-squares calibration of selected rates by a Nelder-Mead simplex search in log space."""

import logging
from typing import Collection, Dict, List, Mapping, Optional, Tuple, Union

import numpy as np
from pydantic import ValidationError
from scipy.optimize import minimize

from epikit.calibration.domain.exceptions import InvalidBoundsException
from epikit.calibration.domain.fit_result import FitResult
from epikit.calibration.domain.fit_target_enum import FitTargetEnum
from epikit.calibration.domain.incidence_model import DEFAULT_STEPS_PER_WEEK
from epikit.calibration.domain.incidence_series import MINIMUM_FIT_WEEKS, IncidenceSeries
from epikit.calibration.domain.least_squares import residuals, sum_of_squares
from epikit.integration.domain.exceptions import NonFiniteStateException
from epikit.integration.domain.runge_kutta import InitialValue
from epikit.model.domain.parameter_name_enum import ParameterNameEnum
from epikit.model.domain.parameter_set import ParameterSet

logger = logging.getLogger(__name__)

SIMPLEX_TOLERANCE = 1e-8
EVALUATIONS_PER_DIMENSION = 200
OUT_OF_BOUNDS_PENALTY = 1e6
BOUND_TOLERANCE = 1e-6

Bounds = Mapping[Union[ParameterNameEnum, str], Tuple[float, float]]


def _validated_free_parameters(
    initial: ParameterSet, free: Collection[Union[ParameterNameEnum, str]], bounds: Bounds
) -> Tuple[List[ParameterNameEnum], np.ndarray, np.ndarray]:
    if not free:
        raise InvalidBoundsException(parameter="", message="At least one parameter must be free.")
    keyed = {}
    for key, interval in bounds.items():
        try:
            keyed[ParameterNameEnum(key)] = interval
        except ValueError as error:
            raise InvalidBoundsException(parameter=str(key), message="Unknown parameter name.") from error
    names: List[ParameterNameEnum] = []
    lows, highs = [], []
    for raw in free:
        try:
            name = ParameterNameEnum(raw)
        except ValueError as error:
            raise InvalidBoundsException(parameter=str(raw), message="Unknown parameter name.") from error
        if name in names:
            continue
        if name not in keyed:
            raise InvalidBoundsException(parameter=name.value, message="A free parameter has no bounds.")
        low, high = (float(value) for value in keyed[name])
        if not (np.isfinite(low) and np.isfinite(high) and 0.0 < low < high):
            raise InvalidBoundsException(
                parameter=name.value,
                message="Bounds must be finite with 0 < low < high.",
                bounds=[low, high],
            )
        start = initial.value_of(name)
        if not low <= start <= high:
            raise InvalidBoundsException(
                parameter=name.value,
                message="The initial value lies outside its bounds.",
                bounds=[low, high],
                details={"initial": start},
            )
        names.append(name)
        lows.append(low)
        highs.append(high)
    return names, np.log(np.array(lows)), np.log(np.array(highs))


class _Objective:
    """Penalised log-space SSE that remembers the best value it has seen."""

    def __init__(
        self,
        data: IncidenceSeries,
        x0: InitialValue,
        initial: ParameterSet,
        names: List[ParameterNameEnum],
        log_low: np.ndarray,
        log_high: np.ndarray,
        target: FitTargetEnum,
        steps_per_week: int,
    ) -> None:
        self.data = data
        self.x0 = x0
        self.initial = initial
        self.names = names
        self.log_low = log_low
        self.log_high = log_high
        self.target = target
        self.steps_per_week = steps_per_week
        self.evaluations = 0
        self.best = float("inf")
        self.history: List[float] = []

    def parameters(self, z: np.ndarray) -> ParameterSet:
        clipped = np.clip(z, self.log_low, self.log_high)
        return self.initial.with_overrides({name: float(np.exp(v)) for name, v in zip(self.names, clipped)})

    def sse(self, p: ParameterSet) -> float:
        try:
            value = sum_of_squares(residuals(p, self.data, self.x0, self.target, self.steps_per_week))
        except NonFiniteStateException:
            return float("inf")
        return value if np.isfinite(value) else float("inf")

    def __call__(self, z: np.ndarray) -> float:
        self.evaluations += 1
        try:
            value = self.sse(self.parameters(z))
        except ValidationError:
            return float("inf")
        distance = float(np.sum((z - np.clip(z, self.log_low, self.log_high)) ** 2))
        if distance > 0.0:
            return value + OUT_OF_BOUNDS_PENALTY * (1.0 + abs(value)) * distance
        self.best = min(self.best, value)
        return value

    def record_iteration(self, *_: object) -> None:
        self.history.append(self.best)


def nelder_mead_fit(
    data: IncidenceSeries,
    x0: InitialValue,
    initial: ParameterSet,
    free: Collection[Union[ParameterNameEnum, str]],
    bounds: Bounds,
    target: FitTargetEnum = FitTargetEnum.CUMULATIVE,
    steps_per_week: int = DEFAULT_STEPS_PER_WEEK,
    max_evaluations: Optional[int] = None,
) -> FitResult:
    """Fit the `free` rates of `initial` to `data` by minimising the SSE.

    The simplex runs over the logarithms of the free rates with the standard coefficients (reflection 1,
    expansion 2, contraction 0.5, shrink 0.5). Points outside the bounds are scored at the clipped point
    plus a quadratic penalty in their log-distance to the box. The search stops when every vertex lies
    within 1e-8 (relative) of the best one, or after 200 evaluations per free rate.

    Args:
        data: Observed weekly incidence.
        x0: Initial state of the model at the first data week.
        initial: Starting parameter set; rates that are not free stay fixed.
        free: Names of the rates to fit.
        bounds: Positive (low, high) interval per free rate.
        target: Compare cumulative (default) or weekly counts.
        steps_per_week: RK4 steps per week of the model runs.
        max_evaluations: Evaluation cap; 200 per free rate by default.

    Returns:
        FitResult: Best parameters found with their residuals and search diagnostics; `at_bound` names the free
            rates whose best value sits on a bound, which is also logged as a warning.

    Raises:
        InvalidBoundsException: If `free` is empty, a name is unknown, or a bound or start value is invalid.
        InsufficientDataException: If `data` holds fewer than two weeks.
    """
    data.require_weeks(MINIMUM_FIT_WEEKS, "nelder_mead_fit")
    names, log_low, log_high = _validated_free_parameters(initial, free, bounds)
    objective = _Objective(data, x0, initial, names, log_low, log_high, FitTargetEnum(target), steps_per_week)
    start = np.log(np.array([initial.value_of(name) for name in names]))
    cap = max_evaluations if max_evaluations is not None else EVALUATIONS_PER_DIMENSION * len(names)
    outcome = minimize(
        objective,
        start,
        method="Nelder-Mead",
        callback=objective.record_iteration,
        options={"xatol": SIMPLEX_TOLERANCE, "fatol": np.inf, "maxfev": cap, "maxiter": cap},
    )
    z = np.clip(np.asarray(outcome.x), log_low, log_high)
    pinned = (z - log_low <= BOUND_TOLERANCE) | (log_high - z <= BOUND_TOLERANCE)
    fitted = objective.parameters(np.asarray(outcome.x))
    fitted_residuals = residuals(fitted, data, x0, target, steps_per_week)
    result = FitResult(
        parameters=fitted,
        sse=sum_of_squares(fitted_residuals),
        residuals=fitted_residuals,
        iterations=int(outcome.nit),
        evaluations=objective.evaluations,
        converged=bool(outcome.status == 0),
        target=target,
        best_sse_history=tuple(objective.history),
        at_bound=tuple(name.value for name, hit in zip(names, pinned) if hit),
    )
    logger.info(
        "Least-squares fit finished",
        extra={
            "context": {
                "free": [name.value for name in names],
                "sse": result.sse,
                "iterations": result.iterations,
                "converged": result.converged,
                "at_bound": list(result.at_bound),
            }
        },
    )
    if result.at_bound:
        logger.warning(
            "Best point lies on a bound; widen the bounds or review the start value",
            extra={"context": {"at_bound": list(result.at_bound), "sse": result.sse}},
        )
    return result


def fitted_values(result: FitResult, names: Collection[Union[ParameterNameEnum, str]]) -> Dict[str, float]:
    """The fitted rates of interest, keyed by symbol."""
    return {ParameterNameEnum(name).value: result.parameters.value_of(name) for name in names}
