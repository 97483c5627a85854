import numpy as np

from epikit.calibration.domain.exceptions import LengthMismatchException
from epikit.calibration.domain.fit_target_enum import FitTargetEnum
from epikit.calibration.domain.incidence_model import DEFAULT_STEPS_PER_WEEK, model_series
from epikit.calibration.domain.incidence_series import IncidenceSeries
from epikit.integration.domain.runge_kutta import InitialValue
from epikit.model.domain.parameter_set import ParameterSet


def observed_series(data: IncidenceSeries, target: FitTargetEnum = FitTargetEnum.CUMULATIVE) -> np.ndarray:
    if FitTargetEnum(target) is FitTargetEnum.WEEKLY:
        return np.asarray(data.new_cases)
    return data.cumulative_cases


def series_residuals(observed: np.ndarray, predicted: np.ndarray) -> np.ndarray:
    """Observation minus model, element-wise.

    Raises:
        LengthMismatchException: If the two series differ in length.
    """
    observed = np.asarray(observed, dtype=np.float64)
    predicted = np.asarray(predicted, dtype=np.float64)
    if observed.shape != predicted.shape:
        raise LengthMismatchException(observed=int(observed.size), predicted=int(predicted.size))
    return observed - predicted


def residuals(
    p: ParameterSet,
    data: IncidenceSeries,
    x0: InitialValue,
    target: FitTargetEnum = FitTargetEnum.CUMULATIVE,
    steps_per_week: int = DEFAULT_STEPS_PER_WEEK,
) -> np.ndarray:
    """Y_j - I(t_j) for every data week, the model started at the first week."""
    predicted = model_series(p, x0, data.size, target, steps_per_week)
    return series_residuals(observed_series(data, target), predicted)


def sum_of_squares(values: np.ndarray) -> float:
    return float(np.sum(np.asarray(values) ** 2))


def sse(
    p: ParameterSet,
    data: IncidenceSeries,
    x0: InitialValue,
    target: FitTargetEnum = FitTargetEnum.CUMULATIVE,
    steps_per_week: int = DEFAULT_STEPS_PER_WEEK,
) -> float:
    """Sum of squared residuals; cumulative counts by default."""
    return sum_of_squares(residuals(p, data, x0, target, steps_per_week))
