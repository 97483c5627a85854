"""Model-predicted weekly and cumulative incidence.

The system is augmented with an accumulator C' = alpha * E counting new infections, integrated on a grid of
`steps_per_week` RK4 steps per week from t = 0, and read at whole weeks.
"""

from functools import partial

import numpy as np

from epikit.calibration.domain.fit_target_enum import FitTargetEnum
from epikit.integration.domain.runge_kutta import InitialValue, integrate_forward
from epikit.integration.domain.time_grid import TimeGrid
from epikit.model.domain.compartment_vector import CompartmentVector
from epikit.model.domain.dynamics import model_field
from epikit.model.domain.parameter_set import ParameterSet

DEFAULT_STEPS_PER_WEEK = 10


def _augmented_field(_t: float, y: np.ndarray, p: ParameterSet) -> np.ndarray:
    return np.append(model_field(y[:6], p), p.progression * y[2])


def model_cumulative_series(
    p: ParameterSet, x0: InitialValue, n_weeks: int, steps_per_week: int = DEFAULT_STEPS_PER_WEEK
) -> np.ndarray:
    """C(1), ..., C(n_weeks): new infections accumulated since t = 0 at the end of each week."""
    if n_weeks < 1:
        raise ValueError("n_weeks must be at least 1")
    if steps_per_week < 1:
        raise ValueError("steps_per_week must be at least 1")
    start = x0.to_array() if isinstance(x0, CompartmentVector) else np.asarray(x0, dtype=np.float64)
    grid = TimeGrid(t0=0.0, tf=float(n_weeks), n_steps=n_weeks * steps_per_week)
    trajectory = integrate_forward(partial(_augmented_field, p=p), np.append(start, 0.0), grid)
    return np.asarray(trajectory.values[steps_per_week::steps_per_week, 6])


def model_weekly_incidence(
    p: ParameterSet, x0: InitialValue, n_weeks: int, steps_per_week: int = DEFAULT_STEPS_PER_WEEK
) -> np.ndarray:
    """Model new infections per week, C(j) - C(j - 1) for j = 1..n_weeks.

    Raises:
        NonFiniteStateException: If the integration blows up.
    """
    return np.diff(model_cumulative_series(p, x0, n_weeks, steps_per_week), prepend=0.0)


def model_series(
    p: ParameterSet,
    x0: InitialValue,
    n_weeks: int,
    target: FitTargetEnum = FitTargetEnum.CUMULATIVE,
    steps_per_week: int = DEFAULT_STEPS_PER_WEEK,
) -> np.ndarray:
    """The model series compared with data under `target`."""
    if FitTargetEnum(target) is FitTargetEnum.WEEKLY:
        return model_weekly_incidence(p, x0, n_weeks, steps_per_week)
    return model_cumulative_series(p, x0, n_weeks, steps_per_week)
