"""Evaluation of a scalar model output at every row of a sensitivity design."""

import logging
from concurrent.futures import ThreadPoolExecutor
from functools import partial
from typing import Any, Callable, Optional, Union

import numpy as np
from pydantic import ValidationError, field_validator
from scipy.integrate import trapezoid

from epikit.integration.domain.runge_kutta import integrate_forward
from epikit.integration.domain.time_grid import TimeGrid
from epikit.model.domain.dynamics import model_field
from epikit.model.domain.parameter_set import ParameterSet
from epikit.model.domain.reproduction_numbers import endemic_threshold, r0_without_control
from epikit.model.domain.state_vector import StateVector
from epikit.sensitivity.domain.sample_matrix import SampleMatrix
from epikit.sensitivity.domain.sensitivity_output_enum import SensitivityOutputEnum
from epikit.shared import BaseArrayValue
from epikit.shared.base_array_value import as_readonly_array
from epikit.shared.custom_types import NaturalNumber
from epikit.shared.exceptions import DomainException

logger = logging.getLogger(__name__)

OutputFunction = Callable[[ParameterSet], float]


class ModelEvaluation(BaseArrayValue):
    """Output per design row; rows whose evaluation failed hold NaN and are counted in `failures`."""

    values: np.ndarray
    failures: NaturalNumber

    @field_validator("values", mode="before")
    @classmethod
    def _as_vector(cls, value: Any) -> np.ndarray:
        return as_readonly_array(value, ndim=1)

    @property
    def valid(self) -> np.ndarray:
        return np.isfinite(self.values)


def _autonomous(p: ParameterSet, _t: float, x: np.ndarray) -> np.ndarray:
    return model_field(x, p)


def _simulated(p: ParameterSet, initial_state: StateVector, grid: TimeGrid) -> np.ndarray:
    return np.asarray(integrate_forward(partial(_autonomous, p), initial_state, grid).values)


def peak_infected(p: ParameterSet, initial_state: StateVector, grid: TimeGrid) -> float:
    """Largest I(t) on the grid."""
    return float(np.max(_simulated(p, initial_state, grid)[:, 3]))


def cumulative_infected(p: ParameterSet, initial_state: StateVector, grid: TimeGrid) -> float:
    """Trapezoidal integral of E + I over the grid, in person-weeks."""
    values = _simulated(p, initial_state, grid)
    return float(trapezoid(values[:, 2] + values[:, 3], x=grid.times))


def output_function(
    output: SensitivityOutputEnum,
    initial_state: Optional[StateVector] = None,
    grid: Optional[TimeGrid] = None,
) -> OutputFunction:
    """The scalar function behind a named output.

    `r0_with_control` is evaluated at the disease-free population Lambda / mu. The simulated outputs need
    an initial state and a grid.
    """
    kind = SensitivityOutputEnum(output)
    if kind is SensitivityOutputEnum.R0:
        return r0_without_control
    if kind is SensitivityOutputEnum.R0_WITH_CONTROL:
        return endemic_threshold
    if initial_state is None or grid is None:
        raise ValueError(f"output {kind.value} needs an initial state and a time grid")
    if kind is SensitivityOutputEnum.PEAK_INFECTED:
        return partial(peak_infected, initial_state=initial_state, grid=grid)
    return partial(cumulative_infected, initial_state=initial_state, grid=grid)


def _evaluate_row(index: int, m: SampleMatrix, base: ParameterSet, function: OutputFunction) -> float:
    try:
        value = float(function(base.with_overrides(m.row(index))))
    except (DomainException, ValidationError, ZeroDivisionError) as error:
        logger.debug("Design row failed", extra={"context": {"row": index, "error": str(error)}})
        return float("nan")
    return value if np.isfinite(value) else float("nan")


def evaluate_model_over_samples(
    m: SampleMatrix,
    base: ParameterSet,
    output: Union[SensitivityOutputEnum, str, OutputFunction] = SensitivityOutputEnum.R0,
    max_workers: Optional[int] = None,
    initial_state: Optional[StateVector] = None,
    grid: Optional[TimeGrid] = None,
) -> ModelEvaluation:
    """Overlay each row on `base` and evaluate `output` there.

    With `max_workers` above one, rows run on a thread pool; results are placed by row index, so the
    order never depends on scheduling.

    Args:
        m: The design.
        base: Values of the rates the design does not vary.
        output: A named output or any function of a parameter set.
        max_workers: Thread count; sequential when None or 1.
        initial_state: Start of the simulation for simulated outputs.
        grid: Horizon of the simulation for simulated outputs.

    Returns:
        ModelEvaluation: One value per row, NaN where the evaluation failed.
    """
    function = output if callable(output) else output_function(output, initial_state, grid)
    evaluate = partial(_evaluate_row, m=m, base=base, function=function)
    rows = range(m.n_samples)
    if max_workers is not None and max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            values = list(pool.map(evaluate, rows))
    else:
        values = [evaluate(index) for index in rows]
    result = np.array(values, dtype=np.float64)
    failures = int(np.count_nonzero(~np.isfinite(result)))
    if failures:
        logger.warning("Some design rows could not be evaluated", extra={"context": {"failures": failures}})
    return ModelEvaluation(values=result, failures=failures)
