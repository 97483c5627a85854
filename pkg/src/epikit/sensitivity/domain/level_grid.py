"""R0 level grids over two rates and level-set extraction from them."""

import logging
from typing import Callable, Optional

import numpy as np
from pydantic import ValidationError

from epikit.model.domain.parameter_set import ParameterSet
from epikit.model.domain.reproduction_numbers import r0_without_control
from epikit.sensitivity.domain.exceptions import InvalidRangeException
from epikit.sensitivity.domain.parameter_range import ParameterRange
from epikit.sensitivity.domain.r0_grid import R0Grid
from epikit.shared.exceptions import DomainException

logger = logging.getLogger(__name__)

DEFAULT_RESOLUTION = 50
CENTRE_STEP = 1e-6


def _safe(function: Callable[[ParameterSet], float], base: ParameterSet, overrides: dict) -> float:
    try:
        value = float(function(base.with_overrides(overrides)))
    except (DomainException, ValidationError, ZeroDivisionError):
        return float("nan")
    return value if np.isfinite(value) else float("nan")


def _centre_slope_sign(
    function: Callable[[ParameterSet], float],
    base: ParameterSet,
    varied: ParameterRange,
    fixed: ParameterRange,
) -> int:
    centre = 0.5 * (varied.low + varied.high)
    other = 0.5 * (fixed.low + fixed.high)
    step = CENTRE_STEP * varied.width
    above = _safe(function, base, {varied.name: centre + step, fixed.name: other})
    below = _safe(function, base, {varied.name: centre - step, fixed.name: other})
    difference = above - below
    return int(np.sign(difference)) if np.isfinite(difference) else 0


def r0_level_grid(
    px: ParameterRange,
    py: ParameterRange,
    base: ParameterSet,
    resolution: int = DEFAULT_RESOLUTION,
    output: Optional[Callable[[ParameterSet], float]] = None,
) -> R0Grid:
    """Evaluate R0 (or `output`) on a `resolution` x `resolution` grid over px and py.

    Raises:
        InvalidRangeException: If px and py name the same rate or the resolution is below 2.
    """
    if resolution < 2:
        raise InvalidRangeException(name=str(px.name), message="The grid needs at least two points per axis.")
    if px.name == py.name:
        raise InvalidRangeException(name=str(px.name), message="The two grid axes must be different rates.")
    function = output if output is not None else r0_without_control
    xs = np.linspace(px.low, px.high, resolution)
    ys = np.linspace(py.low, py.high, resolution)
    values = np.array([[_safe(function, base, {px.name: x, py.name: y}) for x in xs] for y in ys])
    grid = R0Grid(
        x_range=px,
        y_range=py,
        x_values=xs,
        y_values=ys,
        values=values,
        x_slope_sign=_centre_slope_sign(function, base, px, py),
        y_slope_sign=_centre_slope_sign(function, base, py, px),
    )
    missing = int(np.count_nonzero(~np.isfinite(values)))
    if missing:
        logger.warning("Some grid cells are undefined", extra={"context": {"missing": missing}})
    return grid


def level_curve(grid: R0Grid, level: float) -> np.ndarray:
    """Points (x, y) where R0 crosses `level`, one per grid column that crosses it.

    Along each column the first bracketing pair of nodes is interpolated linearly in y.
    """
    points = []
    ys = grid.y_values
    for index, x in enumerate(grid.x_values):
        column = grid.values[:, index] - level
        for j in range(ys.size - 1):
            lower, upper = column[j], column[j + 1]
            if not (np.isfinite(lower) and np.isfinite(upper)) or lower * upper > 0.0:
                continue
            if lower == upper:
                y = ys[j]
            else:
                y = ys[j] + (0.0 - lower) * (ys[j + 1] - ys[j]) / (upper - lower)
            points.append((float(x), float(y)))
            break
    return np.array(points, dtype=np.float64).reshape(-1, 2)
