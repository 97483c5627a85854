"""Forward-backward sweep for the optimality system, plus evaluation of fixed constant controls."""

import logging
from functools import partial
from typing import Optional, Tuple

import numpy as np

from epikit.control.domain.control_schedule import ControlSchedule
from epikit.control.domain.control_weights import ControlWeights
from epikit.control.domain.pontryagin import (
    adjoint_field,
    control_drives,
    control_gradient_field,
    objective,
    optimality_candidates,
)
from epikit.control.domain.sweep_result import SweepResult
from epikit.control.domain.sweep_settings import SweepSettings
from epikit.integration.domain.grid_interpolation import interpolate_on_grid
from epikit.integration.domain.runge_kutta import InitialValue, integrate_backward, integrate_forward
from epikit.integration.domain.time_grid import TimeGrid
from epikit.integration.domain.trajectory import Trajectory
from epikit.model.domain.control_vector import ControlVector
from epikit.model.domain.dynamics import controlled_field
from epikit.model.domain.parameter_set import ParameterSet

logger = logging.getLogger(__name__)

INTERIOR_MARGIN = 1e-3
_TINY = np.finfo(np.float64).tiny


def _state_rhs(t: float, x: np.ndarray, p: ParameterSet, grid: TimeGrid, controls: np.ndarray) -> np.ndarray:
    return controlled_field(x, p, interpolate_on_grid(grid, controls, t))


def _adjoint_rhs(
    t: float,
    psi: np.ndarray,
    p: ParameterSet,
    aw: ControlWeights,
    grid: TimeGrid,
    states: np.ndarray,
    controls: np.ndarray,
) -> np.ndarray:
    x = interpolate_on_grid(grid, states, t)
    w = interpolate_on_grid(grid, controls, t)
    return adjoint_field(psi, x, w, p, aw)


def solve_states(p: ParameterSet, x0: InitialValue, grid: TimeGrid, controls: np.ndarray) -> Trajectory:
    """Forward RK4 solve of the controlled system, controls linear between nodes."""
    return integrate_forward(partial(_state_rhs, p=p, grid=grid, controls=controls), x0, grid)


def solve_adjoints(
    p: ParameterSet, aw: ControlWeights, states: Trajectory, controls: np.ndarray
) -> Trajectory:
    """Backward RK4 solve of the costates from psi(tf) = 0, states and controls linear between nodes."""
    rhs = partial(
        _adjoint_rhs,
        p=p,
        aw=aw,
        grid=states.grid,
        states=np.asarray(states.values),
        controls=controls,
    )
    return integrate_backward(rhs, np.zeros(states.values.shape[1]), states.grid)


def relative_change(new: np.ndarray, old: Optional[np.ndarray]) -> float:
    """sum |new - old| / sum |new|; infinite when there is nothing to compare against."""
    if old is None:
        return float("inf")
    difference = float(np.sum(np.abs(new - old)))
    if difference == 0.0:
        return 0.0
    return difference / max(float(np.sum(np.abs(new))), _TINY)


def forward_backward_sweep(
    p: ParameterSet,
    aw: ControlWeights,
    x0: InitialValue,
    grid: TimeGrid,
    s: Optional[SweepSettings] = None,
) -> SweepResult:
    """Solve the optimality system by relaxed forward-backward iteration from w = 0.

    Each iteration integrates the states forward under the current controls, the costates backward
    from zero, and relaxes the controls toward the clamped pointwise minimiser of H. The iteration stops
    once states, costates and controls all change by at most `convergence_tol` in relative L1 norm.

    Args:
        p: Model parameters.
        aw: Objective weights; a3, a4, a5 must be positive.
        x0: Initial state.
        grid: Shared time grid.
        s: Iteration settings; defaults to `SweepSettings()`.

    Returns:
        SweepResult: States and costates consistent with the returned controls, plus diagnostics.

    Raises:
        ZeroEffortWeightException: If an effort weight is zero.
        NonFiniteStateException: If an integration blows up.
    """
    settings = s if s is not None else SweepSettings()
    aw.require_positive_effort_weights()
    theta = settings.relaxation
    controls = np.zeros((grid.n_steps + 1, 3), dtype=np.float64)
    previous_states: Optional[np.ndarray] = None
    previous_adjoints = np.zeros((grid.n_steps + 1, 6), dtype=np.float64)
    history = []
    converged = False
    iterations = 0

    for iterations in range(1, settings.max_iterations + 1):
        states = solve_states(p, x0, grid, controls)
        adjoints = solve_adjoints(p, aw, states, controls)
        candidate = optimality_candidates(states.values, adjoints.values, p, aw)
        updated = np.clip(theta * candidate + (1.0 - theta) * controls, 0.0, 1.0)

        changes = (
            relative_change(np.asarray(states.values), previous_states),
            relative_change(np.asarray(adjoints.values), previous_adjoints),
            relative_change(updated, controls),
        )
        change = max(changes)
        history.append(change)
        logger.debug(
            "Sweep iteration finished.",
            extra={
                "context": {
                    "iteration": iterations,
                    "states": changes[0],
                    "adjoints": changes[1],
                    "controls": changes[2],
                }
            },
        )

        previous_states = np.asarray(states.values)
        previous_adjoints = np.asarray(adjoints.values)
        controls = updated
        if change <= settings.convergence_tol:
            converged = True
            break

    schedule = ControlSchedule(grid=grid, values=controls)
    final_states = solve_states(p, x0, grid, controls)
    final_adjoints = solve_adjoints(p, aw, final_states, controls)
    result = SweepResult(
        states=final_states,
        adjoints=final_adjoints,
        controls=schedule,
        objective=objective(final_states, schedule, aw),
        iterations=iterations,
        converged=converged,
        change_history=tuple(history),
    )
    if converged:
        logger.info(
            "Sweep converged.",
            extra={"context": {"iterations": iterations, "objective": result.objective}},
        )
    else:
        logger.warning(
            "Sweep stopped without converging.",
            extra={"context": {"iterations": iterations, "last_change": history[-1] if history else None}},
        )
    return result


def stationarity_gap(
    result: SweepResult, p: ParameterSet, aw: ControlWeights, margin: float = INTERIOR_MARGIN
) -> float:
    """Largest |dH/dw_i| over interior control nodes, relative to the largest drive of that control.

    A node is interior for control i when margin < w_i < 1 - margin. Returns 0 when no node is interior.
    """
    states = np.asarray(result.states.values)
    adjoints = np.asarray(result.adjoints.values)
    controls = np.asarray(result.controls.values)
    gradient = control_gradient_field(states, adjoints, controls, aw, p)
    drives = control_drives(states, adjoints, p)
    interior = (controls > margin) & (controls < 1.0 - margin)
    gap = 0.0
    for index in range(controls.shape[1]):
        if not np.any(interior[:, index]):
            continue
        scale = max(float(np.max(np.abs(drives[:, index]))), _TINY)
        gap = max(gap, float(np.max(np.abs(gradient[interior[:, index], index]))) / scale)
    return gap


def evaluate_constant_control(
    p: ParameterSet, aw: ControlWeights, x0: InitialValue, grid: TimeGrid, w: ControlVector
) -> Tuple[Trajectory, ControlSchedule, float]:
    """States, schedule and objective J under the constant controls `w`; no optimisation."""
    schedule = ControlSchedule.constant(grid, w)
    states = solve_states(p, x0, grid, np.asarray(schedule.values))
    return states, schedule, objective(states, schedule, aw)
