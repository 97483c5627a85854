from epikit.integration.domain.grid_interpolation import interpolate_on_grid
from epikit.integration.domain.runge_kutta import VectorField, integrate_backward, integrate_forward, rk4_step
from epikit.integration.domain.time_grid import TimeGrid
from epikit.integration.domain.trajectory import Trajectory
from epikit.integration.domain.trajectory_checks import check_population_bound, check_positivity
from epikit.integration.domain.trajectory_report import TrajectoryReport

__all__ = [
    "TimeGrid",
    "Trajectory",
    "TrajectoryReport",
    "VectorField",
    "rk4_step",
    "integrate_forward",
    "integrate_backward",
    "interpolate_on_grid",
    "check_positivity",
    "check_population_bound",
]
