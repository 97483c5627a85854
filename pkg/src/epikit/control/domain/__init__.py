from epikit.control.domain.adjoint_vector import ADJOINT_NAMES, AdjointVector
from epikit.control.domain.control_scenario import FIXED_SCENARIOS, ControlScenario, ScenarioEvaluation
from epikit.control.domain.control_schedule import CONTROL_NAMES, ControlSchedule
from epikit.control.domain.control_weights import ControlWeights
from epikit.control.domain.forward_backward_sweep import (
    evaluate_constant_control,
    forward_backward_sweep,
    stationarity_gap,
)
from epikit.control.domain.pontryagin import (
    adjoint_rhs,
    control_gradient,
    hamiltonian,
    objective,
    optimality_update,
)
from epikit.control.domain.sweep_result import SweepResult
from epikit.control.domain.sweep_settings import SweepSettings

__all__ = [
    "ADJOINT_NAMES",
    "CONTROL_NAMES",
    "FIXED_SCENARIOS",
    "AdjointVector",
    "ControlScenario",
    "ControlSchedule",
    "ControlWeights",
    "ScenarioEvaluation",
    "SweepResult",
    "SweepSettings",
    "adjoint_rhs",
    "control_gradient",
    "evaluate_constant_control",
    "forward_backward_sweep",
    "hamiltonian",
    "objective",
    "optimality_update",
    "stationarity_gap",
]
