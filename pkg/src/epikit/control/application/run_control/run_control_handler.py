import logging
from typing import Any, Dict, Tuple

from epikit.control.application.run_control.run_control_command import RunControlCommand
from epikit.control.domain.control_scenario import ControlScenario, ScenarioEvaluation
from epikit.control.domain.control_weights import ControlWeights
from epikit.control.domain.forward_backward_sweep import (
    evaluate_constant_control,
    forward_backward_sweep,
    stationarity_gap,
)
from epikit.control.domain.sweep_result import SweepResult
from epikit.shared import BaseValue

logger = logging.getLogger(__name__)


class ControlOutcome(BaseValue):
    """The optimised run and every constant-control scenario, each with its objective."""

    weights: ControlWeights
    optimized: SweepResult
    stationarity_gap: float
    scenarios: Tuple[ScenarioEvaluation, ...]

    @property
    def optimized_is_best(self) -> bool:
        """J(w*) does not exceed J of any scenario scored with the same weights."""
        return all(
            self.optimized.objective <= evaluation.objective
            for evaluation in self.scenarios
            if evaluation.weights == self.weights
        )

    def summary(self) -> Dict[str, Any]:
        return {
            "weights": self.weights.to_record(),
            "optimized": {
                "objective": self.optimized.objective,
                "iterations": self.optimized.iterations,
                "converged": self.optimized.converged,
                "stationarity_gap": self.stationarity_gap,
            },
            "scenarios": {
                evaluation.name: {"objective": evaluation.objective, "weights": evaluation.weights.to_record()}
                for evaluation in self.scenarios
            },
            "optimized_is_best": self.optimized_is_best,
        }


class RunControlHandler:
    def handle(self, command: RunControlCommand) -> ControlOutcome:
        optimized = forward_backward_sweep(
            command.parameters, command.weights, command.initial_state, command.grid, command.settings
        )
        evaluations = tuple(self._evaluate(command, scenario) for scenario in command.scenarios)
        outcome = ControlOutcome(
            weights=command.weights,
            optimized=optimized,
            stationarity_gap=stationarity_gap(optimized, command.parameters, command.weights),
            scenarios=evaluations,
        )
        logger.info(
            "Control run finished",
            extra={
                "context": {
                    "objective": optimized.objective,
                    "converged": optimized.converged,
                    "scenarios": len(evaluations),
                }
            },
        )
        if not outcome.optimized_is_best:
            logger.warning("A constant scenario beat the optimised controls", extra={"context": outcome.summary()})
        return outcome

    @staticmethod
    def _evaluate(command: RunControlCommand, scenario: ControlScenario) -> ScenarioEvaluation:
        weights = scenario.weights if scenario.weights is not None else command.weights
        states, schedule, value = evaluate_constant_control(
            command.parameters, weights, command.initial_state, command.grid, scenario.control
        )
        return ScenarioEvaluation(
            name=scenario.name, weights=weights, states=states, controls=schedule, objective=value
        )
