import logging
from typing import Annotated, Dict, Optional

import numpy as np
from pydantic import Field

from epikit.sensitivity.application.run_sensitivity.run_sensitivity_command import RunSensitivityCommand
from epikit.sensitivity.domain.bias_report import BiasReport
from epikit.sensitivity.domain.latin_hypercube import lhs_sample
from epikit.sensitivity.domain.level_grid import level_curve, r0_level_grid
from epikit.sensitivity.domain.model_evaluation import ModelEvaluation, evaluate_model_over_samples
from epikit.sensitivity.domain.prcc import prcc
from epikit.sensitivity.domain.prcc_result import PrccResult
from epikit.sensitivity.domain.r0_grid import R0Grid
from epikit.sensitivity.domain.relative_bias import relative_bias
from epikit.sensitivity.domain.sample_matrix import SampleMatrix
from epikit.shared import BaseArrayValue

logger = logging.getLogger(__name__)


class SensitivityOutcome(BaseArrayValue):
    design: SampleMatrix
    evaluation: ModelEvaluation
    prcc: PrccResult
    bias: BiasReport
    grid: Optional[R0Grid] = None
    level_curves: Annotated[Dict[str, np.ndarray], Field(default_factory=dict)]


class RunSensitivityHandler:
    def handle(self, command: RunSensitivityCommand) -> SensitivityOutcome:
        design = lhs_sample(command.ranges, command.n_samples, command.seed)
        evaluation = evaluate_model_over_samples(
            design,
            command.parameters,
            command.output,
            max_workers=command.max_workers,
            initial_state=command.initial_state,
            grid=command.time_grid,
        )
        coefficients = prcc(design, evaluation.values)
        bias = relative_bias(design, evaluation.values, command.intervals, command.bins)
        grid = None
        curves: Dict[str, np.ndarray] = {}
        if command.grid_x is not None and command.grid_y is not None:
            grid = r0_level_grid(command.grid_x, command.grid_y, command.parameters, command.grid_resolution)
            curves = {repr(float(level)): level_curve(grid, level) for level in command.levels}
        logger.info(
            "Sensitivity run finished",
            extra={
                "context": {
                    "n_samples": design.n_samples,
                    "failures": evaluation.failures,
                    "significant": [
                        name for name, flag in zip(coefficients.parameters, coefficients.significant) if flag
                    ],
                }
            },
        )
        return SensitivityOutcome(
            design=design, evaluation=evaluation, prcc=coefficients, bias=bias, grid=grid, level_curves=curves
        )
