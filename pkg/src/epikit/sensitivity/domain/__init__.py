from epikit.sensitivity.domain.bias_report import BiasReport
from epikit.sensitivity.domain.latin_hypercube import lhs_sample
from epikit.sensitivity.domain.level_grid import level_curve, r0_level_grid
from epikit.sensitivity.domain.model_evaluation import ModelEvaluation, evaluate_model_over_samples, output_function
from epikit.sensitivity.domain.parameter_range import DEFAULT_RANGES, ParameterRange
from epikit.sensitivity.domain.prcc import prcc
from epikit.sensitivity.domain.prcc_result import PrccResult
from epikit.sensitivity.domain.r0_grid import R0Grid
from epikit.sensitivity.domain.rank_correlation import (
    partial_correlation,
    pearson,
    rank_transform,
    spearman_from_rank_differences,
)
from epikit.sensitivity.domain.relative_bias import relative_bias
from epikit.sensitivity.domain.sample_matrix import SampleMatrix
from epikit.sensitivity.domain.sensitivity_output_enum import SensitivityOutputEnum

__all__ = [
    "DEFAULT_RANGES",
    "BiasReport",
    "ModelEvaluation",
    "ParameterRange",
    "PrccResult",
    "R0Grid",
    "SampleMatrix",
    "SensitivityOutputEnum",
    "evaluate_model_over_samples",
    "level_curve",
    "lhs_sample",
    "output_function",
    "partial_correlation",
    "pearson",
    "prcc",
    "r0_level_grid",
    "rank_transform",
    "relative_bias",
    "spearman_from_rank_differences",
]
