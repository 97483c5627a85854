"""Partial rank correlation coefficients by rank residualisation."""

import logging

import numpy as np
from scipy.stats import t as student_t

from epikit.sensitivity.domain.exceptions import InsufficientSamplesException, SingularDesignException
from epikit.sensitivity.domain.prcc_result import PrccResult
from epikit.sensitivity.domain.rank_correlation import pearson, rank_transform
from epikit.sensitivity.domain.sample_matrix import SampleMatrix

logger = logging.getLogger(__name__)

RESIDUAL_TOLERANCE = 1e-9


def _residualise(target: np.ndarray, covariates: np.ndarray) -> np.ndarray:
    coefficients, *_ = np.linalg.lstsq(covariates, target, rcond=None)
    return target - covariates @ coefficients


def _p_value(r: float, dof: int) -> float:
    if abs(r) >= 1.0:
        return 0.0
    statistic = r * np.sqrt(dof / (1.0 - r * r))
    return float(min(1.0, 2.0 * student_t.sf(abs(statistic), dof)))


def prcc(m: SampleMatrix, y: np.ndarray) -> PrccResult:
    """PRCC of every design column with `y`.

    All columns and `y` are ranked; for column j the ranked x_j and ranked y are regressed on an intercept
    and the other ranked columns, and the coefficient is the Pearson correlation of the two residuals. The
    p-value is two-sided from t = r sqrt(dof / (1 - r^2)) with dof = n - 2 - (k - 1). Rows with a missing
    output are left out.

    Raises:
        InsufficientSamplesException: If at most k + 2 usable rows remain.
        SingularDesignException: If a ranked column is constant or collinear with the others.
    """
    y = np.asarray(y, dtype=np.float64)
    if y.size != m.n_samples:
        raise InsufficientSamplesException(
            available=int(y.size), required=m.n_samples, message="The output needs one value per design row."
        )
    keep = np.isfinite(y)
    n, k = int(keep.sum()), m.n_parameters
    if n <= k + 2:
        raise InsufficientSamplesException(available=n, required=k + 3)
    ranked = np.column_stack([rank_transform(column) for column in np.asarray(m.values)[keep].T])
    ranked_y = rank_transform(y[keep])
    for index, name in enumerate(m.names):
        if np.ptp(ranked[:, index]) == 0.0:
            raise SingularDesignException(parameter=name)

    dof = n - 2 - (k - 1)
    intercept = np.ones((n, 1))
    coefficients = np.empty(k)
    p_values = np.empty(k)
    for index, name in enumerate(m.names):
        covariates = np.hstack([intercept, np.delete(ranked, index, axis=1)])
        residual_x = _residualise(ranked[:, index], covariates)
        if np.max(np.abs(residual_x)) <= RESIDUAL_TOLERANCE * n:
            raise SingularDesignException(parameter=name, message="A ranked column is collinear with the others.")
        residual_y = _residualise(ranked_y, covariates)
        coefficients[index] = pearson(residual_x, residual_y)
        p_values[index] = _p_value(coefficients[index], dof)

    result = PrccResult(
        parameters=m.names, prcc=coefficients, p_value=p_values, n_samples=n, excluded=int(m.n_samples - n)
    )
    logger.debug("PRCC computed", extra={"context": {"n": n, "significant": int(result.significant.sum())}})
    return result
