"""Rank transforms and the correlation formulas PRCC is built from."""

import numpy as np
from scipy.stats import rankdata

from epikit.sensitivity.domain.exceptions import InsufficientSamplesException


def rank_transform(v: np.ndarray) -> np.ndarray:
    """Ranks 1..N, ties sharing their mean rank."""
    return rankdata(np.asarray(v, dtype=np.float64), method="average").astype(np.float64)


def pearson(x: np.ndarray, y: np.ndarray) -> float:
    """Pearson correlation; 0 when either vector has no spread."""
    dx = np.asarray(x, dtype=np.float64) - np.mean(x)
    dy = np.asarray(y, dtype=np.float64) - np.mean(y)
    scale = float(np.sqrt(np.dot(dx, dx) * np.dot(dy, dy)))
    if scale == 0.0:
        return 0.0
    return float(np.clip(np.dot(dx, dy) / scale, -1.0, 1.0))


def spearman_from_rank_differences(x: np.ndarray, y: np.ndarray) -> float:
    """1 - 6 sum(D^2) / (N (N^2 - 1)) with D the rank differences; exact for tie-free data.

    Raises:
        InsufficientSamplesException: If fewer than two pairs are given.
    """
    n = len(x)
    if n < 2 or len(y) != n:
        raise InsufficientSamplesException(available=min(n, len(y)), required=2)
    differences = rank_transform(x) - rank_transform(y)
    return 1.0 - 6.0 * float(np.sum(differences**2)) / (n * (n * n - 1.0))


def partial_correlation(r_xy: float, r_xz: float, r_yz: float) -> float:
    """Correlation of x and y with z held fixed, from the three pairwise coefficients."""
    return (r_xy - r_xz * r_yz) / float(np.sqrt((1.0 - r_xz**2) * (1.0 - r_yz**2)))
