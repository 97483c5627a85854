from typing import Optional, Sequence, Tuple

import numpy as np

from epikit.sensitivity.domain.bias_report import BiasReport, interval_key
from epikit.sensitivity.domain.exceptions import EmptyInputException, InsufficientSamplesException
from epikit.sensitivity.domain.sample_matrix import SampleMatrix

DEFAULT_BINS = 10


def relative_bias(
    m: Optional[SampleMatrix],
    y: np.ndarray,
    intervals: Sequence[Tuple[float, float]],
    bins: int = DEFAULT_BINS,
) -> BiasReport:
    """Share of R0 samples in each closed interval [lo, hi], a histogram and the sample variance.

    Missing outputs (NaN) are left out. When the design is given its row count must match `y`.

    Raises:
        EmptyInputException: If no finite value remains.
        InsufficientSamplesException: If `y` does not have one value per design row.
    """
    values = np.asarray(y, dtype=np.float64)
    if m is not None and values.size != m.n_samples:
        raise InsufficientSamplesException(
            available=int(values.size), required=m.n_samples, message="The output needs one value per design row."
        )
    values = values[np.isfinite(values)]
    if values.size == 0:
        raise EmptyInputException(what="y")
    if bins < 1:
        raise ValueError("bins must be positive")
    counts, edges = np.histogram(values, bins=bins)
    fractions = {
        interval_key((low, high)): float(np.count_nonzero((values >= low) & (values <= high))) / values.size
        for low, high in intervals
    }
    variance = float(np.var(values, ddof=1)) if values.size > 1 else 0.0
    return BiasReport(
        bin_edges=edges,
        bin_counts=counts,
        fractions=fractions,
        variance=variance,
        n_samples=int(values.size),
    )
