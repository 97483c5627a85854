import logging
from typing import Optional, Sequence

import numpy as np

from epikit.sensitivity.domain.exceptions import InvalidRangeException
from epikit.sensitivity.domain.parameter_range import ParameterRange
from epikit.sensitivity.domain.sample_matrix import SampleMatrix

logger = logging.getLogger(__name__)


def lhs_sample(ranges: Sequence[ParameterRange], n: int, seed: Optional[int] = None) -> SampleMatrix:
    """Latin hypercube design: each column puts exactly one uniform draw in each of n equal strata.

    Columns use independent random stratum orders from one seeded generator, so the same seed always
    yields the same matrix.

    Raises:
        InvalidRangeException: If no ranges are given, a name repeats, or n < 1.
    """
    if not ranges:
        raise InvalidRangeException(name="", message="At least one parameter range is required.")
    names = [str(item.name) for item in ranges]
    duplicates = sorted({name for name in names if names.count(name) > 1})
    if duplicates:
        raise InvalidRangeException(name=duplicates[0], message="Each parameter may be sampled only once.")
    if n < 1:
        raise InvalidRangeException(name="", message="The design needs at least one sample.", details={"n": n})
    rng = np.random.default_rng(seed)
    values = np.empty((n, len(ranges)), dtype=np.float64)
    for index, item in enumerate(ranges):
        strata = rng.permutation(n)
        offsets = rng.uniform(size=n)
        values[:, index] = np.clip(item.low + (strata + offsets) / n * item.width, item.low, item.high)
    logger.debug("Latin hypercube drawn", extra={"context": {"n": n, "parameters": names, "seed": seed}})
    return SampleMatrix(ranges=tuple(ranges), values=values, seed=seed)
