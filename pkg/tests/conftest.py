import logging
from typing import Iterator

import pytest

from epikit.observability.infrastructure.logging.structured_logger import ROOT_LOGGER


@pytest.fixture
def restore_epikit_logger() -> Iterator[logging.Logger]:
    logger = logging.getLogger(ROOT_LOGGER)
    handlers, level, propagate = list(logger.handlers), logger.level, logger.propagate
    yield logger
    logger.handlers = handlers
    logger.setLevel(level)
    logger.propagate = propagate
