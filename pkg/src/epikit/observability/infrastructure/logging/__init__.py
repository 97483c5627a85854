from epikit.observability.infrastructure.logging.structured_logger import JsonLineFormatter, configure_logging

__all__ = ["JsonLineFormatter", "configure_logging"]
