from epikit.observability.domain.log_level_enum import LogLevelEnum

__all__ = ["LogLevelEnum"]
