from epikit.config.infrastructure.config_loader import (
    load_environment,
    load_run_config,
    merge_settings,
    resolve_log_level,
    resolve_parameters,
)
from epikit.config.infrastructure.incidence_csv import export_incidence_csv, load_incidence_csv, load_sample_bundle

__all__ = [
    "export_incidence_csv",
    "load_environment",
    "load_incidence_csv",
    "load_run_config",
    "load_sample_bundle",
    "merge_settings",
    "resolve_log_level",
    "resolve_parameters",
]
