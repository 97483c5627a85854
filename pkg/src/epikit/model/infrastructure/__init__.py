from epikit.model.infrastructure.preset_repository import (
    available_presets,
    dump_parameters,
    load_country_preset,
    load_parameter_file,
)

__all__ = ["available_presets", "dump_parameters", "load_country_preset", "load_parameter_file"]
