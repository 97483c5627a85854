from epikit.control.infrastructure.scenario_repository import load_scenario_file, load_weight_presets, parse_scenarios

__all__ = ["load_scenario_file", "load_weight_presets", "parse_scenarios"]
