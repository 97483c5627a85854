from epikit.presentation.cli.main import build_parser, flag_overrides, main, run_subcommand

__all__ = ["build_parser", "flag_overrides", "main", "run_subcommand"]
