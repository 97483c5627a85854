"""`epk`: batch front end of the toolkit.

    epk <command> [--config PATH] [--preset NAME] [--seed N] [--out DIR] [--weeks a:b] [--h STEP]
                  [--data PATH] [--degree N] [--log-level LEVEL]

Artifacts go to `<output_dir>/<command>/`. On failure exactly one JSON line describing the error is written to
stderr and the exit status identifies the error kind.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, NoReturn, Optional, Sequence

from pydantic import ValidationError

from epikit.config.domain.exceptions import ConfigurationException, UnknownCommandException, UsageException
from epikit.config.domain.run_config import RunConfig
from epikit.config.infrastructure.config_loader import load_environment, load_run_config, resolve_log_level
from epikit.observability.infrastructure.logging.structured_logger import configure_logging
from epikit.presentation.cli.commands import COMMANDS
from epikit.presentation.cli.exit_code_enum import ExitCodeEnum
from epikit.shared.exceptions import CommonExceptionCodes, DomainException
from epikit.shared.infrastructure.artifacts.artifact_writer import ArtifactWriter

logger = logging.getLogger(__name__)


class _JsonErrorParser(argparse.ArgumentParser):
    """Parser whose failures travel the JSON error path instead of printing usage and exiting."""

    def error(self, message: str) -> NoReturn:
        raise UsageException(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _JsonErrorParser(prog="epk", description="SVEIRT influenza modelling toolkit.")
    parser.add_argument("command", metavar="COMMAND", help="One of: " + ", ".join(COMMANDS) + ".")
    parser.add_argument("--config", type=Path, default=None, help="YAML run configuration.")
    parser.add_argument("--preset", default=None, help="Bundled country preset, replacing the configured rates.")
    parser.add_argument("--seed", type=int, default=None, help="Seed of every random draw.")
    parser.add_argument("--out", default=None, help="Output directory (falls back to EPK_OUT, then ./out).")
    parser.add_argument("--weeks", default=None, metavar="A:B", help="Growth-regression window of `fit`.")
    parser.add_argument("--h", type=float, default=None, metavar="STEP", help="RK4 step in weeks.")
    parser.add_argument("--data", default=None, help="Weekly incidence CSV for `fit` and `rt`.")
    parser.add_argument("--degree", type=int, default=None, help="Degree of the polynomial trend fitted by `fit`.")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING, ERROR or CRITICAL.")
    return parser


def flag_overrides(args: argparse.Namespace) -> Dict[str, Any]:
    """Nested settings carried by the command-line flags that were given."""
    overrides: Dict[str, Any] = {}
    if args.preset is not None:
        overrides["model"] = {"preset": args.preset, "parameters_file": None, "parameters": None}
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.out is not None:
        overrides["output_dir"] = args.out
    if args.h is not None:
        overrides["simulation"] = {"step": args.h}
        overrides["control"] = {"step": args.h}
    fit: Dict[str, Any] = {}
    if args.weeks is not None:
        fit["window"] = args.weeks
    if args.degree is not None:
        fit["degree"] = args.degree
    if args.data is not None:
        fit["data"] = args.data
        overrides["rt"] = {"data": args.data}
    if fit:
        overrides["fit"] = fit
    return overrides


def run_subcommand(config: RunConfig, command: str) -> List[Path]:
    """Run one command and return the artifacts it wrote.

    Raises:
        UnknownCommandException: If `command` is not one of the six commands.
    """
    runner = COMMANDS.get(command)
    if runner is None:
        raise UnknownCommandException(command=command, available=list(COMMANDS))
    writer = ArtifactWriter(config.output_dir / command)
    runner(config, writer)
    logger.info(
        "Command finished",
        extra={"context": {"command": command, "artifacts": [str(path) for path in writer.written]}},
    )
    return writer.written


def _fail(error: DomainException) -> int:
    print(error.model_dump_json(), file=sys.stderr)
    return int(ExitCodeEnum.for_code(error.code))


def main(argv: Optional[Sequence[str]] = None) -> int:
    environ = load_environment()
    try:
        args = build_parser().parse_args(argv)
        configure_logging(resolve_log_level(args.log_level, environ))
        if args.command not in COMMANDS:
            raise UnknownCommandException(command=args.command, available=list(COMMANDS))
        config = load_run_config(args.config, environ=environ, overrides=flag_overrides(args))
        run_subcommand(config, args.command)
    except DomainException as error:
        logger.debug("Command failed", extra={"context": error.model_dump()})
        return _fail(error)
    except ValidationError as error:
        return _fail(
            ConfigurationException(
                "A value failed validation.", details={"errors": [err["msg"] for err in error.errors()]}
            )
        )
    except Exception as error:
        logger.exception("Unexpected failure")
        return _fail(
            DomainException(CommonExceptionCodes.INTERNAL_ERROR_EXCEPTION, str(error), {"type": type(error).__name__})
        )
    return int(ExitCodeEnum.SUCCESS)


if __name__ == "__main__":
    sys.exit(main())
