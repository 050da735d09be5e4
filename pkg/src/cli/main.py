"""Command-line entry point: run(argv) returns the process exit code."""

import logging
import sys
from pathlib import Path

from pydantic import ValidationError

from config.constants import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE
from config.settings import configure_logging
from src.cli.parser import build_parser
from src.cli.report_formatter import format_report
from src.services.command_orchestrator import CommandOrchestrator
from src.utils.errors import (
    CodecError,
    DescriptorError,
    GammaForgeError,
    PartitionError,
    UnknownNameError,
)

logger = logging.getLogger(__name__)

_USAGE_ERRORS = (CodecError, DescriptorError, PartitionError, UnknownNameError)


def _fail(message: str, code: int) -> int:
    print(f"erro: {message}", file=sys.stderr)
    return code


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    configure_logging("DEBUG" if args.verbose else None)

    try:
        report = CommandOrchestrator().execute(args)
    except _USAGE_ERRORS as exc:
        return _fail(str(exc), EXIT_USAGE)
    except GammaForgeError as exc:
        logger.debug("Falha em %s", args.command, exc_info=True)
        return _fail(str(exc), EXIT_CHECK_FAILED)
    except ValidationError as exc:
        logger.debug("Modelo invalido em %s", args.command, exc_info=True)
        return _fail(exc.errors()[0]["msg"], EXIT_CHECK_FAILED)

    text = format_report(report, args.format)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def main():
    sys.exit(run())
