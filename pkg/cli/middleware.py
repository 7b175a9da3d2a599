"""Command execution boundary: timing, logging and error mapping."""

from __future__ import annotations

import json
import sys
import time
from argparse import Namespace
from typing import Callable

from pydantic import ValidationError

from core.exceptions import SimulationError
from utils.logger import get_logger

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_USER_ERROR = 2


def report_error(error: str, detail: str) -> None:
    sys.stderr.write(json.dumps({"error": error, "detail": detail}) + "\n")


def run_command(handler: Callable[[Namespace], int], args: Namespace) -> int:
    """Run a handler; domain errors become a JSON object on stderr and exit code 2."""

    start_time = time.perf_counter()
    try:
        code = handler(args)
    except (SimulationError, ValidationError) as exc:
        report_error(type(exc).__name__, str(exc))
        code = EXIT_USER_ERROR
    except Exception as exc:  # pragma: no cover - last-resort boundary
        logger.exception("Command '%s' failed unexpectedly", args.command)
        report_error(type(exc).__name__, str(exc))
        code = EXIT_UNEXPECTED
    duration_ms = (time.perf_counter() - start_time) * 1000
    logger.info("%s completed in %.2f ms - exit=%d", args.command, duration_ms, code)
    return code
