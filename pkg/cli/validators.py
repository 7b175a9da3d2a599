"""Input validators for command-line arguments."""

from __future__ import annotations

from pathlib import Path
from typing import Any, Dict, Optional

from core.constants import SUPPORTED_FORMATS
from core.exceptions import ConfigurationError
from utils.validators import ensure_supported, parse_float_list

MAX_TRIALS = 10_000


def validate_output(fmt: str, out: Optional[str]) -> Dict[str, Any]:
    """Validate the output flags and return normalized values."""

    ensure_supported(fmt, SUPPORTED_FORMATS, "format")
    if out is None:
        return {"format": fmt, "out": None}

    path = Path(out).expanduser()
    if path.is_dir():
        raise ConfigurationError(f"--out must name a file, '{out}' is a directory")
    if path.suffix and path.suffix.lstrip(".") != fmt:
        raise ConfigurationError(f"--out '{out}' does not match --format {fmt}")
    return {"format": fmt, "out": str(path)}


def validate_seed(seed: Optional[int]) -> Optional[int]:
    if seed is not None and seed < 0:
        raise ConfigurationError("--seed must be a non-negative integer")
    return seed


def validate_trials(trials: Optional[int]) -> Optional[int]:
    if trials is None:
        return None
    if trials <= 0:
        raise ConfigurationError("--trials must be a positive integer")
    if trials > MAX_TRIALS:
        raise ConfigurationError(f"--trials cannot exceed {MAX_TRIALS}")
    return trials


def validate_sweep(parameter: str, values: str) -> Dict[str, Any]:
    parameter = parameter.strip()
    if not parameter:
        raise ConfigurationError("--parameter cannot be empty")
    return {"parameter": parameter, "values": parse_float_list(values, "--values")}
