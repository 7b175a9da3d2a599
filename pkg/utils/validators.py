"""Shared validation helpers."""

from __future__ import annotations

from typing import Iterable

from core.exceptions import ConfigurationError


def ensure_supported(value: str, allowed: Iterable[str], label: str) -> str:
    """Validate that ``value`` is one of ``allowed``."""

    options = tuple(allowed)
    if value not in options:
        raise ConfigurationError(f"unsupported {label} '{value}'; expected one of {', '.join(options)}")
    return value


def parse_float_list(raw: str, label: str = "values") -> list[float]:
    """Parse a comma-separated list of numbers such as ``"1000,2000,4000"``."""

    items = [item.strip() for item in raw.split(",") if item.strip()]
    if not items:
        raise ConfigurationError(f"{label} must list at least one number")
    try:
        return [float(item) for item in items]
    except ValueError as exc:
        raise ConfigurationError(f"{label} must be comma-separated numbers, got '{raw}'") from exc
