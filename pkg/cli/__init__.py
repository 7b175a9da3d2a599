"""Command-line interface package."""

from .commands import create_parser
from .middleware import run_command

__all__ = ["create_parser", "run_command"]
