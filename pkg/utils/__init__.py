"""Utility helpers for logging, validation, and files."""

from .logger import get_logger

__all__ = ["get_logger"]
