"""Utility helpers for basic file interactions."""

from __future__ import annotations

from pathlib import Path


def read_text_file(file_path: str) -> str:
    """Read a UTF-8 text file."""

    return Path(file_path).expanduser().read_text(encoding="utf-8")


def write_text_file(file_path: str, content: str) -> Path:
    """Write content to a UTF-8 text file, creating parent directories."""

    path = Path(file_path).expanduser().resolve()
    ensure_directory(str(path.parent))
    path.write_text(content, encoding="utf-8")
    return path


def ensure_directory(path: str) -> Path:
    """Ensure that a directory exists."""

    directory = Path(path).expanduser()
    directory.mkdir(parents=True, exist_ok=True)
    return directory
