"""Helpers for converting numpy and complex values into JSON-serializable data."""

from __future__ import annotations

from typing import Any

import numpy as np


def coerce_to_json_serializable(value: Any) -> Any:
    """Recursively convert values into JSON-serializable representations.

    numpy arrays become nested lists, numpy scalars become Python scalars and
    complex numbers become ``[re, im]`` pairs.
    """

    if isinstance(value, dict):
        return {str(key): coerce_to_json_serializable(val) for key, val in value.items()}

    if isinstance(value, (list, tuple)):
        return [coerce_to_json_serializable(item) for item in value]

    if isinstance(value, np.ndarray):
        return coerce_to_json_serializable(value.tolist())

    if isinstance(value, (complex, np.complexfloating)):
        return [float(value.real), float(value.imag)]

    if isinstance(value, np.bool_):
        return bool(value)

    if isinstance(value, np.integer):
        return int(value)

    if isinstance(value, np.floating):
        return float(value)

    return value
