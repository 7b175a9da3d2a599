"""Report rendering and emission (CSV trajectories, JSON reports)."""

from __future__ import annotations

import json
from pathlib import Path
from typing import List, Sequence, Union

import pandas as pd

from core.constants import CSV_COLUMNS, SUPPORTED_FORMATS
from core.exceptions import ReportError
from core.models import MonteCarloAggregate, SweepPoint, TrialReport
from utils.file_handler import read_text_file, write_text_file
from utils.logger import get_logger
from utils.validators import ensure_supported

from .monte_carlo_service import summary_frame


LOGGER = get_logger(__name__)

FLOAT_FORMAT = "%.9g"
STATS = ("mean", "std", "min", "max")

Report = Union[TrialReport, MonteCarloAggregate, List[SweepPoint], List[TrialReport]]


def trajectory_frame(report: TrialReport) -> pd.DataFrame:
    return pd.DataFrame.from_records([row.model_dump() for row in report.rows], columns=list(CSV_COLUMNS))


def sweep_frame(points: Sequence[SweepPoint]) -> pd.DataFrame:
    """One row per swept value with ``<metric>_<stat>`` columns."""

    records = []
    for point in points:
        record = {
            "parameter": point.parameter,
            "value": point.value,
            "n_trials": point.aggregate.n_trials,
            "n_failed": point.aggregate.n_failed,
        }
        for metric, stats in point.aggregate.metrics.items():
            record.update({f"{metric}_{stat}": stats[stat] for stat in STATS})
        records.append(record)
    return pd.DataFrame.from_records(records)


def aggregate_frame(aggregate: MonteCarloAggregate) -> pd.DataFrame:
    frame = pd.DataFrame(aggregate.metrics).T.reindex(columns=list(STATS))
    frame.index.name = "metric"
    return frame.reset_index()


def render_report(report: Report, fmt: str) -> str:
    """Serialize a trial report, aggregate, sweep or list of trial reports."""

    ensure_supported(fmt, SUPPORTED_FORMATS, "format")
    if isinstance(report, list):
        if fmt == "json":
            return json.dumps([item.model_dump(mode="json") for item in report], indent=2)
        if report and isinstance(report[0], TrialReport):
            frame = summary_frame(report)
        else:
            frame = sweep_frame(report)
        return frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")

    if fmt == "json":
        return report.model_dump_json(indent=2)
    frame = trajectory_frame(report) if isinstance(report, TrialReport) else aggregate_frame(report)
    return frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")


def emit_report(report: Report, fmt: str, path: str | Path) -> Path:
    """Write ``report`` to ``path`` as CSV or JSON.

    Args:
        report: Trial report (CSV is its trajectory) or an aggregate/sweep
        fmt: ``csv`` or ``json``
        path: Destination file; parent directories are created
    """

    content = render_report(report, fmt)
    try:
        written = write_text_file(str(path), content)
    except OSError as exc:
        LOGGER.exception("Unable to write report to '%s': %s", path, exc)
        raise ReportError(f"unable to write report: {exc.strerror or exc}", path=str(path)) from exc
    LOGGER.info("Report written to %s (%s)", written, fmt)
    return written


def read_trial_report(path: str | Path) -> TrialReport:
    try:
        return TrialReport.model_validate_json(read_text_file(str(path)))
    except OSError as exc:
        raise ReportError(f"unable to read report: {exc.strerror or exc}", path=str(path)) from exc
    except ValueError as exc:
        raise ReportError(f"not a trial report: {exc}", path=str(path)) from exc
