"""Events CSV, report JSON and the metric listing."""

import json
import logging
from pathlib import Path

import pandas as pd

from blinklab.detector.types import BlinkEvent
from blinklab.report.models import MetricsModel, RunReport

logger = logging.getLogger(__name__)

EVENT_COLUMNS = ["start_frame", "end_frame", "completeness", "source", "min_openness", "truncated"]

# Display order of the clinical metric listing
METRIC_LABELS = (
    ("accuracy", "Accuracy"),
    ("precision", "Precision"),
    ("recall", "Recall"),
    ("f1", "F1-Score"),
)


def write_events_csv(events: list[BlinkEvent]) -> str:
    """One row per event: start_frame,end_frame,completeness,source,min_openness,truncated."""
    df = pd.DataFrame(
        [
            {
                "start_frame": e.start_frame,
                "end_frame": e.end_frame,
                "completeness": e.completeness.value,
                "source": e.source.value,
                "min_openness": e.min_openness,
                "truncated": "true" if e.truncated else "false",
            }
            for e in events
        ],
        columns=EVENT_COLUMNS,
    )
    return df.to_csv(index=False, lineterminator="\n")


def write_report(report: RunReport, path: Path | str) -> None:
    """Write the run report as indented JSON."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(report.model_dump(mode="json"), f, indent=2)
    logger.info(f"Wrote report for {len(report.videos)} video(s) to {path}")


def load_report(path: Path | str) -> RunReport:
    with open(path, "r", encoding="utf-8") as f:
        return RunReport.model_validate(json.load(f))


def format_metrics(metrics: MetricsModel) -> list[str]:
    """Lines `Accuracy: 0.9836` ... in listing order; undefined metrics print as such."""
    lines = []
    for key, label in METRIC_LABELS:
        value = getattr(metrics, key)
        lines.append(f"{label}: {'undefined' if value is None else f'{value:.4f}'}")
    return lines
