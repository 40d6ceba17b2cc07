"""Run reports, event tables and charts."""

from blinklab.report.models import RunReport, VideoReport
from blinklab.report.runner import (
    ManifestEntry,
    read_manifest,
    run_validation,
    validate_video,
)
from blinklab.report.svg import render_chart
from blinklab.report.writer import format_metrics, load_report, write_events_csv, write_report

__all__ = [
    "ManifestEntry",
    "RunReport",
    "VideoReport",
    "format_metrics",
    "load_report",
    "read_manifest",
    "render_chart",
    "run_validation",
    "validate_video",
    "write_events_csv",
    "write_report",
]
