"""Batch validation over a manifest of videos."""

import asyncio
import hashlib
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import pandas as pd

from blinklab import __version__
from blinklab.config import BlinklabConfig
from blinklab.detector.pipeline import detect_with_diagnostics
from blinklab.detector.summary import summarize_events
from blinklab.errors import BlinklabError, ManifestError
from blinklab.ingest.annotations import parse_annotations
from blinklab.ingest.normalize import GapPolicy, normalize_trace
from blinklab.ingest.table import read_table
from blinklab.ingest.trace_csv import parse_trace_csv
from blinklab.report.models import (
    AggregateReport,
    CountsModel,
    EventModel,
    MetricsModel,
    RunReport,
    SkippedVideo,
    SummaryModel,
    VideoReport,
)
from blinklab.validation.metrics import (
    aggregate,
    completeness_agreement,
    compute_metrics,
    pooled_completeness_agreement,
)
from blinklab.validation.scoring import score_events
from blinklab.validation.types import ConfusionCounts, FrameExtent, MatchDetail

logger = logging.getLogger(__name__)

MANIFEST_COLUMNS = ["video_id", "trace_path", "annotation_path"]

# Failures that skip one video instead of aborting the run
VIDEO_FAILURES = (BlinklabError, OSError, ValueError)


@dataclass(frozen=True)
class ManifestEntry:
    video_id: str
    trace_path: Path
    annotation_path: Path
    fps: Optional[float] = None


@dataclass(frozen=True)
class VideoResult:
    """Scored video: the report entry plus what pooled aggregation needs."""

    report: VideoReport
    counts: ConfusionCounts
    detail: MatchDetail


def read_manifest(path: Path | str) -> list[ManifestEntry]:
    """
    Read a manifest CSV: video_id,trace_path,annotation_path with an optional fps column.

    Relative paths resolve against the manifest's directory. A manifest with a
    header and no rows is valid and yields no entries.

    Raises:
        ManifestError: Missing columns, ragged rows, blank cells or duplicate video ids
    """
    path = Path(path)
    try:
        df = read_table(path, ManifestError)
    except pd.errors.EmptyDataError:
        logger.warning(f"Manifest {path} is empty")
        return []

    missing = [c for c in MANIFEST_COLUMNS if c not in df.columns]
    if missing:
        raise ManifestError(f"Manifest {path} is missing column(s): {', '.join(missing)}")
    if df["video_id"].duplicated().any():
        dupes = sorted(set(df["video_id"][df["video_id"].duplicated()]))
        raise ManifestError(f"Manifest {path} repeats video id(s): {', '.join(dupes)}")

    base = path.parent
    entries = []
    for row_number, values in enumerate(df.to_dict("records"), start=1):
        blank = [c for c in MANIFEST_COLUMNS if not values[c].strip()]
        if blank:
            raise ManifestError(f"Manifest {path} row {row_number}: empty {', '.join(blank)}")
        fps = None
        if values.get("fps", "").strip():
            try:
                fps = float(values["fps"])
            except ValueError:
                raise ManifestError(
                    f"Manifest {path} row {row_number}: fps '{values['fps']}' is not a number"
                )
            if fps <= 0:
                raise ManifestError(f"Manifest {path} row {row_number}: fps must be positive")
        entries.append(
            ManifestEntry(
                video_id=values["video_id"].strip(),
                trace_path=base / values["trace_path"].strip(),
                annotation_path=base / values["annotation_path"].strip(),
                fps=fps,
            )
        )
    return entries


def validate_video(entry: ManifestEntry, config: BlinklabConfig) -> VideoResult:
    """Ingest, detect and score one video. Scoring covers the trace's full frame extent."""
    trace_bytes = entry.trace_path.read_bytes()
    annotation_bytes = entry.annotation_path.read_bytes()

    fps = entry.fps if entry.fps is not None else config.ingest.fps
    trace = parse_trace_csv(trace_bytes.decode("utf-8"), video_id=entry.video_id, fps=fps)
    trace, issues = normalize_trace(trace, GapPolicy.from_fill_gaps(config.ingest.fill_gaps))
    annotations = parse_annotations(annotation_bytes.decode("utf-8"), entry.video_id)

    outcome = detect_with_diagnostics(trace, config.detector)
    bounds = trace.extent()
    extent = FrameExtent(*bounds) if bounds is not None else None
    counts, detail = score_events(
        outcome.events, annotations, extent, tn_strict=config.validation.tn_strict
    )

    warnings = [f"frame {issue.frame_index}: {issue.detail}" for issue in issues]
    warnings.extend(outcome.warnings)
    for message in warnings:
        logger.warning(f"{entry.video_id}: {message}")

    report = VideoReport(
        video_id=entry.video_id,
        trace_path=str(entry.trace_path),
        annotation_path=str(entry.annotation_path),
        trace_sha256=hashlib.sha256(trace_bytes).hexdigest(),
        annotation_sha256=hashlib.sha256(annotation_bytes).hexdigest(),
        extent=bounds,
        ear_baseline=outcome.baseline,
        events=[EventModel.from_event(e) for e in outcome.events],
        counts=CountsModel.from_counts(counts),
        metrics=MetricsModel.from_report(compute_metrics(counts)),
        completeness_agreement=completeness_agreement(detail),
        summary=SummaryModel.from_summary(
            summarize_events(outcome.events, len(trace), trace.fps)
        ),
        warnings=warnings,
    )
    logger.info(f"{entry.video_id}: {len(outcome.events)} event(s), {counts}")
    return VideoResult(report=report, counts=counts, detail=detail)


async def run_validation(
    entries: list[ManifestEntry], config: BlinklabConfig, strict: bool = False
) -> RunReport:
    """
    Validate all manifest entries concurrently and fold results in manifest order.

    A video that fails to ingest or score is recorded as skipped. With strict,
    the first failure in manifest order is raised instead.
    """
    results = await asyncio.gather(
        *(asyncio.to_thread(validate_video, entry, config) for entry in entries),
        return_exceptions=True,
    )

    scored: list[VideoResult] = []
    skipped: list[SkippedVideo] = []
    for entry, result in zip(entries, results):
        if isinstance(result, BaseException):
            if strict or not isinstance(result, VIDEO_FAILURES):
                raise result
            logger.error(f"Skipping {entry.video_id}: {result}")
            skipped.append(SkippedVideo(video_id=entry.video_id, error=str(result)))
        else:
            scored.append(result)

    pooled = aggregate(r.counts for r in scored)
    return RunReport(
        videos=[r.report for r in scored],
        aggregate=AggregateReport(
            video_count=len(scored),
            counts=CountsModel.from_counts(pooled),
            metrics=MetricsModel.from_report(compute_metrics(pooled)),
            completeness_agreement=pooled_completeness_agreement(r.detail for r in scored),
        ),
        config=config.model_dump(mode="json"),
        version=__version__,
        skipped=skipped,
        warnings=[f"{w.video_id}: {w.error}" for w in skipped],
    )
