"""Full detection pipeline: eye reduction, both channels, fusion."""

import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from blinklab.config import DetectorConfig
from blinklab.detector.combine import combine_eyes
from blinklab.detector.ear import detect_ear_blinks, ear_baseline, normalized_ear
from blinklab.detector.fusion import fuse_events
from blinklab.detector.openness import detect_openness_blinks
from blinklab.detector.types import BlinkEvent, CombinedSeries
from blinklab.errors import DegenerateBaselineError
from blinklab.ingest.types import SignalTrace

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class DetectionOutcome:
    """Detected events plus what the chart and report need to show."""

    events: list[BlinkEvent]
    series: CombinedSeries
    baseline: Optional[float] = None
    normalized_ear: Optional[np.ndarray] = None
    warnings: list[str] = field(default_factory=list)


def detect_with_diagnostics(
    trace: SignalTrace, config: Optional[DetectorConfig] = None
) -> DetectionOutcome:
    """Run detection and keep the EAR baseline and warnings.

    A degenerate EAR baseline is not fatal: it is logged, recorded as a
    warning and detection falls back to openness alone.
    """
    config = config or DetectorConfig()
    series = combine_eyes(trace, config.eye_policy)
    if len(series) == 0:
        return DetectionOutcome(events=[], series=series)

    openness_events = detect_openness_blinks(series, config)
    if not config.ear_enabled:
        return DetectionOutcome(events=openness_events, series=series)

    try:
        baseline = ear_baseline(series, config)
    except DegenerateBaselineError as e:
        message = f"EAR detection disabled for '{trace.video_id}': {e}"
        logger.warning(message)
        return DetectionOutcome(events=openness_events, series=series, warnings=[message])

    ear_events = detect_ear_blinks(series, config, baseline=baseline)
    segment_starts = [int(series.frames[lo]) for lo, _ in series.segments()]
    events = fuse_events(openness_events, ear_events, config, segment_starts)
    return DetectionOutcome(
        events=events,
        series=series,
        baseline=baseline,
        normalized_ear=normalized_ear(series, baseline),
    )


def detect(trace: SignalTrace, config: Optional[DetectorConfig] = None) -> list[BlinkEvent]:
    """Detect blinks in a normalized trace. Deterministic for fixed inputs."""
    return detect_with_diagnostics(trace, config).events
