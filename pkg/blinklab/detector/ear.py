"""Complementary eye-aspect-ratio detector for partial blinks."""

import logging
from typing import Optional

import numpy as np

from blinklab.config import DetectorConfig
from blinklab.detector.hysteresis import run_segments
from blinklab.detector.types import BlinkEvent, CombinedSeries, EventSource
from blinklab.errors import DegenerateBaselineError
from blinklab.ingest.types import Completeness

logger = logging.getLogger(__name__)

MIN_BASELINE_FRAMES = 10


def ear_baseline(series: CombinedSeries, config: DetectorConfig) -> float:
    """
    Estimate the open-eye EAR as a nearest-rank percentile of positive EAR values.

    Frames with EAR 0 carry no landmark measurement and are left out of the
    percentile, so a trace with long tracking dropouts keeps the baseline of
    its measured frames.

    Raises:
        DegenerateBaselineError: Fewer than 10 positive EAR frames
    """
    positive = series.ear[series.ear > 0]
    if len(positive) < MIN_BASELINE_FRAMES:
        raise DegenerateBaselineError(
            f"EAR baseline needs at least {MIN_BASELINE_FRAMES} frames with EAR > 0, "
            f"'{series.video_id}' has {len(positive)}"
        )
    baseline = float(
        np.percentile(positive, config.ear_baseline_percentile, method="inverted_cdf")
    )
    if baseline <= 0:
        raise DegenerateBaselineError(f"EAR baseline for '{series.video_id}' is {baseline}")
    return baseline


def normalized_ear(series: CombinedSeries, baseline: float) -> np.ndarray:
    return series.ear / baseline


def detect_ear_blinks(
    series: CombinedSeries, config: DetectorConfig, baseline: Optional[float] = None
) -> list[BlinkEvent]:
    """
    Detect EAR dips relative to the open-eye baseline.

    Same hysteresis shape as the openness detector on EAR / baseline: start
    below ear_start_ratio, end on the frame before the ratio is back at or
    above ear_end_ratio. Events shorter than ear_min_duration_frames are
    dropped. Every EAR event is partial; completeness is decided by openness.
    """
    if baseline is None:
        baseline = ear_baseline(series, config)
    ratio = normalized_ear(series, baseline)

    events: list[BlinkEvent] = []
    spans = run_segments(
        ratio,
        series.segments(),
        enters=lambda v: v < config.ear_start_ratio,
        leaves=lambda v: v >= config.ear_end_ratio,
    )
    for span in spans:
        if span.end - span.start + 1 < config.ear_min_duration_frames:
            continue
        window = slice(span.start, span.end + 1)
        events.append(
            BlinkEvent(
                start_frame=int(series.frames[span.start]),
                end_frame=int(series.frames[span.end]),
                completeness=Completeness.PARTIAL,
                min_openness=float(series.openness[window].min()),
                source=EventSource.EAR,
                min_normalized_ear=float(ratio[window].min()),
                truncated=span.truncated,
            )
        )

    logger.debug(
        f"EAR detector found {len(events)} event(s) in '{series.video_id}' "
        f"(baseline {baseline:.4f})"
    )
    return events
