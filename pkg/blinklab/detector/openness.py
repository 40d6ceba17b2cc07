"""Eye-openness threshold detector."""

import logging

from blinklab.config import DetectorConfig
from blinklab.detector.hysteresis import run_segments
from blinklab.detector.types import BlinkEvent, CombinedSeries, EventSource
from blinklab.ingest.types import Completeness

logger = logging.getLogger(__name__)


def detect_openness_blinks(series: CombinedSeries, config: DetectorConfig) -> list[BlinkEvent]:
    """
    Detect blinks on the combined openness probability.

    A blink starts at the first frame strictly below start_threshold and ends
    on the frame before openness rises strictly above end_threshold. It is
    complete when its minimum openness is strictly below complete_threshold.
    A segment that ends mid-blink yields a truncated event.
    """
    events: list[BlinkEvent] = []
    spans = run_segments(
        series.openness,
        series.segments(),
        enters=lambda v: v < config.start_threshold,
        leaves=lambda v: v > config.end_threshold,
    )
    for span in spans:
        min_openness = float(series.openness[span.start : span.end + 1].min())
        completeness = (
            Completeness.COMPLETE
            if min_openness < config.complete_threshold
            else Completeness.PARTIAL
        )
        events.append(
            BlinkEvent(
                start_frame=int(series.frames[span.start]),
                end_frame=int(series.frames[span.end]),
                completeness=completeness,
                min_openness=min_openness,
                source=EventSource.OPENNESS,
                truncated=span.truncated,
            )
        )

    logger.debug(f"Openness detector found {len(events)} event(s) in '{series.video_id}'")
    return events
