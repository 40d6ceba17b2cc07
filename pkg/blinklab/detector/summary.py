"""Blink frequency summary for one video."""

from dataclasses import asdict, dataclass
from typing import Any, Optional

import numpy as np

from blinklab.detector.types import BlinkEvent
from blinklab.ingest.types import Completeness


@dataclass(frozen=True)
class BlinkSummary:
    count: int
    complete_count: int
    partial_count: int
    mean_duration_frames: Optional[float]
    mean_interblink_frames: Optional[float]
    blink_rate_per_min: Optional[float]

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


def summarize_events(
    events: list[BlinkEvent], n_frames: int, fps: Optional[float] = None
) -> BlinkSummary:
    """Count blinks by completeness; rate per minute needs fps."""
    complete = sum(1 for e in events if e.completeness is Completeness.COMPLETE)
    durations = [e.duration_frames for e in events]
    onsets = np.array([e.start_frame for e in events])

    rate = None
    if fps and n_frames > 0:
        rate = len(events) / (n_frames / fps) * 60.0

    return BlinkSummary(
        count=len(events),
        complete_count=complete,
        partial_count=len(events) - complete,
        mean_duration_frames=float(np.mean(durations)) if durations else None,
        mean_interblink_frames=float(np.mean(np.diff(onsets))) if len(onsets) > 1 else None,
        blink_rate_per_min=rate,
    )
