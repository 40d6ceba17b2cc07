"""Event-level scoring of detections against annotated blinks.

Two intervals overlap when they share at least one frame.

- TP: a detection overlapping at least one annotated blink
- FP: a detection overlapping none
- FN: an annotated blink overlapped by no detection
- TN: an open gap (maximal run of the extent with no detection) containing no
  frame of an unmatched annotated blink; with `tn_strict`, no annotated frame
  at all
"""

import logging
from bisect import bisect_left, bisect_right
from typing import Optional, Sequence

import numpy as np

from blinklab.detector.types import BlinkEvent
from blinklab.errors import ScoringRangeError
from blinklab.ingest.types import AnnotatedBlink, AnnotationSet, contiguous_runs
from blinklab.validation.types import ConfusionCounts, FrameExtent, MatchDetail, OpenGap

logger = logging.getLogger(__name__)


def score_events(
    detected: Sequence[BlinkEvent],
    annotated: AnnotationSet,
    trace_extent: Optional[FrameExtent],
    tn_strict: bool = False,
) -> tuple[ConfusionCounts, MatchDetail]:
    """
    Score one video.

    Args:
        detected: Sorted, non-overlapping detections
        annotated: Ground truth for the same video
        trace_extent: Scored frame interval; None for an empty trace
        tn_strict: Any annotated frame disqualifies an open gap

    Returns:
        Tuple of (counts, match detail)

    Raises:
        ScoringRangeError: A detection lies outside the extent
    """
    _check_detections(detected, trace_extent)
    blinks = annotated.blinks
    starts = [b.start_frame for b in blinks]
    ends = [b.end_frame for b in blinks]

    event_matches: list[tuple[int, ...]] = []
    hits = [False] * len(blinks)
    for event in detected:
        lo = bisect_left(ends, event.start_frame)
        hi = bisect_right(starts, event.end_frame)
        event_matches.append(tuple(range(lo, hi)))
        for k in range(lo, hi):
            hits[k] = True

    gaps: list[OpenGap] = []
    if trace_extent is not None:
        disqualifying = [b for b, hit in zip(blinks, hits) if tn_strict or not hit]
        d_starts = [b.start_frame for b in disqualifying]
        d_ends = [b.end_frame for b in disqualifying]
        for start, end in _open_gaps(detected, trace_extent):
            blocked = bisect_right(d_starts, end) > bisect_left(d_ends, start)
            gaps.append(OpenGap(start, end, true_negative=not blocked))

    detail = MatchDetail(
        detected=tuple(detected),
        annotated=blinks,
        event_matches=tuple(event_matches),
        annotation_hits=tuple(hits),
        gaps=tuple(gaps),
    )
    counts = detail.counts()
    logger.debug(f"Scored '{annotated.video_id}': {counts}")
    return counts, detail


def score_events_oracle(
    detected: Sequence[BlinkEvent],
    annotated: AnnotationSet,
    trace_extent: Optional[FrameExtent],
    tn_strict: bool = False,
) -> ConfusionCounts:
    """Recompute the four counts from per-frame membership bitmaps by exhaustive scan."""
    _check_detections(detected, trace_extent)
    if trace_extent is None:
        return ConfusionCounts(fn=len(annotated.blinks))

    base = trace_extent.start
    owner = np.full(trace_extent.length, -1, dtype=np.int64)
    for k, event in enumerate(detected):
        owner[event.start_frame - base : event.end_frame - base + 1] = k

    annotated_mask = np.zeros(trace_extent.length, dtype=bool)
    for blink in annotated.blinks:
        annotated_mask[_clip(blink, trace_extent)] = True

    tp = sum(
        1
        for event in detected
        if annotated_mask[event.start_frame - base : event.end_frame - base + 1].any()
    )
    matched = [bool((owner[_clip(b, trace_extent)] >= 0).any()) for b in annotated.blinks]

    disqualified = np.zeros(trace_extent.length, dtype=bool)
    for blink, hit in zip(annotated.blinks, matched):
        if tn_strict or not hit:
            disqualified[_clip(blink, trace_extent)] = True

    free = np.flatnonzero(owner < 0)
    tn = sum(1 for lo, hi in contiguous_runs(free) if not disqualified[free[lo:hi]].any())

    return ConfusionCounts(tp=tp, fp=len(detected) - tp, fn=matched.count(False), tn=tn)


def _clip(blink: AnnotatedBlink, extent: FrameExtent) -> slice:
    lo = max(blink.start_frame, extent.start) - extent.start
    hi = min(blink.end_frame, extent.end) - extent.start + 1
    return slice(lo, max(lo, hi))


def _open_gaps(detected: Sequence[BlinkEvent], extent: FrameExtent) -> list[tuple[int, int]]:
    gaps = []
    cursor = extent.start
    for event in detected:
        if event.start_frame > cursor:
            gaps.append((cursor, event.start_frame - 1))
        cursor = event.end_frame + 1
    if cursor <= extent.end:
        gaps.append((cursor, extent.end))
    return gaps


def _check_detections(detected: Sequence[BlinkEvent], extent: Optional[FrameExtent]) -> None:
    for event in detected:
        if extent is None or not extent.contains(event.start_frame, event.end_frame):
            raise ScoringRangeError(
                f"Detected event {event.start_frame}-{event.end_frame} lies outside "
                f"the trace extent {extent}"
            )
    for prev, cur in zip(detected, detected[1:]):
        if cur.start_frame <= prev.end_frame:
            raise ValueError(
                f"Detections {prev.start_frame}-{prev.end_frame} and "
                f"{cur.start_frame}-{cur.end_frame} overlap or are out of order"
            )
