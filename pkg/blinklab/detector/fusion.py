"""Union of openness and EAR detections."""

from bisect import bisect_left, bisect_right
from typing import Sequence

from blinklab.config import DetectorConfig
from blinklab.detector.types import BlinkEvent, EventSource
from blinklab.ingest.types import Completeness


def fuse_events(
    openness_events: list[BlinkEvent],
    ear_events: list[BlinkEvent],
    config: DetectorConfig,
    segment_starts: Sequence[int] = (),
) -> list[BlinkEvent]:
    """
    Merge openness and EAR events that overlap or lie within fusion_merge_gap_frames.

    Links only run across the two channels, so two events of the same channel
    are never joined to each other. A merged event spans the minimum start to
    the maximum end, is complete when any openness constituent is complete,
    and has source `fused`. Unlinked events pass through unchanged.

    `segment_starts` holds the first frame of each contiguous segment in
    ascending order. Events in different segments are never linked, however
    close their frame numbers are.
    """
    gap = config.fusion_merge_gap_frames
    members = [(event, True) for event in openness_events]
    members += [(event, False) for event in ear_events]
    parent = list(range(len(members)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    ear_starts = [event.start_frame for event in ear_events]
    ear_ends = [event.end_frame for event in ear_events]
    offset = len(openness_events)
    for i, event in enumerate(openness_events):
        segment = bisect_right(segment_starts, event.start_frame)
        # EAR events with end >= start - gap - 1 and start <= end + gap + 1
        lo = bisect_left(ear_ends, event.start_frame - gap - 1)
        hi = bisect_right(ear_starts, event.end_frame + gap + 1)
        for j in range(lo, hi):
            if bisect_right(segment_starts, ear_starts[j]) == segment:
                parent[find(offset + j)] = find(i)

    groups: dict[int, list[int]] = {}
    for i in range(len(members)):
        groups.setdefault(find(i), []).append(i)

    ordered = sorted(
        groups.values(),
        key=lambda idx: (min(members[i][0].start_frame for i in idx),
                         max(members[i][0].end_frame for i in idx)),
    )

    # Spans that still overlap are folded together so the output stays disjoint
    merged_groups: list[list[int]] = []
    current_end = None
    for idx in ordered:
        start = min(members[i][0].start_frame for i in idx)
        end = max(members[i][0].end_frame for i in idx)
        if merged_groups and start <= current_end:
            merged_groups[-1].extend(idx)
            current_end = max(current_end, end)
        else:
            merged_groups.append(list(idx))
            current_end = end

    return [_merge([members[i] for i in idx]) for idx in merged_groups]


def _merge(group: list[tuple[BlinkEvent, bool]]) -> BlinkEvent:
    if len(group) == 1:
        return group[0][0]

    events = [event for event, _ in group]
    from_openness = [event for event, is_openness in group if is_openness]
    mixed = 0 < len(from_openness) < len(group)
    start = min(event.start_frame for event in events)
    end = max(event.end_frame for event in events)
    ear_minima = [e.min_normalized_ear for e in events if e.min_normalized_ear is not None]

    if mixed:
        source = EventSource.FUSED
    else:
        source = events[0].source

    complete = any(e.completeness is Completeness.COMPLETE for e in from_openness)
    return BlinkEvent(
        start_frame=start,
        end_frame=end,
        completeness=Completeness.COMPLETE if complete else Completeness.PARTIAL,
        min_openness=min(event.min_openness for event in events),
        source=source,
        min_normalized_ear=min(ear_minima) if ear_minima else None,
        truncated=any(e.truncated and e.end_frame == end for e in events),
    )
