"""Missing-frame handling for signal traces."""

import logging
from dataclasses import dataclass
from enum import StrEnum
from typing import Optional

import numpy as np

from blinklab.errors import GapError
from blinklab.ingest.types import (
    TRACE_COLUMNS,
    FrameSample,
    IssueKind,
    SignalTrace,
    TraceIssue,
)

logger = logging.getLogger(__name__)


class GapMode(StrEnum):
    STRICT = "strict"
    INTERPOLATE = "interpolate"


@dataclass(frozen=True)
class GapPolicy:
    """Strict rejects any missing frame; interpolate fills gaps up to max_gap frames."""

    mode: GapMode = GapMode.STRICT
    max_gap: int = 0

    def __post_init__(self) -> None:
        if self.max_gap < 0:
            raise ValueError(f"max_gap must be >= 0, got {self.max_gap}")

    @classmethod
    def strict(cls) -> "GapPolicy":
        return cls(GapMode.STRICT, 0)

    @classmethod
    def interpolate(cls, max_gap: int) -> "GapPolicy":
        return cls(GapMode.INTERPOLATE, max_gap)

    @classmethod
    def from_fill_gaps(cls, fill_gaps: Optional[int]) -> "GapPolicy":
        """Map the `--fill-gaps N` setting (None = strict) to a policy."""
        return cls.strict() if fill_gaps is None else cls.interpolate(fill_gaps)


def normalize_trace(
    trace: SignalTrace, gap_policy: GapPolicy = GapPolicy()
) -> tuple[SignalTrace, list[TraceIssue]]:
    """
    Resolve missing frames according to the gap policy.

    Gaps of at most max_gap frames are filled by per-channel linear
    interpolation. Longer gaps are left in place; the trace then has several
    contiguous segments and the detector never bridges them. Samples present
    in the input are kept unchanged.

    Returns:
        Tuple of (normalized trace, gap issues)

    Raises:
        GapError: Strict policy and at least one missing frame
    """
    issues: list[TraceIssue] = []
    if len(trace) < 2:
        return trace, issues

    samples: list[FrameSample] = [trace.samples[0]]
    for prev, cur in zip(trace.samples, trace.samples[1:]):
        missing = cur.frame_index - prev.frame_index - 1
        if missing > 0:
            first_missing = prev.frame_index + 1
            if gap_policy.mode is GapMode.STRICT:
                raise GapError(
                    f"Trace '{trace.video_id}' is missing {missing} frame(s) starting at "
                    f"frame {first_missing}",
                    first_missing_frame=first_missing,
                )
            last_missing = cur.frame_index - 1
            if missing <= gap_policy.max_gap:
                samples.extend(_interpolate(prev, cur))
                detail = f"filled {missing} missing frame(s) {first_missing}-{last_missing}"
            else:
                detail = (
                    f"{missing} missing frame(s) {first_missing}-{last_missing} exceed "
                    f"max_gap={gap_policy.max_gap}; trace split into segments"
                )
            issues.append(TraceIssue(IssueKind.GAP, first_missing, detail))
            logger.info(f"Trace '{trace.video_id}': {detail}")
        samples.append(cur)

    if not issues:
        return trace, issues
    return SignalTrace(video_id=trace.video_id, samples=tuple(samples), fps=trace.fps), issues


def _interpolate(prev: FrameSample, cur: FrameSample) -> list[FrameSample]:
    frames = np.arange(prev.frame_index + 1, cur.frame_index)
    xp = [prev.frame_index, cur.frame_index]
    channels = {
        name: np.interp(frames, xp, [getattr(prev, name), getattr(cur, name)])
        for name in TRACE_COLUMNS[1:]
    }
    return [
        FrameSample(frame_index=int(frame), **{name: float(v[i]) for name, v in channels.items()})
        for i, frame in enumerate(frames)
    ]
