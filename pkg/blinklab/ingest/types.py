"""Domain types for per-frame traces and specialist annotations."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import StrEnum
from typing import Optional

import numpy as np

OPENNESS_RANGE = (0.0, 1.0)
EAR_RANGE = (0.0, 2.0)

TRACE_COLUMNS = ("frame", "right_openness", "left_openness", "right_ear", "left_ear")


class Completeness(StrEnum):
    """Whether the eyelids fully closed during a blink."""

    COMPLETE = "complete"
    PARTIAL = "partial"

    @property
    def flag(self) -> str:
        """Annotation flag letter: `c` for complete, `i` for incomplete."""
        return "c" if self is Completeness.COMPLETE else "i"


class IssueKind(StrEnum):
    """Kinds of trace defects found during parsing or normalization."""

    GAP = "gap"
    OUT_OF_RANGE_VALUE = "out_of_range_value"
    DUPLICATE_FRAME = "duplicate_frame"
    NON_MONOTONIC = "non_monotonic"


@dataclass(frozen=True)
class TraceIssue:
    """A defect located at one frame."""

    kind: IssueKind
    frame_index: int
    detail: str

    def __post_init__(self) -> None:
        if not self.detail:
            raise ValueError(f"TraceIssue {self.kind} needs a detail message")


@dataclass(frozen=True)
class FrameSample:
    """Bilateral openness probability and EAR for one frame."""

    frame_index: int
    right_openness: float
    left_openness: float
    right_ear: float
    left_ear: float


@dataclass(frozen=True)
class SignalTrace:
    """Ordered per-frame samples for one video."""

    video_id: str
    samples: tuple[FrameSample, ...] = ()
    fps: Optional[float] = None

    def __post_init__(self) -> None:
        # Accept any sequence, store a tuple
        object.__setattr__(self, "samples", tuple(self.samples))

    def __len__(self) -> int:
        return len(self.samples)

    @property
    def frame_indices(self) -> np.ndarray:
        return np.fromiter((s.frame_index for s in self.samples), dtype=np.int64, count=len(self))

    def column(self, name: str) -> np.ndarray:
        """Return one value column as a float array."""
        if name not in TRACE_COLUMNS[1:]:
            raise KeyError(f"Unknown trace column: {name}")
        return np.fromiter(
            (getattr(s, name) for s in self.samples), dtype=np.float64, count=len(self)
        )

    def extent(self) -> Optional[tuple[int, int]]:
        """First and last frame index, or None for an empty trace."""
        if not self.samples:
            return None
        return (self.samples[0].frame_index, self.samples[-1].frame_index)

    def segments(self) -> list[tuple[int, int]]:
        """Maximal runs of contiguous frames, as [start, stop) sample positions."""
        return contiguous_runs(self.frame_indices)


@dataclass(frozen=True)
class AnnotatedBlink:
    """One specialist-annotated blink, inclusive frame range."""

    start_frame: int
    end_frame: int
    completeness: Completeness

    def __post_init__(self) -> None:
        if self.start_frame < 0:
            raise ValueError(f"start_frame must be >= 0, got {self.start_frame}")
        if self.start_frame > self.end_frame:
            raise ValueError(
                f"start_frame {self.start_frame} exceeds end_frame {self.end_frame}"
            )

    @property
    def token(self) -> str:
        return f"{self.start_frame}-{self.end_frame}{self.completeness.flag}"


@dataclass(frozen=True)
class AnnotationSet:
    """Ground-truth blinks for one video, sorted and non-overlapping."""

    video_id: str
    blinks: tuple[AnnotatedBlink, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "blinks", tuple(self.blinks))
        for prev, cur in zip(self.blinks, self.blinks[1:]):
            if cur.start_frame <= prev.end_frame:
                raise ValueError(
                    f"Annotated blinks {prev.token} and {cur.token} overlap or are out of order"
                )

    def __len__(self) -> int:
        return len(self.blinks)


def contiguous_runs(frames: np.ndarray) -> list[tuple[int, int]]:
    """Split strictly increasing frame indices where consecutive frames differ by more than 1."""
    if len(frames) == 0:
        return []
    breaks = np.flatnonzero(np.diff(frames) != 1) + 1
    starts = [0, *breaks.tolist()]
    stops = [*breaks.tolist(), len(frames)]
    return list(zip(starts, stops))
