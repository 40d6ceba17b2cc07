"""Detector domain types."""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum
from typing import Optional

import numpy as np

from blinklab.ingest.types import Completeness, contiguous_runs


class EventSource(StrEnum):
    """Which channel produced a blink event."""

    OPENNESS = "openness"
    EAR = "ear"
    FUSED = "fused"


@dataclass(frozen=True)
class BlinkEvent:
    """A detected blink over an inclusive frame interval."""

    start_frame: int
    end_frame: int
    completeness: Completeness
    min_openness: float
    source: EventSource
    min_normalized_ear: Optional[float] = None
    truncated: bool = False

    def __post_init__(self) -> None:
        if self.end_frame < self.start_frame:
            raise ValueError(
                f"end_frame {self.end_frame} precedes start_frame {self.start_frame}"
            )

    @property
    def duration_frames(self) -> int:
        return self.end_frame - self.start_frame + 1

    def overlaps(self, start_frame: int, end_frame: int) -> bool:
        """True when the inclusive intervals share at least one frame."""
        return self.start_frame <= end_frame and start_frame <= self.end_frame


@dataclass(frozen=True, eq=False)
class CombinedSeries:
    """One openness and one EAR value per frame, after eye reduction."""

    video_id: str
    frames: np.ndarray
    openness: np.ndarray
    ear: np.ndarray

    def __post_init__(self) -> None:
        if not len(self.frames) == len(self.openness) == len(self.ear):
            raise ValueError("CombinedSeries columns must have equal length")
        if len(self.frames) > 1 and np.any(np.diff(self.frames) <= 0):
            raise ValueError("CombinedSeries frames must be strictly increasing")

    def __len__(self) -> int:
        return len(self.frames)

    def segments(self) -> list[tuple[int, int]]:
        """Contiguous runs as [start, stop) positions."""
        return contiguous_runs(self.frames)
