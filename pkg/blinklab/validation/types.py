"""Scoring result types."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Any, Optional

from blinklab.detector.types import BlinkEvent
from blinklab.ingest.types import AnnotatedBlink


@dataclass(frozen=True)
class FrameExtent:
    """Inclusive frame interval of a scored trace."""

    start: int
    end: int

    def __post_init__(self) -> None:
        if self.end < self.start:
            raise ValueError(f"FrameExtent end {self.end} precedes start {self.start}")

    @property
    def length(self) -> int:
        return self.end - self.start + 1

    def contains(self, start_frame: int, end_frame: int) -> bool:
        return self.start <= start_frame and end_frame <= self.end


@dataclass(frozen=True)
class ConfusionCounts:
    """Event-level TP/FP/FN/TN."""

    tp: int = 0
    fp: int = 0
    fn: int = 0
    tn: int = 0

    def __post_init__(self) -> None:
        for name in ("tp", "fp", "fn", "tn"):
            if getattr(self, name) < 0:
                raise ValueError(f"Count {name} must be >= 0")

    def __add__(self, other: ConfusionCounts) -> ConfusionCounts:
        return ConfusionCounts(
            self.tp + other.tp, self.fp + other.fp, self.fn + other.fn, self.tn + other.tn
        )

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.fn + self.tn

    def to_dict(self) -> dict[str, int]:
        return asdict(self)


@dataclass(frozen=True)
class OpenGap:
    """Maximal run of the extent not covered by any detection."""

    start: int
    end: int
    true_negative: bool


@dataclass(frozen=True)
class MatchDetail:
    """Audit trail behind a ConfusionCounts."""

    detected: tuple[BlinkEvent, ...]
    annotated: tuple[AnnotatedBlink, ...]
    event_matches: tuple[tuple[int, ...], ...]  # per detection: indices into annotated
    annotation_hits: tuple[bool, ...]
    gaps: tuple[OpenGap, ...]

    def counts(self) -> ConfusionCounts:
        tp = sum(1 for matches in self.event_matches if matches)
        return ConfusionCounts(
            tp=tp,
            fp=len(self.event_matches) - tp,
            fn=sum(1 for hit in self.annotation_hits if not hit),
            tn=sum(1 for gap in self.gaps if gap.true_negative),
        )

    def completeness_pairs(self) -> tuple[int, int]:
        """(agreeing, total) over detections that overlap exactly one annotated blink."""
        agree = total = 0
        for event, matches in zip(self.detected, self.event_matches):
            if len(matches) == 1:
                total += 1
                agree += event.completeness is self.annotated[matches[0]].completeness
        return agree, total


@dataclass(frozen=True)
class MetricsReport:
    """Precision, recall, F1 and accuracy; None marks an undefined metric."""

    precision: Optional[float]
    recall: Optional[float]
    f1: Optional[float]
    accuracy: Optional[float]
    counts: ConfusionCounts

    def to_dict(self) -> dict[str, Any]:
        return {
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
            "accuracy": self.accuracy,
        }
