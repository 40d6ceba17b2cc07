"""Run report models (the published JSON schema is their pydantic schema)."""

from typing import Any, Optional

from pydantic import BaseModel, Field, model_validator

from blinklab.detector.summary import BlinkSummary
from blinklab.detector.types import BlinkEvent
from blinklab.validation.types import ConfusionCounts, MetricsReport

DISPLAY_DECIMALS = 4


def _rounded(value: Optional[float]) -> Optional[float]:
    return None if value is None else round(value, DISPLAY_DECIMALS)


class CountsModel(BaseModel):
    tp: int = Field(ge=0)
    fp: int = Field(ge=0)
    fn: int = Field(ge=0)
    tn: int = Field(ge=0)

    @classmethod
    def from_counts(cls, counts: ConfusionCounts) -> "CountsModel":
        return cls(**counts.to_dict())

    def to_counts(self) -> ConfusionCounts:
        return ConfusionCounts(self.tp, self.fp, self.fn, self.tn)


class RawMetrics(BaseModel):
    """Unrounded metric values; null when undefined."""

    precision: Optional[float] = None
    recall: Optional[float] = None
    f1: Optional[float] = None
    accuracy: Optional[float] = None


class MetricsModel(BaseModel):
    """Metrics rounded to 4 decimals for display, with the raw values alongside."""

    accuracy: Optional[float] = None
    precision: Optional[float] = None
    recall: Optional[float] = None
    f1: Optional[float] = None
    raw: RawMetrics = Field(default_factory=RawMetrics)

    @classmethod
    def from_report(cls, report: MetricsReport) -> "MetricsModel":
        raw = RawMetrics(**report.to_dict())
        return cls(
            accuracy=_rounded(raw.accuracy),
            precision=_rounded(raw.precision),
            recall=_rounded(raw.recall),
            f1=_rounded(raw.f1),
            raw=raw,
        )


class EventModel(BaseModel):
    start_frame: int
    end_frame: int
    completeness: str
    source: str
    min_openness: float
    min_normalized_ear: Optional[float] = None
    truncated: bool = False

    @classmethod
    def from_event(cls, event: BlinkEvent) -> "EventModel":
        return cls(
            start_frame=event.start_frame,
            end_frame=event.end_frame,
            completeness=event.completeness.value,
            source=event.source.value,
            min_openness=event.min_openness,
            min_normalized_ear=event.min_normalized_ear,
            truncated=event.truncated,
        )


class SummaryModel(BaseModel):
    count: int
    complete_count: int
    partial_count: int
    mean_duration_frames: Optional[float] = None
    mean_interblink_frames: Optional[float] = None
    blink_rate_per_min: Optional[float] = None

    @classmethod
    def from_summary(cls, summary: BlinkSummary) -> "SummaryModel":
        return cls(**summary.to_dict())


class VideoReport(BaseModel):
    """Per-video detections, counts and metrics."""

    video_id: str
    trace_path: str
    annotation_path: str
    trace_sha256: str
    annotation_sha256: str
    extent: Optional[tuple[int, int]] = None
    ear_baseline: Optional[float] = None
    events: list[EventModel] = Field(default_factory=list)
    counts: CountsModel
    metrics: MetricsModel
    completeness_agreement: Optional[float] = None
    summary: SummaryModel
    warnings: list[str] = Field(default_factory=list)


class SkippedVideo(BaseModel):
    video_id: str
    error: str


class AggregateReport(BaseModel):
    """Pooled (micro-averaged) counts and metrics over all scored videos."""

    video_count: int = 0
    counts: CountsModel
    metrics: MetricsModel
    completeness_agreement: Optional[float] = None


class RunReport(BaseModel):
    """Top-level report written by `blinklab validate`."""

    videos: list[VideoReport] = Field(default_factory=list)
    aggregate: AggregateReport
    config: dict[str, Any] = Field(default_factory=dict)
    version: str
    skipped: list[SkippedVideo] = Field(default_factory=list)
    warnings: list[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_aggregate(self) -> "RunReport":
        """Aggregate counts must be the component-wise sum of per-video counts."""
        pooled = ConfusionCounts()
        for video in self.videos:
            pooled = pooled + video.counts.to_counts()
        if pooled != self.aggregate.counts.to_counts():
            raise ValueError(
                f"Aggregate counts {self.aggregate.counts} differ from per-video sum {pooled}"
            )
        return self

    @classmethod
    def json_schema(cls) -> dict[str, Any]:
        return cls.model_json_schema()
