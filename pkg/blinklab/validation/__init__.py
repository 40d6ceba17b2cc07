"""Scoring detections against annotations."""

from blinklab.validation.metrics import (
    aggregate,
    completeness_agreement,
    compute_metrics,
    f1_score,
    pooled_completeness_agreement,
)
from blinklab.validation.scoring import score_events, score_events_oracle
from blinklab.validation.types import (
    ConfusionCounts,
    FrameExtent,
    MatchDetail,
    MetricsReport,
    OpenGap,
)

__all__ = [
    "ConfusionCounts",
    "FrameExtent",
    "MatchDetail",
    "MetricsReport",
    "OpenGap",
    "aggregate",
    "completeness_agreement",
    "compute_metrics",
    "f1_score",
    "pooled_completeness_agreement",
    "score_events",
    "score_events_oracle",
]
