"""Blink detection from openness and EAR signals."""

from blinklab.config import DetectorConfig, EyePolicy
from blinklab.detector.combine import combine_eyes
from blinklab.detector.ear import detect_ear_blinks, ear_baseline
from blinklab.detector.fusion import fuse_events
from blinklab.detector.openness import detect_openness_blinks
from blinklab.detector.pipeline import DetectionOutcome, detect, detect_with_diagnostics
from blinklab.detector.summary import BlinkSummary, summarize_events
from blinklab.detector.types import BlinkEvent, CombinedSeries, EventSource

__all__ = [
    "BlinkEvent",
    "BlinkSummary",
    "CombinedSeries",
    "DetectionOutcome",
    "DetectorConfig",
    "EventSource",
    "EyePolicy",
    "combine_eyes",
    "detect",
    "detect_ear_blinks",
    "detect_openness_blinks",
    "detect_with_diagnostics",
    "ear_baseline",
    "fuse_events",
    "summarize_events",
]
