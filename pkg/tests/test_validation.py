"""Tests for event-level scoring."""

import pytest

from blinklab.detector import BlinkEvent, EventSource
from blinklab.errors import ScoringRangeError
from blinklab.ingest import AnnotatedBlink, AnnotationSet, Completeness, parse_annotations
from blinklab.validation import (
    ConfusionCounts,
    FrameExtent,
    OpenGap,
    score_events,
    score_events_oracle,
)


def _events(*spans, completeness=Completeness.COMPLETE):
    return [
        BlinkEvent(start, end, completeness, 0.01, EventSource.OPENNESS) for start, end in spans
    ]


def _both(detected, annotated, extent, tn_strict=False):
    counts, detail = score_events(detected, annotated, extent, tn_strict=tn_strict)
    assert score_events_oracle(detected, annotated, extent, tn_strict=tn_strict) == counts
    return counts, detail


def test_golden_pair():
    """Test the detection 35-38 against 36-41c over frames 30-60."""
    counts, detail = _both(
        _events((35, 38)), parse_annotations("36-41c", "v"), FrameExtent(30, 60)
    )

    assert counts == ConfusionCounts(tp=1, fp=0, fn=0, tn=2)
    # The matched blink spilling into 39-60 does not disqualify that gap
    assert detail.gaps == (OpenGap(30, 34, True), OpenGap(39, 60, True))
    assert detail.event_matches == ((0,),)


def test_missed_blink():
    """Test that the only gap holding an unmatched blink is not a TN."""
    counts, _ = _both([], parse_annotations("10-12c", "v"), FrameExtent(0, 20))
    assert counts == ConfusionCounts(tp=0, fp=0, fn=1, tn=0)


def test_false_positive():
    """Test a detection with no annotation."""
    counts, _ = _both(_events((5, 7)), AnnotationSet("v"), FrameExtent(0, 20))
    assert counts == ConfusionCounts(tp=0, fp=1, fn=0, tn=2)


def test_exact_match_has_no_errors():
    """Test detections identical to annotations."""
    annotated = parse_annotations("3-5c 10-12i 30-31c", "v")
    detected = _events((3, 5), (10, 12), (30, 31))
    counts, _ = _both(detected, annotated, FrameExtent(0, 40))
    assert counts.fp == 0
    assert counts.fn == 0
    assert counts.tp == 3


def test_tn_strict_disqualifies_matched_spill():
    """Test that with tn_strict any annotated frame blocks a gap."""
    counts, _ = _both(
        _events((35, 38)), parse_annotations("36-41c", "v"), FrameExtent(30, 60), tn_strict=True
    )
    assert counts == ConfusionCounts(tp=1, fp=0, fn=0, tn=1)


def test_one_annotation_two_detections():
    """Test that both detections overlapping one blink are TPs."""
    counts, detail = _both(
        _events((10, 11), (13, 14)), parse_annotations("10-15c", "v"), FrameExtent(0, 30)
    )
    assert counts.tp == 2
    assert counts.fn == 0
    assert detail.annotation_hits == (True,)


def test_one_detection_two_annotations():
    """Test that a detection spanning two blinks counts once and hits both."""
    counts, detail = _both(
        _events((10, 30)), parse_annotations("12-14c 20-22i", "v"), FrameExtent(0, 40)
    )
    assert counts == ConfusionCounts(tp=1, fp=0, fn=0, tn=2)
    assert detail.event_matches == ((0, 1),)


def test_annotation_outside_extent_is_missed():
    """Test that annotations beyond the trace still count as false negatives."""
    counts, _ = _both([], parse_annotations("50-55c", "v"), FrameExtent(0, 20))
    assert counts == ConfusionCounts(tp=0, fp=0, fn=1, tn=1)


def test_empty_trace():
    """Test scoring with no frames at all."""
    counts, detail = _both([], parse_annotations("1-2c", "v"), None)
    assert counts == ConfusionCounts(fn=1)
    assert detail.gaps == ()


def test_detection_outside_extent():
    """Test that detections must lie within the scored frames."""
    with pytest.raises(ScoringRangeError):
        score_events(_events((18, 22)), AnnotationSet("v"), FrameExtent(0, 20))
    with pytest.raises(ScoringRangeError):
        score_events_oracle(_events((1, 2)), AnnotationSet("v"), None)


def test_overlapping_detections_rejected():
    """Test that detections must be sorted and disjoint."""
    with pytest.raises(ValueError, match="overlap"):
        score_events(_events((5, 10), (8, 12)), AnnotationSet("v"), FrameExtent(0, 20))


def test_whole_extent_detection():
    """Test a detection covering every frame leaves no gaps."""
    counts, detail = _both(
        _events((0, 20)), parse_annotations("5-6c", "v"), FrameExtent(0, 20)
    )
    assert counts == ConfusionCounts(tp=1)
    assert detail.gaps == ()


def test_completeness_pairs():
    """Test agreement bookkeeping over one-to-one pairs."""
    annotated = AnnotationSet(
        "v",
        (
            AnnotatedBlink(10, 12, Completeness.COMPLETE),
            AnnotatedBlink(20, 22, Completeness.COMPLETE),
        ),
    )
    detected = [
        BlinkEvent(10, 12, Completeness.COMPLETE, 0.01, EventSource.OPENNESS),
        BlinkEvent(20, 22, Completeness.PARTIAL, 0.5, EventSource.OPENNESS),
    ]
    _, detail = score_events(detected, annotated, FrameExtent(0, 30))
    assert detail.completeness_pairs() == (1, 2)


def test_frame_extent_validation():
    """Test FrameExtent bounds."""
    assert FrameExtent(30, 45).length == 16
    assert FrameExtent(30, 45).contains(35, 41)
    with pytest.raises(ValueError):
        FrameExtent(10, 5)
