"""Tests for metrics, aggregation and completeness agreement."""

import pytest

from blinklab.detector import BlinkEvent, EventSource
from blinklab.ingest import Completeness, parse_annotations
from blinklab.validation import (
    ConfusionCounts,
    FrameExtent,
    aggregate,
    completeness_agreement,
    compute_metrics,
    f1_score,
    pooled_completeness_agreement,
    score_events,
)


def test_f1_matches_reference_metrics():
    """Test F1 from a known precision and recall pair."""
    assert f1_score(0.9841, 0.9697) == pytest.approx(0.9768, abs=1e-4)


def test_compute_metrics_arithmetic():
    """Test all four metrics on small counts."""
    report = compute_metrics(ConfusionCounts(tp=3, fp=1, fn=1, tn=5))
    assert report.accuracy == pytest.approx(0.8)
    assert report.precision == pytest.approx(0.75)
    assert report.recall == pytest.approx(0.75)
    assert report.f1 == pytest.approx(0.75)


def test_compute_metrics_zero_denominators():
    """Test that undefined metrics are None, never 0 or 1."""
    report = compute_metrics(ConfusionCounts(tn=5))
    assert report.precision is None
    assert report.recall is None
    assert report.f1 is None
    assert report.accuracy == 1.0

    empty = compute_metrics(ConfusionCounts())
    assert empty.to_dict() == {"precision": None, "recall": None, "f1": None, "accuracy": None}


def test_f1_undefined_when_both_zero():
    """Test F1 with zero precision and recall."""
    report = compute_metrics(ConfusionCounts(fp=2, fn=3))
    assert report.precision == 0.0
    assert report.recall == 0.0
    assert report.f1 is None


def test_aggregate():
    """Test component-wise sums."""
    assert aggregate(
        [ConfusionCounts(1, 0, 0, 2), ConfusionCounts(2, 1, 1, 3)]
    ) == ConfusionCounts(3, 1, 1, 5)
    assert aggregate([]) == ConfusionCounts(0, 0, 0, 0)
    assert aggregate([ConfusionCounts(1, 2, 3, 4)] * 45) == ConfusionCounts(45, 90, 135, 180)


def test_counts_reject_negative():
    """Test the non-negative count invariant."""
    with pytest.raises(ValueError):
        ConfusionCounts(tp=-1)


def _detail(completeness, annotation):
    event = BlinkEvent(35, 38, completeness, 0.001, EventSource.OPENNESS)
    _, detail = score_events([event], parse_annotations(annotation, "v"), FrameExtent(30, 60))
    return detail


def test_completeness_agreement_golden_pair():
    """Test agreement on the golden pair."""
    assert completeness_agreement(_detail(Completeness.COMPLETE, "36-41c")) == 1.0


def test_completeness_agreement_disagreement():
    """Test a partial detection against a complete annotation."""
    assert completeness_agreement(_detail(Completeness.PARTIAL, "36-41c")) == 0.0


def test_completeness_agreement_undefined():
    """Test that no one-to-one pairs means undefined."""
    assert completeness_agreement(_detail(Completeness.COMPLETE, "50-52c")) is None


def test_pooled_completeness_agreement():
    """Test pooling pairs over videos."""
    details = [
        _detail(Completeness.COMPLETE, "36-41c"),
        _detail(Completeness.PARTIAL, "36-41c"),
        _detail(Completeness.PARTIAL, "36-41i"),
        _detail(Completeness.COMPLETE, "50-52c"),
    ]
    assert pooled_completeness_agreement(details) == pytest.approx(2 / 3)
    assert pooled_completeness_agreement([]) is None
