"""Tests for eye reduction, the openness and EAR detectors and the pipeline."""

import numpy as np
import pytest

from blinklab.config import DetectorConfig, EyePolicy
from blinklab.detector import (
    BlinkEvent,
    EventSource,
    combine_eyes,
    detect,
    detect_ear_blinks,
    detect_openness_blinks,
    detect_with_diagnostics,
    ear_baseline,
    summarize_events,
)
from blinklab.detector.hysteresis import HysteresisMachine, Span
from blinklab.errors import DegenerateBaselineError
from blinklab.ingest import Completeness, FrameSample, SignalTrace
from tests.traces import ear_complement_trace, make_trace


def _frame35(trace):
    return combine_eyes(SignalTrace(trace.video_id, trace.samples[5:6]))


def test_combine_min_policy(golden_trace):
    """Test that min follows the more closed eye."""
    series = _frame35(golden_trace)
    assert series.frames.tolist() == [35]
    assert series.openness[0] == pytest.approx(0.691)
    assert series.ear[0] == pytest.approx(0.225)


def test_combine_mean_policy(golden_trace):
    """Test the arithmetic mean policy."""
    series = combine_eyes(SignalTrace("v", golden_trace.samples[5:6]), EyePolicy.MEAN)
    assert series.openness[0] == pytest.approx(0.842)


def test_combine_single_eye_policies(golden_trace):
    """Test left and right policies."""
    trace = SignalTrace("v", golden_trace.samples[5:6])
    assert combine_eyes(trace, "left").openness[0] == pytest.approx(0.691)
    assert combine_eyes(trace, "right").openness[0] == pytest.approx(0.993)


def test_combine_equal_eyes():
    """Test that equal eyes give the same result under every policy."""
    trace = make_trace([0.4, 0.9], ear=[0.2, 0.3])
    for policy in EyePolicy:
        series = combine_eyes(trace, policy)
        assert series.openness.tolist() == [0.4, 0.9]
        assert series.ear.tolist() == [0.2, 0.3]


def test_openness_golden_fragment(golden_trace, openness_only_config):
    """Test the single complete blink of the golden fragment."""
    events = detect_openness_blinks(combine_eyes(golden_trace), openness_only_config)

    assert events == [
        BlinkEvent(
            start_frame=35,
            end_frame=38,
            completeness=Completeness.COMPLETE,
            min_openness=0.001,
            source=EventSource.OPENNESS,
        )
    ]


def test_openness_constant_open():
    """Test that a fully open trace has no blinks."""
    events = detect_openness_blinks(combine_eyes(make_trace([1.0] * 100)), DetectorConfig())
    assert events == []


def test_openness_partial_dip():
    """Test that a dip to 0.50 is a partial blink."""
    openness = [1.0] * 5 + [0.5] * 3 + [1.0] * 5
    events = detect_openness_blinks(combine_eyes(make_trace(openness)), DetectorConfig())

    assert len(events) == 1
    assert (events[0].start_frame, events[0].end_frame) == (5, 7)
    assert events[0].completeness is Completeness.PARTIAL
    assert events[0].min_openness == 0.5


def test_openness_threshold_boundaries():
    """Test strict comparisons at the three thresholds."""
    # 0.75 does not start, 0.25 is not complete, 0.98 does not end
    openness = [1.0, 0.75, 0.74, 0.25, 0.98, 0.98, 0.99, 1.0]
    events = detect_openness_blinks(combine_eyes(make_trace(openness)), DetectorConfig())

    assert len(events) == 1
    assert (events[0].start_frame, events[0].end_frame) == (2, 5)
    assert events[0].completeness is Completeness.PARTIAL


def test_openness_truncated_at_trace_end():
    """Test that a blink still open at the end is emitted truncated."""
    openness = [1.0, 1.0, 0.6, 0.1, 0.2]
    events = detect_openness_blinks(combine_eyes(make_trace(openness)), DetectorConfig())

    assert len(events) == 1
    assert events[0].end_frame == 4
    assert events[0].truncated is True
    assert events[0].completeness is Completeness.COMPLETE


def test_openness_never_bridges_segments():
    """Test that a frame gap ends the blink in the earlier segment."""
    openness = [1.0, 1.0, 0.5, 0.5, 0.5, 0.5, 1.0]
    trace = make_trace(openness, frames=[0, 1, 2, 3, 20, 21, 22])
    events = detect_openness_blinks(combine_eyes(trace), DetectorConfig())

    assert [(e.start_frame, e.end_frame, e.truncated) for e in events] == [
        (2, 3, True),
        (20, 21, False),
    ]


def test_hysteresis_machine_excludes_leave_frame():
    """Test the span boundaries of the shared state machine."""
    machine = HysteresisMachine(enters=lambda v: v < 0.5, leaves=lambda v: v > 0.9)
    spans = [machine.step(i, v) for i, v in enumerate([1.0, 0.4, 0.95, 1.0])]
    assert spans == [None, None, Span(1, 1), None]
    assert machine.finish(3) is None


def test_ear_baseline_nearest_rank():
    """Test the nearest-rank 90th percentile."""
    trace = make_trace([1.0] * 10, ear=[0.30] * 9 + [0.20])
    assert ear_baseline(combine_eyes(trace), DetectorConfig()) == pytest.approx(0.30)


def test_ear_baseline_constant():
    """Test a constant EAR series."""
    trace = make_trace([1.0] * 20, ear=[0.33] * 20)
    assert ear_baseline(combine_eyes(trace), DetectorConfig()) == pytest.approx(0.33)


def test_ear_baseline_golden_fragment(golden_trace):
    """Test the baseline of the golden fragment."""
    assert ear_baseline(combine_eyes(golden_trace), DetectorConfig()) == pytest.approx(0.328)


def test_ear_baseline_degenerate():
    """Test that an all-zero EAR series has no baseline."""
    trace = make_trace([1.0] * 20, ear=[0.0] * 20)
    with pytest.raises(DegenerateBaselineError):
        ear_baseline(combine_eyes(trace), DetectorConfig())


def test_ear_baseline_ignores_zero_frames():
    """Test that zero-EAR frames do not pull the percentile down."""
    trace = make_trace([1.0] * 100, ear=[0.30] * 10 + [0.0] * 90)
    assert ear_baseline(combine_eyes(trace), DetectorConfig()) == pytest.approx(0.30)


def test_ear_baseline_too_few_frames():
    """Test that fewer than 10 positive EAR frames is degenerate."""
    trace = make_trace([1.0] * 9, ear=[0.33] * 9)
    with pytest.raises(DegenerateBaselineError, match="at least 10"):
        ear_baseline(combine_eyes(trace), DetectorConfig())


def test_ear_detects_partial_dip():
    """Test the EAR dip that openness misses."""
    series = combine_eyes(ear_complement_trace(30))
    events = detect_ear_blinks(series, DetectorConfig())

    assert len(events) == 1
    event = events[0]
    assert (event.start_frame, event.end_frame) == (10, 12)
    assert event.completeness is Completeness.PARTIAL
    assert event.source is EventSource.EAR
    assert event.min_normalized_ear == pytest.approx(0.606, abs=1e-3)
    assert event.min_openness == pytest.approx(0.99)


def test_ear_constant_has_no_events():
    """Test that constant EAR never starts a blink."""
    series = combine_eyes(make_trace([0.99] * 30, ear=[0.33] * 30))
    assert detect_ear_blinks(series, DetectorConfig()) == []


def test_ear_single_frame_dip_discarded():
    """Test the minimum-duration noise guard."""
    series = combine_eyes(ear_complement_trace(30, dip=(10,)))
    assert detect_ear_blinks(series, DetectorConfig(ear_min_duration_frames=2)) == []
    assert len(detect_ear_blinks(series, DetectorConfig(ear_min_duration_frames=1))) == 1


def test_detect_golden_fragment_defaults(golden_trace, golden_annotations):
    """Test that defaults give one complete blink overlapping 36-41c."""
    events = detect(golden_trace)

    assert len(events) == 1
    event = events[0]
    assert event.completeness is Completeness.COMPLETE
    blink = golden_annotations.blinks[0]
    assert event.overlaps(blink.start_frame, blink.end_frame)
    # The EAR dip extends the openness event 35-38 to 35-41
    assert (event.start_frame, event.end_frame) == (35, 41)
    assert event.source is EventSource.FUSED
    assert event.min_openness == 0.001


def test_detect_golden_fragment_openness_only(golden_trace, openness_only_config):
    """Test the golden fragment with the EAR complement off."""
    events = detect(golden_trace, openness_only_config)
    assert [(e.start_frame, e.end_frame, e.source) for e in events] == [
        (35, 38, EventSource.OPENNESS)
    ]


def test_detect_empty_trace():
    """Test that an empty trace has no events."""
    assert detect(SignalTrace("empty")) == []


def test_detect_ear_complement_scenario():
    """Test that the EAR-only dip is found by the full pipeline."""
    trace = ear_complement_trace(40)

    events = detect(trace)
    assert [(e.start_frame, e.end_frame, e.source) for e in events] == [
        (10, 12, EventSource.EAR)
    ]
    assert events[0].completeness is Completeness.PARTIAL
    assert detect(trace, DetectorConfig(ear_enabled=False)) == []


def test_detect_does_not_fuse_across_missing_frame():
    """Test that openness and EAR events split by a gap stay separate."""
    frames = [f for f in range(80) if f != 51]
    openness = [0.1 if 45 <= f <= 50 else 0.99 for f in frames]
    ear = [0.20 if 52 <= f <= 55 else 0.33 for f in frames]

    events = detect(make_trace(openness, ear, frames=frames))
    assert [(e.start_frame, e.end_frame, e.source, e.truncated) for e in events] == [
        (45, 50, EventSource.OPENNESS, True),
        (52, 55, EventSource.EAR, False),
    ]
    assert events[0].completeness is Completeness.COMPLETE


def test_detect_degenerate_baseline_falls_back():
    """Test that a missing EAR signal degrades to openness-only with a warning."""
    openness = [1.0] * 10 + [0.1] * 3 + [1.0] * 10
    trace = make_trace(openness, ear=[0.0] * len(openness))

    outcome = detect_with_diagnostics(trace)
    assert [(e.start_frame, e.end_frame) for e in outcome.events] == [(10, 12)]
    assert outcome.baseline is None
    assert outcome.normalized_ear is None
    assert len(outcome.warnings) == 1
    assert "EAR" in outcome.warnings[0]


def test_detect_with_diagnostics_keeps_baseline(golden_trace):
    """Test that the outcome carries the baseline and normalized EAR."""
    outcome = detect_with_diagnostics(golden_trace)
    assert outcome.baseline == pytest.approx(0.328)
    assert len(outcome.normalized_ear) == 16
    assert outcome.warnings == []


def test_detect_is_deterministic():
    """Test repeated runs give identical events."""
    rng = np.random.default_rng(3)
    openness = rng.uniform(0.0, 1.0, 200)
    ear = rng.uniform(0.1, 0.4, 200)
    trace = make_trace(openness, ear)
    assert detect(trace) == detect(trace)


def test_detect_respects_eye_policy():
    """Test that the right-eye policy ignores a left-eye closure."""
    samples = tuple(
        FrameSample(i, 1.0, 0.1 if 5 <= i <= 7 else 1.0, 0.33, 0.33) for i in range(20)
    )
    trace = SignalTrace("v", samples)
    assert len(detect(trace, DetectorConfig(eye_policy=EyePolicy.MIN))) == 1
    assert detect(trace, DetectorConfig(eye_policy=EyePolicy.RIGHT)) == []


def test_summarize_events():
    """Test blink counts, durations and rate."""
    events = [
        BlinkEvent(10, 13, Completeness.COMPLETE, 0.01, EventSource.OPENNESS),
        BlinkEvent(40, 41, Completeness.PARTIAL, 0.6, EventSource.EAR),
    ]
    summary = summarize_events(events, n_frames=1800, fps=30.0)

    assert summary.count == 2
    assert summary.complete_count == 1
    assert summary.partial_count == 1
    assert summary.mean_duration_frames == 3.0
    assert summary.mean_interblink_frames == 30.0
    assert summary.blink_rate_per_min == pytest.approx(2.0)


def test_summarize_without_fps():
    """Test that the rate is undefined without a frame rate."""
    summary = summarize_events([], n_frames=100)
    assert summary.count == 0
    assert summary.mean_duration_frames is None
    assert summary.blink_rate_per_min is None
