"""Deterministic synthetic traces with ground-truth annotations."""

import logging

import numpy as np

from blinklab.errors import CapacityError
from blinklab.ingest.types import (
    AnnotatedBlink,
    AnnotationSet,
    Completeness,
    FrameSample,
    SignalTrace,
)
from blinklab.synthgen.spec import SyntheticSpec

logger = logging.getLogger(__name__)

COMPLETE_BELOW = 0.25
DECIMALS = 6


def dip_shape(duration: int) -> np.ndarray:
    """Closure profile in (0, 1]: linear descent, hold at 1, linear ascent."""
    hold = max(1, duration // 4)
    descend = (duration - hold) // 2
    ascend = duration - hold - descend
    return np.concatenate(
        [
            np.arange(1, descend + 1) / (descend + 1),
            np.ones(hold),
            1.0 - np.arange(1, ascend + 1) / (ascend + 1),
        ]
    )


def generate(spec: SyntheticSpec) -> tuple[SignalTrace, AnnotationSet]:
    """
    Generate a trace and its annotations from a spec.

    Openness sits at open_level except for piecewise-linear dips; EAR dips by
    ear_dip_fraction of its open level at full closure. A blink is annotated
    complete when its dip minimum is below 0.25. Every blink keeps at least
    min_gap_frames of open signal on both sides. Output depends only on spec.

    Raises:
        CapacityError: The blinks and their gaps do not fit in n_frames
    """
    rng = np.random.default_rng(spec.seed)
    count = spec.blink_count
    shortest, longest = spec.blink_duration_range
    durations = rng.integers(shortest, longest + 1, size=count)
    if spec.blink_depths is not None:
        depths = np.asarray(spec.blink_depths, dtype=np.float64)
    else:
        depths = rng.uniform(*spec.blink_depth_range, size=count)
    depths = np.round(depths, DECIMALS)

    needed = int(durations.sum()) + (count + 1) * spec.min_gap_frames
    if needed > spec.n_frames:
        raise CapacityError(
            f"{count} blinks of {shortest}-{longest} frames with min_gap_frames="
            f"{spec.min_gap_frames} need {needed} frames, n_frames is {spec.n_frames}"
        )

    # Spread the spare frames over the count + 1 gaps
    slack = spec.n_frames - needed
    cuts = np.sort(rng.integers(0, slack + 1, size=count))
    extras = np.diff(np.concatenate([[0], cuts, [slack]]))

    closure = np.zeros(spec.n_frames)
    floor = np.full(spec.n_frames, spec.open_level)
    blinks: list[AnnotatedBlink] = []
    position = 0
    for duration, depth, extra in zip(durations, depths, extras):
        start = position + spec.min_gap_frames + int(extra)
        end = start + int(duration) - 1
        closure[start : end + 1] = dip_shape(int(duration))
        floor[start : end + 1] = depth
        complete = spec.openness_dip_enabled and depth < COMPLETE_BELOW
        blinks.append(
            AnnotatedBlink(
                start, end, Completeness.COMPLETE if complete else Completeness.PARTIAL
            )
        )
        position = end + 1

    if spec.openness_dip_enabled:
        openness = spec.open_level - closure * (spec.open_level - floor)
    else:
        openness = np.full(spec.n_frames, spec.open_level)
    ear = spec.ear_open_level * (1.0 - spec.ear_dip_fraction * closure)

    sigma, ear_sigma = spec.noise_sigma, spec.effective_ear_noise_sigma
    channels = {
        "right_openness": np.clip(openness + rng.normal(0.0, sigma, spec.n_frames), 0.0, 1.0),
        "left_openness": np.clip(openness + rng.normal(0.0, sigma, spec.n_frames), 0.0, 1.0),
        "right_ear": np.clip(ear + rng.normal(0.0, ear_sigma, spec.n_frames), 0.0, 2.0),
        "left_ear": np.clip(ear + rng.normal(0.0, ear_sigma, spec.n_frames), 0.0, 2.0),
    }
    channels = {name: np.round(values, DECIMALS) for name, values in channels.items()}

    samples = tuple(
        FrameSample(
            frame_index=i,
            right_openness=float(channels["right_openness"][i]),
            left_openness=float(channels["left_openness"][i]),
            right_ear=float(channels["right_ear"][i]),
            left_ear=float(channels["left_ear"][i]),
        )
        for i in range(spec.n_frames)
    )
    logger.debug(f"Generated '{spec.video_id}': {spec.n_frames} frames, {count} blinks")
    return (
        SignalTrace(video_id=spec.video_id, samples=samples, fps=spec.fps),
        AnnotationSet(video_id=spec.video_id, blinks=tuple(blinks)),
    )
