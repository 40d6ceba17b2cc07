"""Reduction of the two eyes to one signal per channel."""

from typing import Callable

import numpy as np

from blinklab.config import EyePolicy
from blinklab.detector.types import CombinedSeries
from blinklab.ingest.types import SignalTrace

_REDUCERS: dict[EyePolicy, Callable[[np.ndarray, np.ndarray], np.ndarray]] = {
    EyePolicy.MIN: np.minimum,
    EyePolicy.LEFT: lambda right, left: left,
    EyePolicy.RIGHT: lambda right, left: right,
    EyePolicy.MEAN: lambda right, left: (right + left) / 2.0,
}


def combine_eyes(trace: SignalTrace, policy: EyePolicy | str = EyePolicy.MIN) -> CombinedSeries:
    """Apply the eye policy to openness and EAR alike; `min` follows the more closed eye."""
    reduce = _REDUCERS[EyePolicy(policy)]
    return CombinedSeries(
        video_id=trace.video_id,
        frames=trace.frame_indices,
        openness=reduce(trace.column("right_openness"), trace.column("left_openness")),
        ear=reduce(trace.column("right_ear"), trace.column("left_ear")),
    )
