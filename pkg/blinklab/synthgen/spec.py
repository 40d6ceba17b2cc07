"""Synthetic trace specification."""

import json
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

MAX_DIP_DEPTH = 0.75


class SyntheticSpec(BaseModel):
    """Parameters of one synthetic trace with known blinks."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    n_frames: int = Field(gt=0, description="Trace length in frames")
    blink_count: int = Field(ge=0, description="Number of blinks to place")
    blink_depth_range: tuple[float, float] = Field(
        default=(0.05, 0.6), description="Range of openness dip minima"
    )
    blink_depths: Optional[list[float]] = Field(
        default=None, description="Explicit dip minima, one per blink, in order"
    )
    blink_duration_range: tuple[int, int] = Field(
        default=(3, 6), description="Range of blink lengths in frames"
    )
    min_gap_frames: int = Field(default=10, ge=2, description="Open frames around every blink")
    open_level: float = Field(default=0.995, gt=0.0, le=1.0)
    ear_open_level: float = Field(default=0.33, gt=0.0, le=2.0)
    ear_dip_fraction: float = Field(default=0.6, ge=0.0, le=1.0)
    noise_sigma: float = Field(default=0.0, ge=0.0, description="Openness noise std")
    ear_noise_sigma: Optional[float] = Field(
        default=None, ge=0.0, description="EAR noise std (defaults to noise_sigma)"
    )
    openness_dip_enabled: bool = Field(
        default=True, description="False keeps openness flat while EAR still dips"
    )
    seed: int = Field(default=0, ge=0, lt=2**64)
    fps: Optional[float] = Field(default=None, gt=0)
    video_id: str = "synthetic"

    @model_validator(mode="after")
    def check_ranges(self) -> "SyntheticSpec":
        """Validate depth and duration ranges."""
        low, high = self.blink_depth_range
        if not 0.0 <= low <= high < MAX_DIP_DEPTH:
            raise ValueError(
                f"blink_depth_range must satisfy 0 <= low <= high < {MAX_DIP_DEPTH}, "
                f"got ({low}, {high})"
            )
        shortest, longest = self.blink_duration_range
        if not 1 <= shortest <= longest:
            raise ValueError(
                f"blink_duration_range must satisfy 1 <= min <= max, got ({shortest}, {longest})"
            )
        if self.blink_depths is not None:
            if len(self.blink_depths) != self.blink_count:
                raise ValueError(
                    f"blink_depths has {len(self.blink_depths)} values for "
                    f"blink_count={self.blink_count}"
                )
            for depth in self.blink_depths:
                if not 0.0 <= depth < MAX_DIP_DEPTH:
                    raise ValueError(f"blink depth {depth} outside [0, {MAX_DIP_DEPTH})")
        return self

    @property
    def effective_ear_noise_sigma(self) -> float:
        return self.noise_sigma if self.ear_noise_sigma is None else self.ear_noise_sigma

    @classmethod
    def from_json(cls, path: Path | str) -> "SyntheticSpec":
        with open(path, "r", encoding="utf-8") as f:
            return cls.model_validate(json.load(f))
