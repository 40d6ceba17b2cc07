"""Configuration loading and validation."""

import json
from enum import StrEnum
from pathlib import Path
from typing import Any, Optional

import yaml
from pydantic import BaseModel, ConfigDict, Field, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class EyePolicy(StrEnum):
    """How the two eyes are reduced to one value per frame."""

    MIN = "min"
    LEFT = "left"
    RIGHT = "right"
    MEAN = "mean"


class DetectorConfig(BaseModel):
    """Blink detector thresholds.

    The openness thresholds follow the clinical scheme: a blink starts below
    0.75, is complete below 0.25 and ends above 0.98. The EAR parameters are
    local choices; the normalized-EAR curve has no published thresholds.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    start_threshold: float = Field(default=0.75, description="Openness below this starts a blink")
    complete_threshold: float = Field(
        default=0.25, description="Openness below this makes the blink complete"
    )
    end_threshold: float = Field(default=0.98, description="Openness above this ends a blink")
    eye_policy: EyePolicy = Field(default=EyePolicy.MIN, description="Eye reduction policy")
    ear_enabled: bool = Field(default=True, description="Run the complementary EAR detector")
    ear_baseline_percentile: float = Field(
        default=90.0, description="Nearest-rank percentile of EAR taken as open-eye baseline"
    )
    ear_start_ratio: float = Field(
        default=0.85, description="Normalized EAR below this starts an EAR blink"
    )
    ear_end_ratio: float = Field(
        default=0.95, description="Normalized EAR at or above this ends an EAR blink"
    )
    ear_min_duration_frames: int = Field(
        default=2, ge=1, description="Shorter EAR events are discarded as noise"
    )
    fusion_merge_gap_frames: int = Field(
        default=1, ge=0, description="Openness and EAR events this close are merged"
    )

    @model_validator(mode="after")
    def check_ordering(self) -> "DetectorConfig":
        """Validate threshold ordering."""
        if not 0.0 < self.complete_threshold < self.start_threshold < self.end_threshold <= 1.0:
            raise ValueError(
                "Thresholds must satisfy 0 < complete_threshold < start_threshold "
                f"< end_threshold <= 1, got {self.complete_threshold}, "
                f"{self.start_threshold}, {self.end_threshold}"
            )
        if not 0.0 < self.ear_start_ratio < self.ear_end_ratio <= 1.0:
            raise ValueError(
                "EAR ratios must satisfy 0 < ear_start_ratio < ear_end_ratio <= 1, "
                f"got {self.ear_start_ratio}, {self.ear_end_ratio}"
            )
        if not 50.0 < self.ear_baseline_percentile <= 100.0:
            raise ValueError(
                f"ear_baseline_percentile must lie in (50, 100], got {self.ear_baseline_percentile}"
            )
        return self

    @classmethod
    def from_json(cls, path: Path | str) -> "DetectorConfig":
        """Load a detector config from a flat JSON document."""
        with open(path, "r", encoding="utf-8") as f:
            return cls.model_validate(json.load(f) or {})


class IngestConfig(BaseModel):
    """Trace ingestion settings."""

    fill_gaps: Optional[int] = Field(
        default=None, ge=0, description="Interpolate gaps up to N frames (None = strict)"
    )
    fps: Optional[float] = Field(default=None, gt=0, description="Frames per second")


class ValidationConfig(BaseModel):
    """Scoring settings."""

    tn_strict: bool = Field(
        default=False, description="Any annotated frame disqualifies an open gap as TN"
    )


class BlinklabConfig(BaseSettings):
    """Main blinklab configuration."""

    model_config = SettingsConfigDict(
        env_prefix="BLINKLAB_",
        env_nested_delimiter="__",
        case_sensitive=False,
        extra="ignore",
    )

    detector: DetectorConfig = Field(default_factory=DetectorConfig)
    ingest: IngestConfig = Field(default_factory=IngestConfig)
    validation: ValidationConfig = Field(default_factory=ValidationConfig)

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: Any,
        env_settings: Any,
        dotenv_settings: Any,
        file_secret_settings: Any,
    ) -> tuple[Any, ...]:
        # Environment wins over values read from the config file
        return env_settings, init_settings, dotenv_settings, file_secret_settings

    @classmethod
    def load(cls, config_path: Optional[Path | str] = None) -> "BlinklabConfig":
        """Load configuration from file and environment."""
        if config_path is None:
            config_path = find_config_file()
        elif isinstance(config_path, str):
            config_path = Path(config_path)

        config_dict: dict[str, Any] = {}
        if config_path is not None:
            if not config_path.exists():
                raise FileNotFoundError(f"Config file not found: {config_path}")
            with open(config_path, "r", encoding="utf-8") as f:
                if config_path.suffix.lower() == ".json":
                    config_dict = json.load(f) or {}
                else:
                    config_dict = yaml.safe_load(f) or {}
            if not isinstance(config_dict, dict):
                raise ValueError(f"Config file {config_path} must contain a mapping")

        # A flat detector document (the detector JSON contract) goes under `detector`
        detector_fields = set(DetectorConfig.model_fields)
        flat = {key: config_dict.pop(key) for key in list(config_dict) if key in detector_fields}
        if flat:
            config_dict.setdefault("detector", {}).update(flat)

        return cls(**config_dict)

    def with_overrides(
        self,
        *,
        ear_enabled: Optional[bool] = None,
        eye_policy: Optional[str] = None,
        fill_gaps: Optional[int] = None,
        tn_strict: Optional[bool] = None,
        fps: Optional[float] = None,
    ) -> "BlinklabConfig":
        """Return a re-validated copy with command-line overrides applied.

        Overrides win over both the config file and the environment.
        """
        detector = self.detector.model_dump()
        ingest = self.ingest.model_dump()
        validation = self.validation.model_dump()
        if ear_enabled is not None:
            detector["ear_enabled"] = ear_enabled
        if eye_policy is not None:
            detector["eye_policy"] = eye_policy
        if fill_gaps is not None:
            ingest["fill_gaps"] = fill_gaps
        if fps is not None:
            ingest["fps"] = fps
        if tn_strict is not None:
            validation["tn_strict"] = tn_strict
        return self.model_copy(
            update={
                "detector": DetectorConfig.model_validate(detector),
                "ingest": IngestConfig.model_validate(ingest),
                "validation": ValidationConfig.model_validate(validation),
            }
        )


def find_config_file() -> Optional[Path]:
    """Find config file in resolution order. Prefers JSON over YAML if both exist."""
    for base in (Path(".blinklab"), Path.home() / ".config" / "blinklab"):
        for name in ("config.json", "config.yaml", "config.yml"):
            candidate = base / name
            if candidate.exists():
                return candidate
    return None
