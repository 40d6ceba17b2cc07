"""Pytest configuration and fixtures."""

import os
from pathlib import Path

import pytest

from blinklab.config import DetectorConfig
from blinklab.ingest.annotations import parse_annotations
from blinklab.ingest.trace_csv import parse_trace_csv
from tests.traces import GOLDEN_TRACE_CSV


@pytest.fixture
def golden_trace():
    """The 16-frame golden fragment, frames 30-45."""
    return parse_trace_csv(GOLDEN_TRACE_CSV, video_id="video7")


@pytest.fixture
def golden_annotations():
    """The annotation covering the golden fragment."""
    return parse_annotations("36-41c", "video7")


@pytest.fixture
def openness_only_config():
    """Detector defaults with the EAR complement switched off."""
    return DetectorConfig(ear_enabled=False)


@pytest.fixture
def golden_files(tmp_path) -> tuple[Path, Path]:
    """Write the golden trace and annotation to disk."""
    trace_path = tmp_path / "video7.csv"
    trace_path.write_text(GOLDEN_TRACE_CSV, encoding="utf-8")
    annotation_path = tmp_path / "video7.txt"
    annotation_path.write_text("36-41c\n", encoding="utf-8")
    return trace_path, annotation_path


@pytest.fixture
def golden_manifest(tmp_path, golden_files) -> Path:
    """Manifest with the single golden pair, paths relative to the manifest."""
    manifest = tmp_path / "manifest.csv"
    manifest.write_text(
        "video_id,trace_path,annotation_path\nvideo7,video7.csv,video7.txt\n", encoding="utf-8"
    )
    return manifest


@pytest.fixture
def isolated_home(tmp_path, monkeypatch):
    """Keep config discovery and BLINKLAB_ variables from leaking into a test."""
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("HOME", str(tmp_path))
    for name in list(os.environ):
        if name.startswith("BLINKLAB_"):
            monkeypatch.delenv(name)
    return tmp_path
