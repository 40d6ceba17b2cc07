"""Openness chart for one video as a standalone SVG document."""

import logging
import xml.etree.ElementTree as ET
from typing import Optional

import numpy as np

from blinklab.config import DetectorConfig
from blinklab.detector.pipeline import DetectionOutcome
from blinklab.ingest.types import Completeness

logger = logging.getLogger(__name__)

SVG_NS = "http://www.w3.org/2000/svg"
XML_DECLARATION = '<?xml version="1.0" encoding="UTF-8"?>\n'

WIDTH = 960
HEIGHT = 320
MARGIN_LEFT = 48
MARGIN_RIGHT = 16
MARGIN_TOP = 24
MARGIN_BOTTOM = 32
Y_MAX = 1.05

EVENT_FILL = {Completeness.COMPLETE: "#d62728", Completeness.PARTIAL: "#ff7f0e"}


class _Axes:
    """Maps frame index and signal value to pixel coordinates."""

    def __init__(self, first_frame: int, last_frame: int):
        self.first = first_frame
        self.span = max(last_frame - first_frame, 1)
        self.left = MARGIN_LEFT
        self.top = MARGIN_TOP
        self.width = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
        self.height = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

    def x(self, frame: float) -> float:
        return self.left + (frame - self.first) / self.span * self.width

    def y(self, value: float) -> float:
        value = min(max(value, 0.0), Y_MAX)
        return self.top + (1.0 - value / Y_MAX) * self.height


def _points(axes: _Axes, frames: np.ndarray, values: np.ndarray) -> str:
    return " ".join(f"{axes.x(f):.2f},{axes.y(v):.2f}" for f, v in zip(frames, values))


def render_chart(outcome: DetectionOutcome, config: Optional[DetectorConfig] = None) -> str:
    """
    Render openness over frame index with the detected events shaded.

    The document holds exactly one <line> per openness threshold (start,
    complete, end); the frame and tick marks are drawn as <rect> and <path>.
    Normalized EAR, when available, is a dashed polyline.
    """
    config = config or DetectorConfig()
    series = outcome.series
    root = ET.Element(
        "svg",
        {
            "xmlns": SVG_NS,
            "width": str(WIDTH),
            "height": str(HEIGHT),
            "viewBox": f"0 0 {WIDTH} {HEIGHT}",
        },
    )
    ET.SubElement(root, "title").text = f"Eye openness: {series.video_id}"

    if len(series) == 0:
        axes = _Axes(0, 1)
    else:
        axes = _Axes(int(series.frames[0]), int(series.frames[-1]))

    ET.SubElement(
        root,
        "rect",
        {
            "class": "frame",
            "x": str(axes.left),
            "y": str(axes.top),
            "width": str(axes.width),
            "height": str(axes.height),
            "fill": "none",
            "stroke": "#444",
        },
    )
    ticks = " ".join(
        f"M{axes.left - 4},{axes.y(v):.2f} h4" for v in (0.0, 0.25, 0.5, 0.75, 1.0)
    )
    ET.SubElement(root, "path", {"class": "ticks", "d": ticks, "stroke": "#444"})

    for event in outcome.events:
        x0 = axes.x(event.start_frame - 0.5)
        x1 = axes.x(event.end_frame + 0.5)
        ET.SubElement(
            root,
            "rect",
            {
                "class": f"event {event.completeness.value}",
                "x": f"{max(x0, axes.left):.2f}",
                "y": str(axes.top),
                "width": f"{max(min(x1, axes.left + axes.width) - max(x0, axes.left), 1.0):.2f}",
                "height": str(axes.height),
                "fill": EVENT_FILL[event.completeness],
                "fill-opacity": "0.2",
            },
        )

    thresholds = (
        ("start", config.start_threshold, "#1f77b4"),
        ("complete", config.complete_threshold, "#d62728"),
        ("end", config.end_threshold, "#2ca02c"),
    )
    for name, value, color in thresholds:
        y = f"{axes.y(value):.2f}"
        ET.SubElement(
            root,
            "line",
            {
                "class": f"threshold {name}",
                "x1": str(axes.left),
                "x2": str(axes.left + axes.width),
                "y1": y,
                "y2": y,
                "stroke": color,
                "stroke-width": "1",
            },
        )
        label = ET.SubElement(
            root,
            "text",
            {"x": str(axes.left - 6), "y": y, "text-anchor": "end", "font-size": "10"},
        )
        label.text = f"{value:g}"

    for start, stop in series.segments():
        frames = series.frames[start:stop]
        ET.SubElement(
            root,
            "polyline",
            {
                "class": "openness",
                "points": _points(axes, frames, series.openness[start:stop]),
                "fill": "none",
                "stroke": "#000",
                "stroke-width": "1.2",
            },
        )
        if outcome.normalized_ear is not None:
            ET.SubElement(
                root,
                "polyline",
                {
                    "class": "ear",
                    "points": _points(axes, frames, outcome.normalized_ear[start:stop]),
                    "fill": "none",
                    "stroke": "#9467bd",
                    "stroke-dasharray": "4 3",
                    "stroke-width": "1",
                },
            )

    logger.debug(f"Rendered chart for '{series.video_id}' with {len(outcome.events)} event(s)")
    return XML_DECLARATION + ET.tostring(root, encoding="unicode") + "\n"
