"""Per-frame signal CSV reading and writing.

Column contract (header mandatory, order fixed):

    frame,right_openness,left_openness,right_ear,left_ear

Rows are numbered from 1, header excluded, in every diagnostic.
"""

import io
import logging
import math
from pathlib import Path
from typing import Optional, TextIO

import pandas as pd

from blinklab.errors import TraceFormatError, TraceStructureError, TraceValueError
from blinklab.ingest.table import read_table
from blinklab.ingest.types import (
    EAR_RANGE,
    OPENNESS_RANGE,
    TRACE_COLUMNS,
    FrameSample,
    IssueKind,
    SignalTrace,
    TraceIssue,
)

logger = logging.getLogger(__name__)

_VALUE_RANGES = {
    "right_openness": OPENNESS_RANGE,
    "left_openness": OPENNESS_RANGE,
    "right_ear": EAR_RANGE,
    "left_ear": EAR_RANGE,
}


def parse_trace_csv(
    text: str | TextIO, video_id: str = "", fps: Optional[float] = None
) -> SignalTrace:
    """
    Parse a trace CSV into a SignalTrace.

    Args:
        text: CSV text or an open text stream
        video_id: Identifier stored on the trace
        fps: Optional frame rate (informational)

    Returns:
        SignalTrace with samples in row order

    Raises:
        TraceFormatError: Header missing, column missing or renamed, row with the
            wrong number of fields
        TraceValueError: Non-numeric or out-of-range cell
        TraceStructureError: Duplicate or decreasing frame index
    """
    stream = io.StringIO(text) if isinstance(text, str) else text
    try:
        df = read_table(stream, TraceFormatError)
    except pd.errors.EmptyDataError as e:
        raise TraceFormatError(
            f"Trace CSV is empty; expected header {','.join(TRACE_COLUMNS)}"
        ) from e

    columns = list(df.columns)
    for expected in TRACE_COLUMNS:
        if expected not in columns:
            raise TraceFormatError(
                f"Missing column '{expected}' (header was: {','.join(columns)})", column=expected
            )
    if tuple(columns) != TRACE_COLUMNS:
        raise TraceFormatError(
            f"Expected header {','.join(TRACE_COLUMNS)}, got {','.join(columns)}"
        )

    frames = [_parse_frame(cell, row) for row, cell in enumerate(df["frame"], start=1)]
    values = {
        name: [
            _parse_value(cell, name, row, frames[row - 1])
            for row, cell in enumerate(df[name], start=1)
        ]
        for name in TRACE_COLUMNS[1:]
    }

    for row in range(2, len(frames) + 1):
        prev, cur = frames[row - 2], frames[row - 1]
        if cur == prev:
            issue = TraceIssue(IssueKind.DUPLICATE_FRAME, cur, f"frame {cur} repeated")
            raise TraceStructureError(f"Duplicate frame {cur} at row {row}", row=row, issue=issue)
        if cur < prev:
            issue = TraceIssue(
                IssueKind.NON_MONOTONIC, cur, f"frame {cur} follows frame {prev}"
            )
            raise TraceStructureError(
                f"Frame index decreases from {prev} to {cur} at row {row}", row=row, issue=issue
            )

    samples = [
        FrameSample(
            frame_index=frame,
            right_openness=values["right_openness"][i],
            left_openness=values["left_openness"][i],
            right_ear=values["right_ear"][i],
            left_ear=values["left_ear"][i],
        )
        for i, frame in enumerate(frames)
    ]
    logger.debug(f"Parsed {len(samples)} frames for video '{video_id}'")
    return SignalTrace(video_id=video_id, samples=tuple(samples), fps=fps)


def _parse_frame(cell: str, row: int) -> int:
    try:
        frame = int(cell.strip())
    except ValueError:
        raise TraceValueError(
            f"Non-integer frame value {cell!r} at row {row}", row=row
        ) from None
    if frame < 0:
        raise TraceValueError(f"Negative frame value {frame} at row {row}", row=row)
    return frame


def _parse_value(cell: str, column: str, row: int, frame: int) -> float:
    try:
        value = float(cell.strip())
    except ValueError:
        raise TraceValueError(
            f"Non-numeric value {cell!r} in column '{column}' at row {row}", row=row
        ) from None
    low, high = _VALUE_RANGES[column]
    if math.isnan(value) or not low <= value <= high:
        issue = TraceIssue(
            IssueKind.OUT_OF_RANGE_VALUE, frame, f"{column}={cell.strip()} outside [{low}, {high}]"
        )
        raise TraceValueError(
            f"Value {cell.strip()} in column '{column}' at row {row} outside [{low}, {high}]",
            row=row,
            issue=issue,
        )
    return value


def write_trace_csv(trace: SignalTrace) -> str:
    """Serialize a trace with the canonical header; floats use their shortest exact form."""
    df = pd.DataFrame(
        {
            "frame": [s.frame_index for s in trace.samples],
            **{name: [getattr(s, name) for s in trace.samples] for name in TRACE_COLUMNS[1:]},
        },
        columns=list(TRACE_COLUMNS),
    )
    return df.to_csv(index=False, lineterminator="\n")


def read_trace_file(
    path: Path | str, video_id: Optional[str] = None, fps: Optional[float] = None
) -> SignalTrace:
    """Read a UTF-8 trace CSV; the video id defaults to the file stem."""
    path = Path(path)
    with open(path, "r", encoding="utf-8", newline="") as f:
        return parse_trace_csv(f, video_id=video_id if video_id is not None else path.stem, fps=fps)
