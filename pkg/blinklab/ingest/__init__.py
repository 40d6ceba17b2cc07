"""Trace and annotation ingestion."""

from blinklab.ingest.annotations import (
    parse_annotations,
    read_annotation_file,
    serialize_annotations,
)
from blinklab.ingest.normalize import GapMode, GapPolicy, normalize_trace
from blinklab.ingest.trace_csv import parse_trace_csv, read_trace_file, write_trace_csv
from blinklab.ingest.types import (
    AnnotatedBlink,
    AnnotationSet,
    Completeness,
    FrameSample,
    IssueKind,
    SignalTrace,
    TraceIssue,
)

__all__ = [
    "AnnotatedBlink",
    "AnnotationSet",
    "Completeness",
    "FrameSample",
    "GapMode",
    "GapPolicy",
    "IssueKind",
    "SignalTrace",
    "TraceIssue",
    "normalize_trace",
    "parse_annotations",
    "parse_trace_csv",
    "read_annotation_file",
    "read_trace_file",
    "serialize_annotations",
    "write_trace_csv",
]
