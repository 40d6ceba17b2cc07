"""Exception hierarchy for ingestion, detection, scoring and synthesis."""

from __future__ import annotations

from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from blinklab.ingest.types import TraceIssue


class BlinklabError(Exception):
    """Base class for every error raised by blinklab."""


class TraceFormatError(BlinklabError, ValueError):
    """The trace CSV does not follow the column contract."""

    def __init__(self, message: str, column: Optional[str] = None):
        super().__init__(message)
        self.column = column


class TraceValueError(BlinklabError, ValueError):
    """A trace cell is not a number or lies outside its valid range."""

    def __init__(self, message: str, row: int, issue: Optional[TraceIssue] = None):
        super().__init__(message)
        self.row = row
        self.issue = issue


class TraceStructureError(BlinklabError, ValueError):
    """Frame indices are duplicated or decreasing."""

    def __init__(self, message: str, row: int, issue: TraceIssue):
        super().__init__(message)
        self.row = row
        self.issue = issue


class GapError(BlinklabError, ValueError):
    """The strict gap policy met a missing frame."""

    def __init__(self, message: str, first_missing_frame: int):
        super().__init__(message)
        self.first_missing_frame = first_missing_frame


class AnnotationParseError(BlinklabError, ValueError):
    """An annotation token does not match `<start>-<end><c|i>`."""

    def __init__(self, message: str, token: str):
        super().__init__(message)
        self.token = token


class AnnotationRangeError(BlinklabError, ValueError):
    """An annotation token has start > end."""

    def __init__(self, message: str, token: str):
        super().__init__(message)
        self.token = token


class AnnotationStructureError(BlinklabError, ValueError):
    """Annotated ranges overlap or are out of order."""


class DegenerateBaselineError(BlinklabError, ValueError):
    """Too few usable EAR frames to estimate the open-eye baseline."""


class ScoringRangeError(BlinklabError, ValueError):
    """A detected event lies outside the scored trace extent."""


class CapacityError(BlinklabError, ValueError):
    """The requested synthetic blinks do not fit in the trace."""


class ManifestError(BlinklabError, ValueError):
    """The validation manifest is unreadable or malformed."""
