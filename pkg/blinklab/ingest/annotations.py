"""Specialist annotation text: whitespace-separated `<start>-<end><c|i>` tokens."""

import re
from pathlib import Path
from typing import Optional, TextIO

from blinklab.errors import AnnotationParseError, AnnotationRangeError, AnnotationStructureError
from blinklab.ingest.types import AnnotatedBlink, AnnotationSet, Completeness

TOKEN_PATTERN = re.compile(r"^([0-9]+)-([0-9]+)([ci])$", re.IGNORECASE)

_FLAGS = {"c": Completeness.COMPLETE, "i": Completeness.PARTIAL}


def parse_annotations(text: str | TextIO, video_id: str) -> AnnotationSet:
    """
    Parse annotation tokens such as ``36-41c 117-123c 182-185i``.

    Flags are case-insensitive: `c` is a complete blink, `i` an incomplete
    (partial) one.

    Raises:
        AnnotationParseError: Token does not match the grammar
        AnnotationRangeError: Token start exceeds its end
        AnnotationStructureError: Tokens overlap or are out of order
    """
    if not isinstance(text, str):
        text = text.read()

    blinks: list[AnnotatedBlink] = []
    for token in text.split():
        match = TOKEN_PATTERN.match(token)
        if match is None:
            raise AnnotationParseError(
                f"Malformed annotation token '{token}' (expected <start>-<end><c|i>)", token=token
            )
        start, end = int(match.group(1)), int(match.group(2))
        if start > end:
            raise AnnotationRangeError(
                f"Annotation token '{token}': start {start} exceeds end {end}", token=token
            )
        blink = AnnotatedBlink(start, end, _FLAGS[match.group(3).lower()])
        if blinks and blink.start_frame <= blinks[-1].end_frame:
            raise AnnotationStructureError(
                f"Annotation token '{token}' overlaps or precedes '{blinks[-1].token}'"
            )
        blinks.append(blink)

    return AnnotationSet(video_id=video_id, blinks=tuple(blinks))


def serialize_annotations(annotations: AnnotationSet) -> str:
    """Emit tokens in order, single-space separated, lowercase flags."""
    return " ".join(blink.token for blink in annotations.blinks)


def read_annotation_file(path: Path | str, video_id: Optional[str] = None) -> AnnotationSet:
    """Read a UTF-8 annotation file; the video id defaults to the file stem."""
    path = Path(path)
    with open(path, "r", encoding="utf-8") as f:
        return parse_annotations(f, video_id if video_id is not None else path.stem)
