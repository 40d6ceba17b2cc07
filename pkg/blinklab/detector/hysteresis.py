"""Two-state hysteresis machine shared by the openness and EAR detectors."""

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterator, Optional

import numpy as np


class BlinkState(Enum):
    IDLE = 0
    IN_BLINK = 1


@dataclass(frozen=True)
class Span:
    """Inclusive [start, end] sample positions of one excursion."""

    start: int
    end: int
    truncated: bool = False


class HysteresisMachine:
    """IDLE -> IN_BLINK when `enters(value)`; IN_BLINK -> IDLE when `leaves(value)`.

    The frame that satisfies `leaves` is not part of the span.
    """

    def __init__(self, enters: Callable[[float], bool], leaves: Callable[[float], bool]):
        self.enters = enters
        self.leaves = leaves
        self.state = BlinkState.IDLE
        self.start: Optional[int] = None

    def reset(self) -> None:
        self.state = BlinkState.IDLE
        self.start = None

    def step(self, position: int, value: float) -> Optional[Span]:
        """Feed one sample. Returns the span that just ended, if any."""
        if self.state is BlinkState.IDLE:
            if self.enters(value):
                self.state = BlinkState.IN_BLINK
                self.start = position
            return None

        if self.leaves(value):
            span = Span(self.start, position - 1)
            self.reset()
            return span
        return None

    def finish(self, last_position: int) -> Optional[Span]:
        """Close a span still open at the end of a segment."""
        if self.state is BlinkState.IN_BLINK:
            span = Span(self.start, last_position, truncated=True)
            self.reset()
            return span
        return None


def run_segments(
    values: np.ndarray,
    segments: list[tuple[int, int]],
    enters: Callable[[float], bool],
    leaves: Callable[[float], bool],
) -> Iterator[Span]:
    """Run a fresh machine over each [start, stop) segment and yield spans in order."""
    machine = HysteresisMachine(enters, leaves)
    for lo, hi in segments:
        machine.reset()
        for position in range(lo, hi):
            span = machine.step(position, float(values[position]))
            if span is not None:
                yield span
        span = machine.finish(hi - 1)
        if span is not None:
            yield span
