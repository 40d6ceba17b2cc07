"""Seeded synthetic traces with known blinks."""

from blinklab.synthgen.generator import dip_shape, generate
from blinklab.synthgen.spec import SyntheticSpec

__all__ = ["SyntheticSpec", "dip_shape", "generate"]
