"""Tests for blinklab."""
