"""Blinklab - blink detection and clinical validation from eye-openness traces."""

__version__ = "0.1.0"
