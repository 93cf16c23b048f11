"""Angle literals shared by the CLI and the game-file parser."""

import math

_NAMED = {"pi": math.pi, "pi/2": math.pi / 2, "pi/4": math.pi / 4}


def parse_angle(text: str) -> float:
    """Parse a radian literal: a decimal number or one of ``pi``, ``pi/2``, ``pi/4``."""
    token = text.strip().lower()
    if token in _NAMED:
        return _NAMED[token]
    try:
        return float(token)
    except ValueError:
        raise ValueError(
            f"not an angle: {text!r} (expected a decimal or pi, pi/2, pi/4)"
        ) from None


def format_real(value: float) -> str:
    """Render a real with 12 significant digits; locale-independent."""
    return f"{value:.12g}"
