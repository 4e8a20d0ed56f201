"""Shared 12-significant-digit numeric formatting for reports and artifacts."""

from __future__ import annotations


def fmt(x: float) -> str:
    """Format one float with 12 significant digits."""
    return f"{float(x):.12g}"


def sig12(x: float) -> float:
    """Round a float to 12 significant digits."""
    return float(fmt(x))


def round_floats(obj):
    """Recursively round every float in a JSON-ready structure.

    Dicts and lists are rebuilt, tuples become lists, bools pass through
    untouched (bool is an int subclass, not a float, but being explicit
    costs nothing), everything else is returned as-is.
    """
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        return sig12(obj)
    if isinstance(obj, dict):
        return {k: round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [round_floats(v) for v in obj]
    return obj
