"""Deterministic rendering of results: CSV, canonical JSON, SVG bars.

All output is built from repr()-round-tripped floats and fixed layout
arithmetic, so identical inputs yield byte-identical text.
"""

from __future__ import annotations

import hashlib
import json
from typing import Iterable, Sequence

SCHEMA_VERSION = "1"


def format_number(value) -> str:
    if isinstance(value, (int,)) and not isinstance(value, bool):
        return str(value)
    return repr(float(value))


def series_csv(values: Iterable[float]) -> str:
    """Two-column CSV of a series, header `index,value`."""
    lines = ["index,value"]
    for index, value in enumerate(values):
        lines.append(f"{index},{format_number(value)}")
    return "\n".join(lines) + "\n"


def canonical_json(payload) -> str:
    """Compact, key-sorted JSON; identical payloads give identical bytes."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def signal_digest(values: Iterable[float]) -> str:
    """SHA-256 of the repr-canonical signal text."""
    text = ",".join(repr(float(v)) for v in values)
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def bar_chart_svg(values: Sequence[float], labels: Sequence[str], title: str,
                  width: int = 640, height: int = 360) -> str:
    """Self-contained SVG bar chart with a zero baseline."""
    left, right, top, bottom = 56, 16, 44, 40
    plot_w = width - left - right
    plot_h = height - top - bottom
    lo = min(0.0, min(values))
    hi = max(0.0, max(values))
    span = (hi - lo) or 1.0

    def y_of(v: float) -> float:
        return top + (hi - v) / span * plot_h

    slot = plot_w / max(len(values), 1)
    bar_w = slot * 0.7
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<text x="{width / 2:.1f}" y="24" text-anchor="middle" '
        f'font-family="sans-serif" font-size="15">{title}</text>',
    ]
    zero_y = y_of(0.0)
    parts.append(
        f'<line x1="{left}" y1="{zero_y:.2f}" x2="{width - right}" y2="{zero_y:.2f}" '
        f'stroke="black" stroke-width="1"/>'
    )
    for tick in (lo, hi):
        ty = y_of(tick)
        parts.append(
            f'<text x="{left - 6}" y="{ty + 4:.2f}" text-anchor="end" '
            f'font-family="sans-serif" font-size="11">{tick:.4g}</text>'
        )
    for i, (value, label) in enumerate(zip(values, labels)):
        x0 = left + i * slot + (slot - bar_w) / 2
        y_val = y_of(float(value))
        bar_top = min(y_val, zero_y)
        bar_h = abs(y_val - zero_y)
        parts.append(
            f'<rect x="{x0:.2f}" y="{bar_top:.2f}" width="{bar_w:.2f}" '
            f'height="{bar_h:.2f}" fill="#4878a8"/>'
        )
        parts.append(
            f'<text x="{x0 + bar_w / 2:.2f}" y="{height - bottom + 16}" '
            f'text-anchor="middle" font-family="sans-serif" font-size="11">{label}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
