"""Deterministic SVG rendering of chord diagrams.

The 2n positions are equally spaced counter-clockwise on a circle (the
y-axis is flipped so counter-clockwise on screen matches the mathematical
orientation), chords are straight segments, and where chords cross, the
band with the larger label is drawn on top with a white casing, matching
the stacking order of the decoded surface. Output is plain SVG 1.1 text,
byte-identical for identical inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .basket import FlatBasketCode, code_to_diagram


@dataclass(frozen=True)
class RenderSpec:
    """Rendering request for one code."""

    code: FlatBasketCode
    width: int = 400
    height: int = 400
    show_labels: bool = True
    show_shading: bool = True

    def __post_init__(self) -> None:
        if self.width <= 0 or self.height <= 0:
            raise ValueError("canvas dimensions must be positive")


def _fmt(value: float) -> str:
    return f"{value:.3f}"


def render_svg(spec: RenderSpec) -> str:
    """Render the chord diagram of a code as an SVG document."""
    diagram = code_to_diagram(spec.code)
    cx, cy = spec.width / 2, spec.height / 2
    radius = 0.38 * min(spec.width, spec.height)

    def point(position: int) -> tuple[float, float]:
        angle = 2 * math.pi * position / diagram.size
        return (cx + radius * math.cos(angle), cy - radius * math.sin(angle))

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{spec.width}" height="{spec.height}" '
        f'viewBox="0 0 {spec.width} {spec.height}">',
        f"<title>flat basket code {spec.code or '(empty)'}</title>",
        f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(radius)}" '
        'fill="none" stroke="#222222" stroke-width="1.5"/>',
    ]
    if diagram.size:
        # dot marking position 0, where the counter-clockwise reading starts
        x0, y0 = point(0)
        lines.append(
            f'<circle cx="{_fmt(x0)}" cy="{_fmt(y0)}" r="3.000" fill="#222222"/>'
        )
    # ascending label order: later (larger) chords overdraw earlier ones,
    # so the casing gaps show the larger band passing over
    for label in range(1, diagram.n + 1):
        a, b = diagram.chords[label - 1]
        (x1, y1), (x2, y2) = point(a), point(b)
        if spec.show_shading:
            lines.append(
                f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
                'stroke="#ffffff" stroke-width="7"/>'
            )
        hue = (47 * (label - 1)) % 360
        lines.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="hsl({hue},65%,40%)" stroke-width="2"/>'
        )
    if spec.show_labels:
        for position, label in enumerate(spec.code.word):
            angle = 2 * math.pi * position / diagram.size
            lx = cx + (radius + 14) * math.cos(angle)
            ly = cy - (radius + 14) * math.sin(angle)
            lines.append(
                f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" font-size="11" '
                'font-family="monospace" text-anchor="middle" '
                f'dominant-baseline="middle">{label}</text>'
            )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
