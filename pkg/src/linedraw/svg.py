from __future__ import annotations

from fractions import Fraction
from typing import Sequence
from xml.sax.saxutils import escape

from .core import Drawing

WIDTH = 800
HEIGHT = 140
MARGIN = 50


def number_line_svg(d: Drawing, labels: Sequence[str], title: str = "") -> str:
    """Static SVG 1.1 number line with one labelled tick per vertex, distances to scale."""
    xs = d.coords
    lo, hi = min(xs.values()), max(xs.values())
    span = hi - lo or Fraction(1)
    usable = WIDTH - 2 * MARGIN
    axis_y = HEIGHT // 2 + 10

    def px(x):
        return MARGIN + float((x - lo) / span) * usable

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]
    if title:
        parts.append(f'<text x="{WIDTH // 2}" y="20" text-anchor="middle">{escape(title)}</text>')
    parts.append(f'<line x1="{MARGIN - 20}" y1="{axis_y}" x2="{WIDTH - MARGIN + 20}" y2="{axis_y}" '
                 'stroke="black" stroke-width="1.5"/>')
    for v in sorted(xs, key=xs.__getitem__):
        x = px(xs[v])
        parts.append(f'<g class="vertex">'
                     f'<line x1="{x:.2f}" y1="{axis_y - 8}" x2="{x:.2f}" y2="{axis_y + 8}" stroke="black"/>'
                     f'<circle cx="{x:.2f}" cy="{axis_y}" r="3" fill="steelblue"/>'
                     f'<text x="{x:.2f}" y="{axis_y - 14}" text-anchor="middle">{escape(labels[v])}</text>'
                     f'<text x="{x:.2f}" y="{axis_y + 24}" text-anchor="middle" fill="gray">{xs[v]}</text>'
                     f'</g>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
