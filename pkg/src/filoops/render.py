"""SVG pictures of chord diagrams.

The 2n endpoints sit on a circle in word order, starting at the top and
running clockwise; each chord is a straight segment.  On a framed
diagram the infinity endpoint gets a filled disc and the zero endpoint
an open one; the root chord, when set, is drawn thicker and in colour.
"""

from __future__ import annotations

import math
from typing import List

from .chords import ChordDiagram

__all__ = ["diagram_to_svg"]

_CHORD = "#2c3e50"
_ROOT = "#c0392b"
_MARK = "#555555"


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def diagram_to_svg(C: ChordDiagram, size: int = 360) -> str:
    """Standalone SVG document for the diagram.

    Deterministic for a fixed diagram and size, so renders can be diffed.
    The source word is embedded as the document title.
    """
    m = len(C.slots)
    cx = cy = size / 2.0
    r = 0.39 * size

    def point(i: int, radius: float) -> tuple:
        angle = -math.pi / 2.0 + 2.0 * math.pi * i / m
        return cx + radius * math.cos(angle), cy + radius * math.sin(angle)

    out: List[str] = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f"  <title>{C.to_word() if m else ''}</title>",
        f'  <circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(r)}" '
        f'fill="none" stroke="#999999" stroke-width="1"/>',
    ]
    if m:
        for x in C.chords:
            p, q = C.positions(x)
            x1, y1 = point(p, r)
            x2, y2 = point(q, r)
            colour = _ROOT if x == C.root else _CHORD
            width = "2.5" if x == C.root else "1.5"
            out.append(
                f'  <line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
                f'stroke="{colour}" stroke-width="{width}"/>'
            )
        for i, x in enumerate(C.slots):
            px, py = point(i, r)
            if C.framing is None:
                out.append(
                    f'  <circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="2.00" fill="{_MARK}"/>'
                )
            elif C.framing[i]:
                out.append(
                    f'  <circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="3.50" fill="{_MARK}"/>'
                )
            else:
                out.append(
                    f'  <circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="3.50" '
                    f'fill="white" stroke="{_MARK}" stroke-width="1.2"/>'
                )
            tx, ty = point(i, r + 16)
            letter = x.upper() if C.framing is not None and C.framing[i] else x
            out.append(
                f'  <text x="{_fmt(tx)}" y="{_fmt(ty)}" font-family="monospace" '
                f'font-size="12" text-anchor="middle" dominant-baseline="central">'
                f"{letter}</text>"
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
