"""Deterministic SVG of a base diagram: one concentric circle per fold turn."""
from __future__ import annotations

from xml.sax.saxutils import escape

from .blf import BLFDescriptor
from .cerf import DEFINITE, Elimination, FoldDiagram, from_descriptor
from .document import DescriptorDocument

STEP = 14
INNER = 16
LINE = 15
LEGEND_WIDTH = 420


def _diagram(obj) -> tuple[FoldDiagram, str]:
    if isinstance(obj, DescriptorDocument):
        return _diagram(obj.payload)
    if isinstance(obj, BLFDescriptor):
        return from_descriptor(obj), f"BLF base diagram, {obj.binding.description}"
    if isinstance(obj, Elimination):
        return obj.final, "fold diagram after definite-fold elimination"
    if isinstance(obj, FoldDiagram):
        return obj, "fold diagram"
    raise TypeError(f"cannot render {type(obj).__name__}")


def render_svg(obj) -> str:
    d, title = _diagram(obj)
    turns = d.turns
    base_r = INNER + STEP * (turns + 1)
    size = 2 * base_r + 40
    cx = cy = size // 2

    legend = [title, ""]
    for i, c in enumerate(d.circles):
        a, b = d.span(i)
        deco = ""
        if c.cusps or c.swallowtails:
            deco = f", cusps {c.cusps}, swallowtails {c.swallowtails}"
        name = c.label or f"circle {i}"
        legend.append(f"turns {a + 1}-{b}: {name} ({c.kind}, winding {c.winding}{deco})")
    legend.append("")
    for r, s in enumerate(d.regions):
        text = "unspecified" if s is None else s.summary()
        legend.append(f"region {r}: {text}")
    height = max(size, 20 + LINE * (len(legend) + 1))
    width = size + LEGEND_WIDTH

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        '<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" "http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">',
        f'<svg version="1.1" xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<title>{escape(title)}</title>",
        f'<circle class="base" cx="{cx}" cy="{cy}" r="{base_r}" fill="#f4f4f0" stroke="#000000" stroke-width="1"/>',
    ]
    t = 0
    for i, c in enumerate(d.circles):
        dash = ' stroke-dasharray="4,3"' if c.kind == DEFINITE else ""
        out.append(f'<g class="fold {c.kind}" id="circle-{i}">')
        for _ in range(c.winding):
            t += 1
            r = INNER + STEP * t
            out.append(f'<circle class="turn" cx="{cx}" cy="{cy}" r="{r}" fill="none" stroke="#1f3a93" '
                       f'stroke-width="1.5"{dash}/>')
        out.append("</g>")
    # region indices along the positive x ray
    for r in range(len(d.regions)):
        x = cx + INNER + STEP * r + STEP // 2 - (STEP if r == 0 else 0)
        out.append(f'<text x="{x}" y="{cy - 3}" font-size="8" text-anchor="middle">{r}</text>')
    out.append(f'<circle cx="{cx}" cy="{cy}" r="2" fill="#000000"/>')
    for k, line in enumerate(legend):
        if line:
            out.append(f'<text x="{size + 10}" y="{20 + LINE * k}" font-family="monospace" '
                       f'font-size="11">{escape(line)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
