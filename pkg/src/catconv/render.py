"""Static SVG pictures of the decompositions and the counting grid.

Output is plain SVG 1.1 built with ElementTree. Nothing depends on time or
hash order, so a given input always renders to the same bytes.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET

from . import bijections as bij
from .errors import DomainError
from .paths import Path, Sign, x_intercepts
from .triangle import forbidden, grid

UNIT = 24
MARGIN = 32
PALETTE = ("#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf")
GRID_COLOR = "#dddddd"
AXIS_COLOR = "#555555"
BASE_COLOR = "#bbbbbb"


def _root(width: int, height: int) -> ET.Element:
    return ET.Element(
        "svg",
        xmlns="http://www.w3.org/2000/svg",
        version="1.1",
        width=str(width),
        height=str(height),
        viewBox=f"0 0 {width} {height}",
    )


def _tostring(root: ET.Element) -> str:
    ET.indent(root)
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(root, encoding="unicode") + "\n"


def _points(pts) -> str:
    return " ".join(f"{x},{y}" for x, y in pts)


LINE = 16


class _Panel:
    """One path drawn on its own grid, below a title, above a legend."""

    def __init__(self, parent, heights: list[int], top: int, title: str):
        self.heights = heights
        self.hi = max(max(heights), 1)
        self.lo = min(min(heights), -1)
        self.g = ET.SubElement(parent, "g")
        ET.SubElement(self.g, "text", x=str(MARGIN), y=str(top + 12), **{"font-size": "13", "font-family": "monospace"}).text = title
        self.top = top + 28
        length = len(heights) - 1
        grid_g = ET.SubElement(self.g, "g", stroke=GRID_COLOR, **{"stroke-width": "1"})
        for t in range(length + 1):
            ET.SubElement(grid_g, "line", x1=str(self.x(t)), y1=str(self.y(self.hi)), x2=str(self.x(t)), y2=str(self.y(self.lo)))
        for h in range(self.lo, self.hi + 1):
            ET.SubElement(grid_g, "line", x1=str(self.x(0)), y1=str(self.y(h)), x2=str(self.x(length)), y2=str(self.y(h)))
        ET.SubElement(self.g, "line", x1=str(self.x(0)), y1=str(self.y(0)), x2=str(self.x(length)), y2=str(self.y(0)), stroke=AXIS_COLOR, **{"stroke-width": "2"})
        # x-intercept numbers sit under the grid, the legend under those
        self.bottom = self.y(self.lo) + 20
        self.legend_lines = 0

    def x(self, t: int) -> int:
        return MARGIN + t * UNIT

    def y(self, h: int) -> int:
        return self.top + (self.hi - h) * UNIT

    def polyline(self, start: int, end: int, color: str, width: int):
        pts = [(self.x(t), self.y(self.heights[t])) for t in range(start, end + 1)]
        ET.SubElement(self.g, "polyline", points=_points(pts), fill="none", stroke=color, **{"stroke-width": str(width), "stroke-linejoin": "round"})

    def dot(self, t: int, color: str):
        ET.SubElement(self.g, "circle", cx=str(self.x(t)), cy=str(self.y(self.heights[t])), r="5", fill=color)

    def intercepts(self, positions):
        marks = ET.SubElement(self.g, "g", fill=AXIS_COLOR)
        for t in positions:
            ET.SubElement(marks, "circle", cx=str(self.x(t)), cy=str(self.y(0)), r="4")
            ET.SubElement(marks, "text", x=str(self.x(t) - 4), y=str(self.y(self.lo) + 16), **{"font-size": "10", "font-family": "monospace"}).text = str(t)

    def legend(self, text: str, color: str):
        self.legend_lines += 1
        ET.SubElement(self.g, "text", x=str(MARGIN), y=str(self.bottom + self.legend_lines * LINE), fill=color, **{"font-size": "12", "font-family": "monospace"}).text = text

    @property
    def end(self) -> int:
        return self.bottom + self.legend_lines * LINE + 8


def _text_width(text: str) -> int:
    # monospace at 13px is about 8px per character
    return 2 * MARGIN + 8 * len(text)


def _finish(root: ET.Element, width: int, height: int) -> str:
    root.set("width", str(width))
    root.set("height", str(height))
    root.set("viewBox", f"0 0 {width} {height}")
    return _tostring(root)


def _render_chi(path: Path) -> str:
    seq = bij.chi(path)
    root = _root(0, 0)
    title = f"chi({path.steps or '()'})"
    panel = _Panel(root, path.heights(), MARGIN // 2, title)
    cuts = x_intercepts(path)
    texts = [title]
    for i, item in enumerate(seq):
        color = PALETTE[i % len(PALETTE)]
        panel.polyline(cuts[i], cuts[i + 1], color, 3)
        where = "above" if item.sign is Sign.PLUS else "below"
        line = f"{i + 1}. {item}  ({where} the axis, {cuts[i]}..{cuts[i + 1]})"
        panel.legend(line, color)
        texts.append(line)
    panel.intercepts(cuts)
    width = max(2 * MARGIN + max(len(path), 1) * UNIT, *map(_text_width, texts))
    return _finish(root, width, panel.end + MARGIN // 2)


def _render_psi(path: Path) -> str:
    steps = bij.psi_with_provenance(path)
    seq = bij.SignedSeq(tuple(s.item for s in steps))
    image = bij.chi_inv(seq)
    root = _root(0, 0)
    title = f"psi({path.steps or '()'})"
    src = _Panel(root, path.heights(), MARGIN // 2, title)
    src.polyline(0, len(path), BASE_COLOR, 2)
    texts = [title]
    for i, step in enumerate(steps):
        color = PALETTE[i % len(PALETTE)]
        if step.end > step.start:
            src.polyline(step.start, step.end, color, 3)
        else:
            src.dot(step.start, color)
        side = "left part" if step.side == "L" else "right part"
        line = f"{i + 1}. {step.item}  ({side}, {step.start}..{step.end})"
        src.legend(line, color)
        texts.append(line)
    img_title = f"image {image.steps or '()'}"
    img = _Panel(root, image.heights(), src.end + MARGIN // 2, img_title)
    cuts = x_intercepts(image)
    for i in range(len(seq)):
        img.polyline(cuts[i], cuts[i + 1], PALETTE[i % len(PALETTE)], 3)
    img.intercepts(cuts)
    texts.append(img_title)
    width = max(2 * MARGIN + max(len(path), 1) * UNIT, *map(_text_width, texts))
    return _finish(root, width, img.end + MARGIN // 2)


def render_decomposition(path: Path, map_name: str = "chi") -> str:
    """SVG of ``path`` split by ``chi`` or ``psi``; items get distinct colors."""
    if map_name == "chi":
        return _render_chi(path)
    if map_name == "psi":
        return _render_psi(path)
    raise DomainError("render supports maps chi and psi", map_name)


def render_triangle(N: int, omit_forbidden: bool = False) -> str:
    """Node-and-label picture of the even-zeroed counting grid through column 4N.

    Forbidden nodes (on the axis at a column not divisible by 4) are struck
    through, or left out entirely with ``omit_forbidden``.
    """
    g = grid(4 * N)
    labels = g.to_json()["rows"]
    step = 2 * UNIT
    width = 2 * MARGIN + max(g.max_t, 1) * step
    height = 2 * MARGIN + max(2 * g.max_t, 2) * UNIT
    root = _root(width, height)
    mid = MARGIN + max(g.max_t, 1) * UNIT

    def pos(t, h):
        return MARGIN + t * step, mid - h * UNIT

    edges = ET.SubElement(root, "g", stroke=GRID_COLOR, **{"stroke-width": "1"})
    for t, h in g.nodes():
        if t == 0 or (omit_forbidden and forbidden(t, h)):
            continue
        for dh in (-1, 1):
            ph = h + dh
            if abs(ph) <= t - 1 and not (omit_forbidden and forbidden(t - 1, ph)):
                x1, y1 = pos(t - 1, ph)
                x2, y2 = pos(t, h)
                ET.SubElement(edges, "line", x1=str(x1), y1=str(y1), x2=str(x2), y2=str(y2))
    nodes = ET.SubElement(root, "g", **{"font-size": "10", "font-family": "monospace", "text-anchor": "middle"})
    for t, h in g.nodes():
        bad = forbidden(t, h)
        if bad and omit_forbidden:
            continue
        x, y = pos(t, h)
        ET.SubElement(nodes, "circle", cx=str(x), cy=str(y), r="9", fill="#ffffff", stroke=AXIS_COLOR)
        ET.SubElement(nodes, "text", x=str(x), y=str(y - 12)).text = labels[t]["labels"][str(h)]
        if bad:
            ET.SubElement(nodes, "line", x1=str(x - 9), y1=str(y + 9), x2=str(x + 9), y2=str(y - 9), stroke="#d62728", **{"stroke-width": "2"})
    return _tostring(root)
