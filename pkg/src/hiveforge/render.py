"""SVG emission for O-blades and metric honeycombs.

Output is deterministic: identical (filling, spec) pairs produce
byte-identical documents.  Honeycomb coordinates are exact integer
pairs over the 60-degree dual basis until serialization.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import math

from .errors import DomainError
from .oblade import ObladeFilling, honeycomb_dual

_SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class RenderSpec:
    kind: str = "oblade"  # oblade | honeycomb
    scale: Fraction = Fraction(40)
    show_labels: bool = True
    highlight_zero_edges: bool = False

    def __post_init__(self):
        if self.kind not in ("oblade", "honeycomb"):
            raise DomainError(f"unknown render kind {self.kind!r}")
        if self.scale <= 0:
            raise DomainError("scale must be positive")


def _fmt(v: float) -> str:
    return f"{v:.3f}"


def _svg_document(elements, width, height) -> str:
    head = (
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">'
    )
    return "\n".join([head, *elements, "</svg>"]) + "\n"


def _line(x1, y1, x2, y2, stroke, width="1.5", dash=None) -> str:
    d = f' stroke-dasharray="{dash}"' if dash else ""
    return (
        f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
        f'stroke="{stroke}" stroke-width="{width}"{d} />'
    )


def _text(x, y, s, size=11, color="#000000", anchor="middle") -> str:
    return (
        f'<text x="{_fmt(x)}" y="{_fmt(y)}" font-size="{size}" '
        f'font-family="Helvetica" text-anchor="{anchor}" fill="{color}">{s}</text>'
    )


def render_oblade(filling: ObladeFilling, spec: RenderSpec) -> str:
    """Triangle pictograph with labeled inner edges and side Dynkin labels."""
    shape = filling.shape
    n = shape.n
    scale = float(spec.scale)
    margin = 1.2 * scale

    def xy(point):
        x, y, z = point
        # corner A on top, B lower right, C lower left
        px = (y - z) / 2.0
        py = -x * _SQRT3 / 2.0
        return (margin + (px + n / 2.0) * scale, margin + (py + n * _SQRT3 / 2.0) * scale)

    elements = []
    corners = {"A": (n, 0, 0), "B": (0, n, 0), "C": (0, 0, n)}
    for a, b in (("A", "B"), ("B", "C"), ("A", "C")):
        x1, y1 = xy(corners[a])
        x2, y2 = xy(corners[b])
        elements.append(_line(x1, y1, x2, y2, "#bbbbbb", width="1.0"))

    for e in shape.edges:
        p, q = e.ends
        lab = filling.labels[e.index]
        x1, y1 = xy(p)
        x2, y2 = xy(q)
        if lab == 0 and spec.highlight_zero_edges:
            elements.append(_line(x1, y1, x2, y2, "#cc2222", width="1.2", dash="4 3"))
        else:
            elements.append(_line(x1, y1, x2, y2, "#333333"))
        if spec.show_labels:
            mx, my = (x1 + x2) / 2.0, (y1 + y2) / 2.0
            color = "#cc2222" if lab == 0 and spec.highlight_zero_edges else "#1144aa"
            elements.append(_text(mx, my - 3.0, str(lab), size=10, color=color))

    if spec.show_labels:
        side = {"lambda": filling.lam, "mu": filling.mu, "nu": filling.nu}
        # offsets push side labels outside the triangle
        offsets = {"lambda": (0.45, -0.26), "mu": (0.0, 0.52), "nu": (-0.45, -0.26)}
        vertex = {
            "lambda": lambda k: (n - k, k, 0),
            "mu": lambda k: (0, n - k, k),
            "nu": lambda k: (n - k, 0, k),
        }
        for name in ("lambda", "mu", "nu"):
            dx, dy = offsets[name]
            for k in range(1, n):
                x, y = xy(vertex[name](k))
                elements.append(
                    _text(x + dx * scale, y + dy * scale, str(side[name][k - 1]), size=12)
                )

    size = (n + 1.2) * scale + 2 * margin
    return _svg_document(elements, size, size)


def render_honeycomb(filling: ObladeFilling, spec: RenderSpec) -> str:
    """Planar dual with every edge drawn at length scale * label."""
    geometry = honeycomb_dual(filling)
    scale = float(spec.scale) / 4.0

    def xy(pos):
        c1, c2 = pos
        return (c2 * (-_SQRT3 / 2.0) * scale, -(c1 + c2 / 2.0) * scale)

    pts = [xy(p) for p in geometry.positions]
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    margin = 20.0
    ox = margin - min(xs)
    oy = margin - min(ys)

    elements = []
    degenerate = all(p == geometry.positions[0] for p in geometry.positions)
    if degenerate:
        elements.append("<!-- warning: fully degenerate honeycomb, all cells collapsed -->")
    for t1, t2, length, _family in geometry.edges:
        x1, y1 = pts[t1]
        x2, y2 = pts[t2]
        if length == 0:
            if spec.highlight_zero_edges:
                elements.append(
                    f'<circle cx="{_fmt(x1 + ox)}" cy="{_fmt(y1 + oy)}" r="2.2" fill="#cc2222" />'
                )
            continue
        elements.append(_line(x1 + ox, y1 + oy, x2 + ox, y2 + oy, "#333333"))
        if spec.show_labels:
            mx, my = (x1 + x2) / 2.0 + ox, (y1 + y2) / 2.0 + oy
            elements.append(_text(mx, my - 3.0, str(length), size=10, color="#1144aa"))

    width = max(xs) - min(xs) + 2 * margin
    height = max(ys) - min(ys) + 2 * margin
    return _svg_document(elements, max(width, 2 * margin), max(height, 2 * margin))


def render(filling: ObladeFilling, spec: RenderSpec) -> str:
    if spec.kind == "honeycomb":
        return render_honeycomb(filling, spec)
    return render_oblade(filling, spec)
