"""Hand-rolled SVG scatter plot of a frontier table.

Matplotlib embeds run-dependent ids in its SVG output; the plot here is
assembled from strings so identical tables give identical bytes.
Filled dots mark the conjectured minimal dimension ceil(j/k); rings of
increasing radius mark the smallest dimension each sufficiency
criterion certifies.
"""

from __future__ import annotations

from .verdicts import FrontierTable

_RINGS = (
    # attribute name on FrontierRow, ring radius, stroke colour, legend label
    ("d_thm1", 5.5, "#d62728", "power survives truncation"),
    ("d_thm25i", 7.5, "#1f77b4", "equal blocks, d power of two"),
    ("d_thm25ii", 9.5, "#2ca02c", "anchored blocks, k odd"),
)

_CELL = 22       # pixels per unit on both axes
_MARGIN = 58
_DOT = 3.5


def frontier_svg(table: FrontierTable) -> str:
    d_values = [r.d_conjecture for r in table.rows]
    for r in table.rows:
        for dd in (r.d_thm1, r.d_thm25i, r.d_thm25ii):
            if dd is not None:
                d_values.append(dd)
    d_max = max(d_values)
    width = _MARGIN * 2 + _CELL * (table.j_max - 1)
    height = _MARGIN * 2 + _CELL * d_max + 40  # room for the legend

    def x(j: int) -> float:
        return _MARGIN + _CELL * (j - 1)

    def y(d: int) -> float:
        return _MARGIN + _CELL * (d_max - d)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<text x="{width / 2:.1f}" y="{height - 8:.1f}" font-size="13" '
        f'text-anchor="middle" font-family="sans-serif">'
        f'number of measures j (k = {table.k})</text>',
        f'<text x="14" y="{_MARGIN + _CELL * d_max / 2:.1f}" font-size="13" '
        f'text-anchor="middle" font-family="sans-serif" '
        f'transform="rotate(-90 14 {_MARGIN + _CELL * d_max / 2:.1f})">'
        f'dimension d</text>',
    ]

    # light grid with axis tick labels
    for j in range(1, table.j_max + 1):
        if j == 1 or j % 5 == 0:
            parts.append(f'<line x1="{x(j):.1f}" y1="{y(d_max):.1f}" '
                         f'x2="{x(j):.1f}" y2="{y(0):.1f}" '
                         f'stroke="#dddddd" stroke-width="1"/>')
            parts.append(f'<text x="{x(j):.1f}" y="{y(0) + 18:.1f}" '
                         f'font-size="11" text-anchor="middle" '
                         f'font-family="sans-serif">{j}</text>')
    for d in range(0, d_max + 1):
        if d % 2 == 0:
            parts.append(f'<line x1="{x(1):.1f}" y1="{y(d):.1f}" '
                         f'x2="{x(table.j_max):.1f}" y2="{y(d):.1f}" '
                         f'stroke="#dddddd" stroke-width="1"/>')
            parts.append(f'<text x="{x(1) - 10:.1f}" y="{y(d) + 4:.1f}" '
                         f'font-size="11" text-anchor="end" '
                         f'font-family="sans-serif">{d}</text>')

    for attr, radius, colour, _ in _RINGS:
        for r in table.rows:
            dd = getattr(r, attr)
            if dd is not None:
                parts.append(f'<circle cx="{x(r.j):.1f}" cy="{y(dd):.1f}" '
                             f'r="{radius}" fill="none" stroke="{colour}" '
                             f'stroke-width="1.6"/>')
    for r in table.rows:
        parts.append(f'<circle cx="{x(r.j):.1f}" cy="{y(r.d_conjecture):.1f}" '
                     f'r="{_DOT}" fill="black"/>')

    lx, ly = float(_MARGIN), height - 26.0
    parts.append(f'<circle cx="{lx:.1f}" cy="{ly:.1f}" r="{_DOT}" fill="black"/>')
    parts.append(f'<text x="{lx + 8:.1f}" y="{ly + 4:.1f}" font-size="11" '
                 f'font-family="sans-serif">conjectured minimum</text>')
    lx += 170
    for attr, radius, colour, label in _RINGS:
        parts.append(f'<circle cx="{lx:.1f}" cy="{ly:.1f}" r="{radius}" '
                     f'fill="none" stroke="{colour}" stroke-width="1.6"/>')
        parts.append(f'<text x="{lx + radius + 5:.1f}" y="{ly + 4:.1f}" '
                     f'font-size="11" font-family="sans-serif">{label}</text>')
        lx += radius + 16 + 7 * len(label)

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
