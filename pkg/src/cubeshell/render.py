"""Static drawings of arc diagrams: SVG and fixed-width text."""

from __future__ import annotations

from .core import ArcWord, word_to_arcs, word_to_permutation

__all__ = ["render_svg", "render_ascii"]

SPACING = 40
MARGIN = 30
LABEL_GAP = 18


def render_svg(w: ArcWord) -> str:
    """Semicircular arcs over ``2n`` evenly spaced, labelled vertices.

    Output depends only on ``w`` (fixed float formatting, no timestamps).
    """
    arcs = word_to_arcs(w).arcs
    labels = word_to_permutation(w).entries
    count = len(labels)
    tallest = max(r - l for l, r in arcs) * SPACING / 2
    width = 2 * MARGIN + (count - 1) * SPACING
    base = MARGIN + tallest
    height = base + LABEL_GAP + MARGIN

    def x(pos: int) -> float:
        return MARGIN + (pos - 1) * SPACING

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:g}" '
        f'height="{height:g}" viewBox="0 0 {width:g} {height:g}">',
        f"<title>arc diagram of {w}</title>",
        '<g fill="none" stroke="black" stroke-width="1.5">',
    ]
    for k, (left, right) in enumerate(arcs, 1):
        radius = (right - left) * SPACING / 2
        out.append(
            f'<path data-arc="{k}" d="M {x(left):g} {base:g} '
            f'A {radius:g} {radius:g} 0 0 1 {x(right):g} {base:g}"/>'
        )
    out.append("</g>")
    out.append('<g fill="black" font-family="monospace" font-size="14" text-anchor="middle">')
    for pos, label in enumerate(labels, 1):
        out.append(f'<circle cx="{x(pos):g}" cy="{base:g}" r="3"/>')
        out.append(f'<text x="{x(pos):g}" y="{base + LABEL_GAP:g}">{label}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_ascii(w: ArcWord) -> str:
    """One row per arc, widest arc on top; vertical strokes win at crossings.

    >>> print(render_ascii(ArcWord((1,))), end="")
      +---+
      |   |
      1  -1
    """
    arcs = word_to_arcs(w).arcs
    labels = [str(v) for v in word_to_permutation(w).entries]
    cell = max(len(s) for s in labels) + 2
    count = len(labels)
    width = count * cell

    def col(pos: int) -> int:
        return (pos - 1) * cell + cell - 2

    order = sorted(arcs, key=lambda arc: (-(arc[1] - arc[0]), arc[0]))
    rows = [[" "] * width for _ in range(len(order) + 1)]
    for level, (left, right) in enumerate(order):
        row = rows[level]
        for c in range(col(left) + 1, col(right)):
            if row[c] == " ":
                row[c] = "-"
        row[col(left)] = row[col(right)] = "+"
        for below in rows[level + 1:]:
            below[col(left)] = below[col(right)] = "|"
    lines = ["".join(r).rstrip() for r in rows]
    lines.append("".join(s.rjust(cell - 1) + " " for s in labels).rstrip())
    return "\n".join(lines) + "\n"
