"""ASCII and SVG pictures of regions, tilings and height functions."""

from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

from .height import HeightFunction, format_heights
from .region import Cell, Lattice, Region, cell_vertices, embed
from .tiling import Tiling

_BOX = {
    # (up, down, left, right)
    (0, 0, 0, 0): " ",
    (1, 1, 0, 0): "│", (1, 0, 0, 0): "│", (0, 1, 0, 0): "│",
    (0, 0, 1, 1): "─", (0, 0, 1, 0): "─", (0, 0, 0, 1): "─",
    (0, 1, 0, 1): "┌", (0, 1, 1, 0): "┐", (1, 0, 0, 1): "└", (1, 0, 1, 0): "┘",
    (1, 1, 0, 1): "├", (1, 1, 1, 0): "┤", (0, 1, 1, 1): "┬", (1, 0, 1, 1): "┴",
    (1, 1, 1, 1): "┼",
}

_DOMINO_FILL = {"h": "#e8b04a", "v": "#5b8fc9"}
_LOZENGE_FILL = {(0, 1): "#f2f2f2", (1, -1): "#9a9a9a", (1, 0): "#5a5a5a"}


@dataclass(frozen=True)
class RenderStyle:
    format: str = "ascii"
    scale: float = 24
    show_heights: bool = False
    show_colors: bool = False

    def __post_init__(self) -> None:
        if self.scale <= 0:
            raise ValueError("scale must be positive")
        if self.format not in ("ascii", "svg"):
            raise ValueError(f"unknown format {self.format!r}")


def _walls(region: Region, tiling: Tiling | None):
    """Predicate: is the lattice edge (u, v) drawn?"""
    covered = tiling.covered_edges if tiling is not None else frozenset()

    def drawn(u, v) -> bool:
        e = tuple(sorted((u, v)))
        return e in region.edge_cells and e not in covered

    return drawn


def render_ascii(
    region: Region,
    tiling: Tiling | None = None,
    heights: HeightFunction | None = None,
    style: RenderStyle = RenderStyle(),
) -> str:
    if region.lattice is Lattice.SQUARE:
        text = _ascii_square(region, tiling, style)
    else:
        text = _ascii_triangle(region, tiling)
    if style.show_heights and heights is not None:
        text += "heights:\n" + format_heights(heights)
    return text


def _ascii_square(region: Region, tiling: Tiling | None, style: RenderStyle) -> str:
    drawn = _walls(region, tiling)
    xs = [c.x for c in region.cells]
    ys = [c.y for c in region.cells]
    x0, x1, y0, y1 = min(xs), max(xs) + 1, min(ys), max(ys) + 1
    lines = []
    for y in range(y1, y0 - 1, -1):
        row = []
        for x in range(x0, x1 + 1):
            arms = (
                int(drawn((x, y), (x, y + 1))),
                int(drawn((x, y), (x, y - 1))),
                int(drawn((x, y), (x - 1, y))),
                int(drawn((x, y), (x + 1, y))),
            )
            row.append(_BOX[arms])
            if x < x1:
                row.append("───" if drawn((x, y), (x + 1, y)) else "   ")
        lines.append("".join(row).rstrip())
        if y == y0:
            break
        row = []
        for x in range(x0, x1 + 1):
            row.append("│" if drawn((x, y - 1), (x, y)) else " ")
            if x < x1:
                cell = Cell(x, y - 1)
                fill = " "
                if style.show_colors and cell in region.cells and region.is_black(cell):
                    fill = "░"
                row.append(fill * 3)
        lines.append("".join(row).rstrip())
    return "\n".join(lines) + "\n"


def _ascii_triangle(region: Region, tiling: Tiling | None) -> str:
    drawn = _walls(region, tiling)
    marks: dict[tuple[int, int], str] = {}  # (col, row) -> char, row grows upward
    flats = []
    for (u, v) in region.edge_cells:
        if not drawn(u, v):
            continue
        (ax, ay), (bx, by) = u, v
        if ay == by:
            x, y = min(ax, bx), ay
            flats.append((x, y))
            for dc in (1, 2):
                marks[(4 * x + 2 * y + dc, 2 * y)] = "_"
        elif ax == bx:
            x, y = ax, min(ay, by)
            for t in (0, 1):
                marks[(4 * x + 2 * y + t, 2 * y + t)] = "/"
        else:
            x, y = min(ax, bx), min(ay, by)  # edge (x+1, y) - (x, y+1)
            for t in (0, 1):
                marks[(4 * (x + 1) + 2 * y - 1 - t, 2 * y + t)] = "\\"
    for x, y in flats:
        for dc in (0, 3):
            marks.setdefault((4 * x + 2 * y + dc, 2 * y), "_")
    cols = [c for c, _ in marks]
    rows = [r for _, r in marks]
    c0 = min(cols)
    lines = []
    for r in range(max(rows), min(rows) - 1, -1):
        line = "".join(marks.get((c, r), " ") for c in range(c0, max(cols) + 1))
        lines.append(line.rstrip())
    return "\n".join(lines) + "\n"


def _tile_outline(lattice: Lattice, cells: tuple[Cell, ...]) -> list[tuple[int, int]]:
    directed = set()
    for c in cells:
        vs = cell_vertices(lattice, c)
        for i in range(len(vs)):
            directed.add((vs[i], vs[(i + 1) % len(vs)]))
    outline = {(s, t) for s, t in directed if (t, s) not in directed}
    nxt = dict(outline)
    start = min(nxt, key=lambda v: (v[1], v[0]))
    poly = [start]
    while nxt[poly[-1]] != start:
        poly.append(nxt[poly[-1]])
    # drop straight-through vertices (the midpoint of a domino's long side)
    out = []
    for i, p in enumerate(poly):
        a, b = poly[i - 1], poly[(i + 1) % len(poly)]
        if (p[0] - a[0]) * (b[1] - p[1]) - (p[1] - a[1]) * (b[0] - p[0]) != 0:
            out.append(p)
    return out


def render_svg(
    region: Region,
    tiling: Tiling | None = None,
    heights: HeightFunction | None = None,
    style: RenderStyle = RenderStyle(format="svg"),
) -> str:
    """Standalone SVG document; identical inputs give byte-identical output."""
    lat = region.lattice
    s = style.scale
    pts = [embed(lat, v) for v in region.vertices]
    xmin = min(p[0] for p in pts)
    ymax = max(p[1] for p in pts)
    margin = s / 2
    width = (max(p[0] for p in pts) - xmin) * s + 2 * margin
    height = (ymax - min(p[1] for p in pts)) * s + 2 * margin

    def xy(v) -> tuple[float, float]:
        X, Y = embed(lat, v)
        return ((X - xmin) * s + margin, (ymax - Y) * s + margin)

    def points(poly) -> str:
        return " ".join(f"{a:.2f},{b:.2f}" for a, b in map(xy, poly))

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.2f}" height="{height:.2f}" '
        f'viewBox="0 0 {width:.2f} {height:.2f}">',
        '<g stroke="#222222" stroke-width="1.5" stroke-linejoin="round">',
    ]
    if tiling is None or style.show_colors:
        for c in region.sorted_cells:
            fill = "#ffffff"
            if style.show_colors:
                fill = "#303030" if region.is_black(c) else "#ffffff"
            out.append(
                f'<polygon class="cell" points="{points(cell_vertices(lat, c))}" fill="{fill}"/>'
            )
    if tiling is not None:
        opacity = ' fill-opacity="0.6"' if style.show_colors else ""
        for b, w in tiling.sorted_tiles:
            if lat is Lattice.SQUARE:
                fill = _DOMINO_FILL["h" if b.y == w.y else "v"]
            else:
                (u, v) = tuple(sorted(set(cell_vertices(lat, b)) & set(cell_vertices(lat, w))))
                fill = _LOZENGE_FILL[(v[0] - u[0], v[1] - u[1])]
            poly = _tile_outline(lat, (b, w))
            out.append(f'<polygon class="tile" points="{points(poly)}" fill="{fill}"{opacity}/>')
    out.append("</g>")
    if style.show_heights and heights is not None:
        size = max(s / 2.5, 6)
        out.append(
            f'<g font-family="monospace" font-size="{size:.1f}" text-anchor="middle" fill="#c0392b">'
        )
        for v in region.vertices:
            a, b = xy(v)
            out.append(f'<text x="{a:.2f}" y="{b - 2:.2f}">{escape(str(heights.values[v]))}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(
    region: Region,
    tiling: Tiling | None = None,
    heights: HeightFunction | None = None,
    style: RenderStyle = RenderStyle(),
) -> str:
    if style.format == "svg":
        return render_svg(region, tiling, heights, style)
    return render_ascii(region, tiling, heights, style)
