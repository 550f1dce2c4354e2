"""Quadriculated and triangulated planar regions.

Square cell ``(x, y)`` is the unit square ``[x, x+1] x [y, y+1]``.  On the
triangular lattice the point ``(x, y)`` sits at ``x*(1, 0) + y*(1/2, sqrt(3)/2)``;
the up-triangle ``(x, y)`` has corners ``(x, y), (x+1, y), (x, y+1)`` and the
down-triangle ``(x, y)`` has corners ``(x+1, y), (x, y+1), (x+1, y+1)``.

Square cells are black when ``x + y`` is even; up-triangles are black and
down-triangles white.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, NamedTuple

from .errors import InvalidCutError, ParseError, RegionError

Vertex = tuple[int, int]
Edge = tuple[Vertex, Vertex]

UP, DOWN = 0, 1


class Lattice(str, enum.Enum):
    SQUARE = "square"
    TRIANGLE = "triangle"


class Color(str, enum.Enum):
    BLACK = "black"
    WHITE = "white"


class Cell(NamedTuple):
    x: int
    y: int
    o: int = 0  # UP or DOWN on the triangular lattice, always 0 on squares

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.y, self.x, self.o)


def vkey(v: Vertex) -> tuple[int, int]:
    return (v[1], v[0])


# unit vertex steps in counterclockwise order
DIRECTIONS = {
    Lattice.SQUARE: ((1, 0), (0, 1), (-1, 0), (0, -1)),
    Lattice.TRIANGLE: ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)),
}


def direction_index(lattice: Lattice, s: Vertex, t: Vertex) -> int:
    return DIRECTIONS[lattice].index((t[0] - s[0], t[1] - s[1]))


def cell_vertices(lattice: Lattice, cell: Cell) -> tuple[Vertex, ...]:
    """Corners of ``cell`` in counterclockwise order."""
    x, y = cell.x, cell.y
    if lattice is Lattice.SQUARE:
        return ((x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1))
    if cell.o == UP:
        return ((x, y), (x + 1, y), (x, y + 1))
    return ((x + 1, y), (x + 1, y + 1), (x, y + 1))


def cell_is_black(lattice: Lattice, cell: Cell) -> bool:
    if lattice is Lattice.SQUARE:
        return (cell.x + cell.y) % 2 == 0
    return cell.o == UP


def lattice_neighbors(lattice: Lattice, cell: Cell) -> tuple[Cell, ...]:
    """Cells sharing a side with ``cell``, counterclockwise by direction."""
    x, y = cell.x, cell.y
    if lattice is Lattice.SQUARE:
        return (Cell(x + 1, y), Cell(x, y + 1), Cell(x - 1, y), Cell(x, y - 1))
    if cell.o == UP:
        return (Cell(x, y, DOWN), Cell(x - 1, y, DOWN), Cell(x, y - 1, DOWN))
    return (Cell(x, y + 1, UP), Cell(x, y, UP), Cell(x + 1, y, UP))


def star(lattice: Lattice, v: Vertex) -> tuple[Cell, ...]:
    """Lattice cells around vertex ``v`` in counterclockwise order."""
    x, y = v
    if lattice is Lattice.SQUARE:
        return (Cell(x, y), Cell(x - 1, y), Cell(x - 1, y - 1), Cell(x, y - 1))
    return (
        Cell(x, y, UP),
        Cell(x - 1, y, DOWN),
        Cell(x - 1, y, UP),
        Cell(x - 1, y - 1, DOWN),
        Cell(x, y - 1, UP),
        Cell(x, y - 1, DOWN),
    )


@lru_cache(maxsize=None)
def left_cell(lattice: Lattice, s: Vertex, t: Vertex) -> Cell:
    """The lattice cell to the left of the directed unit edge ``s -> t``."""
    for c in star(lattice, s):
        vs = cell_vertices(lattice, c)
        i = vs.index(s)
        if vs[(i + 1) % len(vs)] == t:
            return c
    raise ValueError(f"{s} -> {t} is not a lattice edge")


def right_cell(lattice: Lattice, s: Vertex, t: Vertex) -> Cell:
    return left_cell(lattice, t, s)


def shared_edge(lattice: Lattice, a: Cell, b: Cell) -> Edge:
    common = set(cell_vertices(lattice, a)) & set(cell_vertices(lattice, b))
    if len(common) != 2:
        raise ValueError(f"{a} and {b} are not adjacent")
    u, v = sorted(common)
    return (u, v)


def center(lattice: Lattice, cell: Cell) -> tuple[float, float]:
    """Euclidean center of ``cell``."""
    if lattice is Lattice.SQUARE:
        return (cell.x + 0.5, cell.y + 0.5)
    f = 1 / 3 if cell.o == UP else 2 / 3
    return embed(lattice, (cell.x + f, cell.y + f))


def embed(lattice: Lattice, p: tuple[float, float]) -> tuple[float, float]:
    if lattice is Lattice.SQUARE:
        return (float(p[0]), float(p[1]))
    return (p[0] + p[1] / 2, p[1] * 0.8660254037844386)


def _scaled_center(lattice: Lattice, cell: Cell) -> tuple[int, int]:
    # integer lattice-coordinate centers; orientation-preserving, so area signs agree
    if lattice is Lattice.SQUARE:
        return (2 * cell.x + 1, 2 * cell.y + 1)
    f = 1 if cell.o == UP else 2
    return (3 * cell.x + f, 3 * cell.y + f)


def signed_area2(points: Iterable[tuple[float, float]]) -> float:
    pts = list(points)
    return sum(
        pts[i][0] * pts[i - len(pts) + 1][1] - pts[i - len(pts) + 1][0] * pts[i][1]
        for i in range(len(pts))
    )


@dataclass(frozen=True)
class Region:
    """A finite edge-connected set of cells of one lattice."""

    lattice: Lattice
    cells: frozenset[Cell]

    def __post_init__(self) -> None:
        object.__setattr__(self, "lattice", Lattice(self.lattice))
        object.__setattr__(self, "cells", frozenset(Cell(*c) for c in self.cells))
        if not self.cells:
            raise RegionError("empty region")
        for c in self.cells:
            if self.lattice is Lattice.SQUARE and c.o != 0:
                raise RegionError(f"square cell with orientation: {c}")
            if self.lattice is Lattice.TRIANGLE and c.o not in (UP, DOWN):
                raise RegionError(f"bad triangle orientation: {c}")
        start = next(iter(self.cells))
        seen = {start}
        todo = [start]
        while todo:
            c = todo.pop()
            for n in lattice_neighbors(self.lattice, c):
                if n in self.cells and n not in seen:
                    seen.add(n)
                    todo.append(n)
        if len(seen) != len(self.cells):
            raise RegionError("region is not edge-connected")

    @classmethod
    def square(cls, cells: Iterable[tuple[int, int]]) -> Region:
        return cls(Lattice.SQUARE, frozenset(Cell(x, y) for x, y in cells))

    @classmethod
    def triangle(cls, cells: Iterable[tuple[int, int, int]]) -> Region:
        return cls(Lattice.TRIANGLE, frozenset(Cell(x, y, o) for x, y, o in cells))

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, cell: object) -> bool:
        return cell in self.cells

    def __repr__(self) -> str:
        return f"Region({self.lattice.value}, {len(self.cells)} cells)"

    @property
    def tile_name(self) -> str:
        return "domino" if self.lattice is Lattice.SQUARE else "lozenge"

    @cached_property
    def sorted_cells(self) -> tuple[Cell, ...]:
        return tuple(sorted(self.cells, key=lambda c: c.key))

    @cached_property
    def black_cells(self) -> tuple[Cell, ...]:
        return tuple(c for c in self.sorted_cells if cell_is_black(self.lattice, c))

    @cached_property
    def white_cells(self) -> tuple[Cell, ...]:
        return tuple(c for c in self.sorted_cells if not cell_is_black(self.lattice, c))

    @property
    def is_balanced(self) -> bool:
        return len(self.black_cells) == len(self.white_cells)

    def color(self, cell: Cell) -> Color:
        if cell not in self.cells:
            raise RegionError(f"{cell} is not in the region")
        return Color.BLACK if cell_is_black(self.lattice, cell) else Color.WHITE

    def is_black(self, cell: Cell) -> bool:
        return cell_is_black(self.lattice, cell)

    def neighbors(self, cell: Cell) -> tuple[Cell, ...]:
        return tuple(n for n in lattice_neighbors(self.lattice, cell) if n in self.cells)

    @cached_property
    def edge_cells(self) -> dict[Edge, tuple[Cell, ...]]:
        """Every side of every cell, mapped to the one or two cells it bounds."""
        out: dict[Edge, list[Cell]] = {}
        for c in self.sorted_cells:
            vs = cell_vertices(self.lattice, c)
            for i in range(len(vs)):
                e = tuple(sorted((vs[i], vs[i - 1])))
                out.setdefault(e, []).append(c)
        return {e: tuple(cs) for e, cs in out.items()}

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edge_cells, key=lambda e: (vkey(e[0]), vkey(e[1]))))

    @cached_property
    def vertices(self) -> tuple[Vertex, ...]:
        vs = {v for c in self.cells for v in cell_vertices(self.lattice, c)}
        return tuple(sorted(vs, key=vkey))

    @cached_property
    def vertex_neighbors(self) -> dict[Vertex, tuple[Vertex, ...]]:
        out: dict[Vertex, list[Vertex]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            out[u].append(v)
            out[v].append(u)
        return {v: tuple(sorted(ns, key=vkey)) for v, ns in out.items()}

    def is_interior_edge(self, u: Vertex, v: Vertex) -> bool:
        return len(self.edge_cells.get(tuple(sorted((u, v))), ())) == 2

    @cached_property
    def boundary_cycles(self) -> tuple[tuple[Vertex, ...], ...]:
        """Oriented boundary cycles, outer (counterclockwise) first, then holes.

        Every cycle keeps the region on its left.  Where the boundary touches
        itself at a vertex (a pinch) the walk turns as far right as it can,
        staying beside the same empty wedge, so each cycle hugs a single
        complementary component and a hole pinched against the outside still
        counts as a hole.
        """
        lat = self.lattice
        dirs = DIRECTIONS[lat]
        out: dict[Vertex, set[Vertex]] = {}
        for c in self.cells:
            vs = cell_vertices(lat, c)
            for i in range(len(vs)):
                s, t = vs[i], vs[(i + 1) % len(vs)]
                if len(self.edge_cells[tuple(sorted((s, t)))]) == 1:
                    out.setdefault(s, set()).add(t)
        pending = sorted(
            ((s, t) for s, ts in out.items() for t in ts),
            key=lambda e: (vkey(e[0]), vkey(e[1])),
        )
        used: set[tuple[Vertex, Vertex]] = set()
        cycles = []
        for first in pending:
            if first in used:
                continue
            cycle = []
            s, t = first
            while (s, t) not in used:
                used.add((s, t))
                cycle.append(s)
                back = direction_index(lat, t, s)
                for k in range(1, len(dirs)):
                    d = dirs[(back + k) % len(dirs)]
                    nxt = (t[0] + d[0], t[1] + d[1])
                    if nxt in out.get(t, ()):
                        break
                else:  # pragma: no cover - boundary edges always chain
                    raise RegionError("open boundary walk")
                s, t = t, nxt
            cycles.append(tuple(cycle))
        outer = [c for c in cycles if signed_area2(c) > 0]
        holes = [c for c in cycles if signed_area2(c) < 0]
        if len(outer) != 1 or len(outer) + len(holes) != len(cycles):
            raise RegionError("could not identify the outer boundary")
        holes.sort(key=lambda c: min(vkey(v) for v in c))
        return (outer[0], *holes)

    @cached_property
    def boundary_components(self) -> dict[Vertex, frozenset[int]]:
        """Boundary vertex -> indices of the boundary cycles through it."""
        comp: dict[Vertex, set[int]] = {}
        for i, cyc in enumerate(self.boundary_cycles):
            for v in cyc:
                comp.setdefault(v, set()).add(i)
        return {v: frozenset(s) for v, s in comp.items()}

    def is_boundary_vertex(self, v: Vertex) -> bool:
        return v in self.boundary_components

    @property
    def hole_count(self) -> int:
        return len(self.boundary_cycles) - 1

    @property
    def is_simply_connected(self) -> bool:
        return self.hole_count == 0

    @cached_property
    def base_vertex(self) -> Vertex:
        """Lowest (then leftmost) vertex; always on the outer boundary."""
        return self.vertices[0]

    def translated(self, dx: int, dy: int) -> Region:
        return Region(self.lattice, frozenset(Cell(c.x + dx, c.y + dy, c.o) for c in self.cells))

    def normalized(self) -> Region:
        """Translate so the smallest x and y cell coordinates are 0."""
        mx = min(c.x for c in self.cells)
        my = min(c.y for c in self.cells)
        return self.translated(-mx, -my)

    def adjacency(self) -> BipartiteGraph:
        return adjacency(self)


def color(region: Region, cell: Cell) -> Color:
    return region.color(cell)


def boundary_cycles(region: Region) -> list[tuple[Vertex, ...]]:
    return list(region.boundary_cycles)


# --- bipartite cell-adjacency graph ------------------------------------------


@dataclass(frozen=True)
class BipartiteGraph:
    """A plane bipartite graph given by a rotation system.

    ``rotation[v]`` lists the neighbors of ``v`` counterclockwise.  ``positions``
    only has to be an orientation-preserving embedding; it is used to tell the
    outer face from the bounded ones.
    """

    black: tuple
    white: tuple
    edges: tuple
    rotation: dict
    positions: dict

    @classmethod
    def from_embedding(cls, black, white, edges, positions) -> BipartiteGraph:
        """Build the rotation system from straight-line vertex positions."""
        import math

        nbrs: dict = {v: [] for v in (*black, *white)}
        for b, w in edges:
            nbrs[b].append(w)
            nbrs[w].append(b)

        def angle(v, n):
            (x0, y0), (x1, y1) = positions[v], positions[n]
            return math.atan2(y1 - y0, x1 - x0)

        rotation = {v: tuple(sorted(ns, key=lambda n: angle(v, n))) for v, ns in nbrs.items()}
        return cls(tuple(black), tuple(white), tuple(edges), rotation, dict(positions))

    @cached_property
    def faces(self) -> tuple[tuple[tuple, ...], ...]:
        """All faces as closed half-edge walks; bounded faces run counterclockwise."""
        seen = set()
        faces = []
        halfedges = [(u, v) for u in self.rotation for v in self.rotation[u]]
        for h in halfedges:
            if h in seen:
                continue
            walk = []
            u, v = h
            while (u, v) not in seen:
                seen.add((u, v))
                walk.append((u, v))
                rot = self.rotation[v]
                w = rot[rot.index(u) - 1]
                u, v = v, w
            faces.append(tuple(walk))
        return tuple(faces)

    @cached_property
    def outer_face(self) -> int:
        areas = [signed_area2(self.positions[u] for u, _ in f) for f in self.faces]
        outer = [i for i, a in enumerate(areas) if a <= 0]
        if len(outer) != 1:
            raise RegionError("rotation system does not describe a connected plane graph")
        return outer[0]

    @property
    def bounded_faces(self) -> list[tuple[tuple, ...]]:
        return [f for i, f in enumerate(self.faces) if i != self.outer_face]


def adjacency(region: Region) -> BipartiteGraph:
    lat = region.lattice
    edges = []
    for b in region.black_cells:
        for w in region.neighbors(b):
            edges.append((b, w))
    edges.sort(key=lambda e: (e[0].key, e[1].key))
    rotation = {c: region.neighbors(c) for c in region.sorted_cells}
    positions = {c: _scaled_center(lat, c) for c in region.sorted_cells}
    return BipartiteGraph(region.black_cells, region.white_cells, tuple(edges), rotation, positions)


# --- cuts ----------------------------------------------------------------------


_CUT_PREFERENCE = {
    Lattice.SQUARE: ((1, 0), (0, 1), (0, -1), (-1, 0)),
    Lattice.TRIANGLE: ((1, 0), (0, 1), (1, -1), (-1, 1), (0, -1), (-1, 0)),
}


@dataclass(frozen=True)
class Cut:
    """An oriented simple lattice path joining two boundary components."""

    vertices: tuple[Vertex, ...]

    @property
    def edges(self) -> list[tuple[Vertex, Vertex]]:
        return list(zip(self.vertices, self.vertices[1:]))

    def __len__(self) -> int:
        return len(self.vertices) - 1

    def reversed(self) -> Cut:
        return Cut(self.vertices[::-1])


def validate_cut(region: Region, cut: Cut) -> None:
    vs = cut.vertices
    if len(vs) < 2:
        raise InvalidCutError("a cut needs at least one edge")
    if len(set(vs)) != len(vs):
        raise InvalidCutError("cut is not a simple path")
    for s, t in cut.edges:
        if not region.is_interior_edge(s, t):
            raise InvalidCutError(f"{s} -> {t} is not an interior edge of the region")
    for v in vs[1:-1]:
        if region.is_boundary_vertex(v):
            raise InvalidCutError(f"cut touches the boundary at {v}")
    a = region.boundary_components.get(vs[0], frozenset())
    b = region.boundary_components.get(vs[-1], frozenset())
    if not a or not b or not any(i != j for i in a for j in b):
        raise InvalidCutError("cut endpoints must lie on different boundary components")


def cuts_basis(region: Region) -> list[Cut]:
    """One cut per hole, running from the hole to the outer boundary.

    Breadth-first search from the hole's vertices (rightmost first) through
    interior vertices; steps are tried in the order +x, then left of +x, then
    the remaining directions, so the cut heads in the +x direction whenever
    nothing is in the way.
    """
    comps = region.boundary_components
    cuts = []
    for hole in range(1, len(region.boundary_cycles)):
        sources = sorted(
            (v for v in set(region.boundary_cycles[hole]) if 0 not in comps[v]),
            key=lambda v: (-v[0], v[1]),
        )
        parent: dict[Vertex, Vertex | None] = {v: None for v in sources}
        queue = deque(sources)
        end = None
        while queue and end is None:
            v = queue.popleft()
            for d in _CUT_PREFERENCE[region.lattice]:
                w = (v[0] + d[0], v[1] + d[1])
                if w in parent or not region.is_interior_edge(v, w):
                    continue
                if 0 in comps.get(w, ()):
                    parent[w] = v
                    end = w
                    break
                if w in comps:
                    continue
                parent[w] = v
                queue.append(w)
        if end is None:
            raise RegionError(f"no cut joins hole {hole} to the outer boundary")
        path = [end]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])
        cuts.append(Cut(tuple(reversed(path))))
    return cuts


# --- text format -----------------------------------------------------------------


def parse_region(text: str) -> Region:
    """Parse the ``square`` / ``triangle`` grid format.

    Rows run from the highest y down to y = 0.  In triangle files the
    characters at positions 2k and 2k+1 of row y are the up- and down-cells
    ``(k, y)``.  Trailing ``.`` may be dropped.
    """
    lines = text.splitlines()
    while lines and not lines[0].strip():
        lines.pop(0)
    if not lines:
        raise ParseError("empty input")
    header = lines[0].strip().lower()
    try:
        lattice = Lattice(header)
    except ValueError:
        raise ParseError(f"line 1: expected 'square' or 'triangle', got {lines[0]!r}") from None
    rows = [ln.rstrip() for ln in lines[1:]]
    while rows and not rows[-1]:
        rows.pop()
    cells = set()
    height = len(rows)
    for i, row in enumerate(rows):
        y = height - 1 - i
        for j, ch in enumerate(row):
            if ch == ".":
                continue
            if ch != "#":
                raise ParseError(f"line {i + 2}, column {j + 1}: unexpected character {ch!r}")
            if lattice is Lattice.SQUARE:
                cells.add(Cell(j, y))
            else:
                cells.add(Cell(j // 2, y, j % 2))
    if not cells:
        raise RegionError("region has no cells")
    return Region(lattice, frozenset(cells))


def format_region(region: Region) -> str:
    """Serialize ``region`` (translated so that its cell coordinates start at 0)."""
    r = region.normalized()
    height = max(c.y for c in r.cells) + 1
    lines = [r.lattice.value]
    for y in range(height - 1, -1, -1):
        row = sorted(c for c in r.cells if c.y == y)
        width = max((2 * c.x + c.o if r.lattice is Lattice.TRIANGLE else c.x) for c in row) + 1 if row else 0
        chars = ["."] * width
        for c in row:
            chars[2 * c.x + c.o if r.lattice is Lattice.TRIANGLE else c.x] = "#"
        lines.append("".join(chars))
    return "\n".join(lines) + "\n"
