"""Flips, the flip graph, flip distance, flows across cuts and orientation counts."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .errors import FlipError, InvalidTilingError
from .height import heights_from_tiling, modulus
from .region import Cut, Lattice, Region, Vertex, cuts_basis, left_cell, right_cell, star, validate_cut
from .tiling import Tiling, enumerate_tilings


@dataclass(frozen=True, order=True)
class Flip:
    """A flip around the interior vertex ``vertex``.

    For dominoes the conventional location is the lower-left cell of the
    2x2 block; for lozenges it is the hexagon's center vertex.
    """

    vertex: Vertex
    lattice: Lattice = Lattice.SQUARE

    @property
    def location(self) -> tuple[int, int]:
        x, y = self.vertex
        return (x - 1, y - 1) if self.lattice is Lattice.SQUARE else (x, y)


def _flip_pairing(tiling: Tiling, v: Vertex) -> int | None:
    """Offset (0 or 1) of the pairing of the cells around ``v`` when they are
    covered by tiles lying entirely in the star, else None."""
    cells = star(tiling.region.lattice, v)
    if not all(c in tiling.region.cells for c in cells):
        return None
    k = len(cells)
    p = tiling.partner
    for offset in (0, 1):
        if all(p[cells[(offset + 2 * i) % k]] == cells[(offset + 2 * i + 1) % k] for i in range(k // 2)):
            return offset
    return None


def _interior_vertices(region: Region) -> list[Vertex]:
    return [v for v in region.vertices if not region.is_boundary_vertex(v)]


def available_flips(t: Tiling) -> list[Flip]:
    lat = t.region.lattice
    return [Flip(v, lat) for v in _interior_vertices(t.region) if _flip_pairing(t, v) is not None]


def apply_flip(t: Tiling, f: Flip) -> Tiling:
    offset = _flip_pairing(t, f.vertex)
    if offset is None:
        raise FlipError(f"no flip available at {f.location}")
    region = t.region
    cells = star(region.lattice, f.vertex)
    k = len(cells)
    old = {(b, w) for b, w in t.tiles if b in cells}
    new = set()
    for i in range(k // 2):
        a, b = cells[(1 - offset + 2 * i) % k], cells[(2 - offset + 2 * i) % k]
        new.add((a, b) if region.is_black(a) else (b, a))
    return Tiling(region, (t.tiles - old) | frozenset(new))


class FlipGraph:
    """Tilings of a region (in enumeration order) joined by single flips."""

    def __init__(self, tilings: list[Tiling]):
        self.tilings = tilings
        index = {t.tiles: i for i, t in enumerate(tilings)}
        self.adj: list[list[int]] = [[] for _ in tilings]
        edges = set()
        for i, t in enumerate(tilings):
            for f in available_flips(t):
                j = index[apply_flip(t, f).tiles]
                self.adj[i].append(j)
                edges.add((min(i, j), max(i, j)))
        self.edges = sorted(edges)

    def __len__(self) -> int:
        return len(self.tilings)

    def bfs(self, source: int) -> list[int | None]:
        dist: list[int | None] = [None] * len(self.tilings)
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for v in self.adj[u]:
                if dist[v] is None:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        return dist

    def distance(self, i: int, j: int) -> int | None:
        return self.bfs(i)[j]

    @cached_property
    def components(self) -> list[list[int]]:
        comp: list[int | None] = [None] * len(self.tilings)
        out = []
        for s in range(len(self.tilings)):
            if comp[s] is not None:
                continue
            members = [i for i, d in enumerate(self.bfs(s)) if d is not None]
            for i in members:
                comp[i] = len(out)
            out.append(members)
        return out

    @property
    def component_sizes(self) -> list[int]:
        return [len(c) for c in self.components]

    @property
    def is_connected(self) -> bool:
        return len(self.components) <= 1

    def format_edges(self) -> str:
        return "".join(f"{i} {j}\n" for i, j in self.edges)


def flip_graph(region: Region, limit: int | None = None) -> FlipGraph:
    return FlipGraph(enumerate_tilings(region, limit))


def distance(t1: Tiling, t2: Tiling) -> int:
    """Flip distance between two tilings of a simply connected region,
    from the total height difference."""
    if t1.region != t2.region:
        raise InvalidTilingError("tilings belong to different regions")
    h1 = heights_from_tiling(t1.region, t1)
    h2 = heights_from_tiling(t2.region, t2)
    total = sum(abs(h1.values[v] - h2.values[v]) for v in h1.values)
    q, r = divmod(total, modulus(t1.region.lattice))
    assert r == 0, "height differences are multiples of the flip step"
    return q


def flow(t: Tiling, cut: Cut) -> int:
    """Signed number of tiles crossing ``cut``: +1 when the crossing tile's
    cell on the left of the cut is black, -1 when it is white."""
    region = t.region
    validate_cut(region, cut)
    lat = region.lattice
    total = 0
    for s, e in cut.edges:
        left, right = left_cell(lat, s, e), right_cell(lat, s, e)
        if t.partner[left] == right:
            total += 1 if region.is_black(left) else -1
    return total


def flow_signature(t: Tiling, cuts: list[Cut] | None = None) -> tuple[int, ...]:
    if cuts is None:
        cuts = cuts_basis(t.region)
    return tuple(flow(t, c) for c in cuts)


def orientation_counts(t: Tiling) -> tuple[int, int, int]:
    """``(n_xy, n_xz, n_yz)``: lozenges whose inner edge is vertical-ish
    (0, 1), slanted (-1, 1), and horizontal (1, 0) respectively."""
    region = t.region
    if region.lattice is not Lattice.TRIANGLE:
        raise ValueError("orientation counts are defined for lozenge tilings only")
    counts = {(0, 1): 0, (1, -1): 0, (1, 0): 0}
    for u, v in t.covered_edges:
        d = (v[0] - u[0], v[1] - u[1])
        if d not in counts:
            d = (-d[0], -d[1])
        counts[d] += 1
    return counts[(0, 1)], counts[(1, -1)], counts[(1, 0)]
