"""Height functions of tilings of simply connected regions.

Walking along a lattice edge that is not covered by a tile changes the height
by one:

* dominoes: +1 if the square on the left is black, -1 if it is white;
* lozenges: +1 if the triangle on the right is black, -1 if it is white.

Crossing a tile along its inner edge changes the height by -3 or -2 times that
amount instead.  Heights are therefore fixed modulo 4 (dominoes) or 3
(lozenges) by the vertex position, and are normalized to 0 at the region's
lowest-leftmost vertex.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

from .errors import InvalidHeightError, InvalidTilingError, NotSimplyConnectedError, ParseError
from .region import Lattice, Region, Vertex, cell_is_black, left_cell, vkey
from .tiling import Tiling

COLOR_IMBALANCE = "color-imbalance"
BOUNDARY_INCONSISTENT = "boundary-inconsistent"
INTERIOR_CONTRADICTION = "interior-contradiction"


@dataclass(frozen=True)
class Untileable:
    """Returned instead of a tiling when none exists; ``stage`` says where it failed."""

    stage: str

    def __bool__(self) -> bool:
        return False


def modulus(lattice: Lattice) -> int:
    """Height change across a flip; also the period of the residue classes."""
    return 4 if lattice is Lattice.SQUARE else 3


def step(lattice: Lattice, s: Vertex, t: Vertex) -> int:
    """Height change along the uncovered edge ``s -> t``."""
    black_left = cell_is_black(lattice, left_cell(lattice, s, t))
    if lattice is Lattice.SQUARE:
        return 1 if black_left else -1
    return -1 if black_left else 1


def residue(lattice: Lattice, v: Vertex) -> int:
    x, y = v
    if lattice is Lattice.SQUARE:
        return (0, 1, 3, 2)[(x % 2) + 2 * (y % 2)]
    return (y - x) % 3


def _max_rise(lattice: Lattice, s: Vertex, t: Vertex) -> int:
    # the largest h(t) - h(s) any tiling allows
    return 1 if step(lattice, s, t) == 1 else modulus(lattice) - 1


@dataclass(frozen=True)
class HeightFunction:
    region: Region
    values: Mapping[Vertex, int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", MappingProxyType(dict(self.values)))

    def __getitem__(self, v: Vertex) -> int:
        return self.values[v]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeightFunction):
            return NotImplemented
        return self.region == other.region and dict(self.values) == dict(other.values)

    def __hash__(self) -> int:
        return hash((self.region, frozenset(self.values.items())))

    def __le__(self, other: HeightFunction) -> bool:
        """Pointwise comparison."""
        _same_region(self, other)
        return all(self.values[v] <= other.values[v] for v in self.values)


def _same_region(h1: HeightFunction, h2: HeightFunction) -> None:
    if h1.region != h2.region:
        raise InvalidHeightError("height functions belong to different regions")


def _require_simply_connected(region: Region) -> None:
    if not region.is_simply_connected:
        raise NotSimplyConnectedError(
            f"region has {region.hole_count} hole(s); use flows to compare its tilings"
        )


def heights_from_tiling(region: Region, tiling: Tiling) -> HeightFunction:
    _require_simply_connected(region)
    if tiling.region != region:
        raise InvalidTilingError("tiling belongs to a different region")
    lat = region.lattice
    k = modulus(lat) - 1
    covered = tiling.covered_edges
    base = region.base_vertex
    h = {base: 0}
    queue = deque([base])
    while queue:
        u = queue.popleft()
        for v in region.vertex_neighbors[u]:
            d = step(lat, u, v)
            if tuple(sorted((u, v))) in covered:
                d *= -k
            if v not in h:
                h[v] = h[u] + d
                queue.append(v)
            elif h[v] != h[u] + d:
                raise InvalidTilingError(f"inconsistent heights at {v}")
    return HeightFunction(region, h)


def is_valid_height(region: Region, h: HeightFunction | Mapping[Vertex, int]) -> bool:
    values = h.values if isinstance(h, HeightFunction) else h
    if set(values) != set(region.vertices):
        return False
    lat = region.lattice
    X = modulus(lat)
    base = region.base_vertex
    if values[base] != 0:
        return False
    r0 = residue(lat, base)
    for v, val in values.items():
        if (val - residue(lat, v) + r0) % X:
            return False
    for (u, v), cells in region.edge_cells.items():
        d = abs(values[v] - values[u])
        if d > X - 1 or (len(cells) == 1 and d != 1):
            return False
    return True


def tiling_from_heights(region: Region, h: HeightFunction | Mapping[Vertex, int]) -> Tiling:
    values = h.values if isinstance(h, HeightFunction) else h
    if not is_valid_height(region, values):
        raise InvalidHeightError("not a height function of this region")
    pairs = [
        cells
        for (u, v), cells in region.edge_cells.items()
        if len(cells) == 2 and abs(values[u] - values[v]) != 1
    ]
    return Tiling.from_pairs(region, pairs)


def boundary_heights(region: Region) -> dict[Vertex, int] | Untileable:
    """Heights along the outer boundary, which every tiling shares."""
    _require_simply_connected(region)
    cycle = region.boundary_cycles[0]
    lat = region.lattice
    h = {cycle[0]: 0}
    for i, s in enumerate(cycle):
        t = cycle[(i + 1) % len(cycle)]
        val = h[s] + step(lat, s, t)
        if t not in h:
            h[t] = val
        elif h[t] != val:
            return Untileable(COLOR_IMBALANCE if i == len(cycle) - 1 else BOUNDARY_INCONSISTENT)
    return h


def _extreme(region: Region, lowest: bool) -> HeightFunction | Untileable:
    fixed = boundary_heights(region)
    if isinstance(fixed, Untileable):
        return fixed
    lat = region.lattice
    nbrs = region.vertex_neighbors
    h = dict(fixed)
    queue = deque(sorted(fixed, key=vkey))
    queued = set(queue)
    while queue:
        u = queue.popleft()
        queued.discard(u)
        for v in nbrs[u]:
            if v in fixed:
                continue
            if lowest:
                cand = h[u] - _max_rise(lat, v, u)
                better = v not in h or cand > h[v]
            else:
                cand = h[u] + _max_rise(lat, u, v)
                better = v not in h or cand < h[v]
            if better:
                h[v] = cand
                if v not in queued:
                    queued.add(v)
                    queue.append(v)
    for u in region.vertices:
        for v in nbrs[u]:
            if h[v] - h[u] > _max_rise(lat, u, v):
                return Untileable(INTERIOR_CONTRADICTION)
    return HeightFunction(region, h)


def min_heights(region: Region) -> HeightFunction | Untileable:
    """Pointwise smallest height function, or why none exists.

    Boundary values are fixed by walking the outer boundary; every other
    vertex then receives the smallest value compatible with its neighbors,
    sweeping breadth-first from the boundary until nothing changes.
    """
    return _extreme(region, lowest=True)


def max_heights(region: Region) -> HeightFunction | Untileable:
    return _extreme(region, lowest=False)


def min_tiling(region: Region) -> Tiling | Untileable:
    h = min_heights(region)
    return h if isinstance(h, Untileable) else tiling_from_heights(region, h)


def max_tiling(region: Region) -> Tiling | Untileable:
    h = max_heights(region)
    return h if isinstance(h, Untileable) else tiling_from_heights(region, h)


def _combine(h1: HeightFunction, h2: HeightFunction, pick) -> HeightFunction:
    _same_region(h1, h2)
    base = h1.region.base_vertex
    if h1.values[base] != h2.values[base]:
        raise InvalidHeightError("height functions are normalized differently")
    return HeightFunction(h1.region, {v: pick(h1.values[v], h2.values[v]) for v in h1.values})


def meet(h1: HeightFunction, h2: HeightFunction) -> HeightFunction:
    return _combine(h1, h2, min)


def join(h1: HeightFunction, h2: HeightFunction) -> HeightFunction:
    return _combine(h1, h2, max)


def format_heights(h: HeightFunction) -> str:
    return "".join(f"{x} {y} {h.values[(x, y)]}\n" for x, y in sorted(h.values))


def parse_heights(region: Region, text: str) -> HeightFunction:
    values = {}
    for n, line in enumerate(text.splitlines(), 1):
        parts = line.split()
        if not parts:
            continue
        try:
            x, y, val = map(int, parts)
        except ValueError:
            raise ParseError(f"height line {n}: expected 'x y h', got {line!r}") from None
        values[(x, y)] = val
    return HeightFunction(region, values)
