"""Tilings as perfect matchings of the cell-adjacency graph, and their enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import EnumerationLimitError, InvalidTilingError, ParseError
from .region import DOWN, UP, Cell, Lattice, Region, shared_edge

Tile = tuple[Cell, Cell]  # (black, white)


@dataclass(frozen=True)
class Tiling:
    region: Region
    tiles: frozenset[Tile]

    @classmethod
    def from_pairs(cls, region: Region, pairs: Iterable[tuple[Cell, Cell]]) -> Tiling:
        """Build a tiling from unordered cell pairs, checking it is a perfect matching."""
        tiles = set()
        covered: set[Cell] = set()
        for a, b in pairs:
            a, b = Cell(*a), Cell(*b)
            for c in (a, b):
                if c not in region.cells:
                    raise InvalidTilingError(f"{c} is not in the region")
                if c in covered:
                    raise InvalidTilingError(f"{c} is covered twice")
                covered.add(c)
            if b not in region.neighbors(a):
                raise InvalidTilingError(f"{a} and {b} are not adjacent")
            tiles.add((a, b) if region.is_black(a) else (b, a))
        if len(covered) != len(region.cells):
            raise InvalidTilingError("tiling leaves cells uncovered")
        return cls(region, frozenset(tiles))

    def __len__(self) -> int:
        return len(self.tiles)

    @cached_property
    def partner(self) -> dict[Cell, Cell]:
        p = {}
        for b, w in self.tiles:
            p[b] = w
            p[w] = b
        return p

    @cached_property
    def sorted_tiles(self) -> tuple[Tile, ...]:
        return tuple(sorted(self.tiles, key=lambda t: (t[0].key, t[1].key)))

    @cached_property
    def covered_edges(self) -> frozenset:
        """Lattice edges lying inside a tile."""
        return frozenset(shared_edge(self.region.lattice, b, w) for b, w in self.tiles)


# --- text format -------------------------------------------------------------


def _fmt_cell(lattice: Lattice, c: Cell) -> str:
    if lattice is Lattice.SQUARE:
        return f"{c.x} {c.y}"
    return f"{c.x} {c.y} {'u' if c.o == UP else 'd'}"


def format_tiling(tiling: Tiling) -> str:
    lat = tiling.region.lattice
    return "".join(f"{_fmt_cell(lat, b)} {_fmt_cell(lat, w)}\n" for b, w in tiling.sorted_tiles)


def parse_tiling(region: Region, text: str) -> Tiling:
    """Parse one tile per line: ``x1 y1 x2 y2`` or ``x1 y1 o1 x2 y2 o2`` with o in {u, d}."""
    pairs = []
    for n, line in enumerate(text.splitlines(), 1):
        parts = line.split("#", 1)[0].split()
        if not parts:
            continue
        try:
            if region.lattice is Lattice.SQUARE:
                if len(parts) != 4:
                    raise ValueError
                x1, y1, x2, y2 = map(int, parts)
                pairs.append((Cell(x1, y1), Cell(x2, y2)))
            else:
                if len(parts) != 6 or parts[2] not in "ud" or parts[5] not in "ud":
                    raise ValueError
                o1 = UP if parts[2] == "u" else DOWN
                o2 = UP if parts[5] == "u" else DOWN
                pairs.append(
                    (Cell(int(parts[0]), int(parts[1]), o1), Cell(int(parts[3]), int(parts[4]), o2))
                )
        except ValueError:
            raise ParseError(f"tiling line {n}: cannot parse {line!r}") from None
    return Tiling.from_pairs(region, pairs)


# --- enumeration ---------------------------------------------------------------


class _Masks:
    """Bit-index view of a region: cells in (y, x, o) order."""

    def __init__(self, region: Region):
        self.cells = region.sorted_cells
        index = {c: i for i, c in enumerate(self.cells)}
        self.full = (1 << len(self.cells)) - 1
        self.nbrs = [
            sorted(index[n] for n in region.neighbors(c)) for c in self.cells
        ]
        self.nbr_mask = [sum(1 << j for j in ns) for ns in self.nbrs]
        # neighbors that can still be free when i is the first free cell
        self.later = [[1 << j for j in ns if j > i] for i, ns in enumerate(self.nbrs)]


def iter_tilings(region: Region) -> Iterator[Tiling]:
    """Yield every tiling of ``region`` once, in a deterministic order.

    Backtracking on the first uncovered cell, with forced moves (a free cell
    with one free neighbor) applied before each branch and dead ends (a free
    cell with none) pruned.
    """
    if not region.is_balanced:
        return
    mk = _Masks(region)
    cells, nbrs, nbr_mask, full = mk.cells, mk.nbrs, mk.nbr_mask, mk.full
    chosen: list[tuple[int, int]] = []

    def propagate(covered: int) -> int | None:
        while True:
            free = full & ~covered
            progress = False
            m = free
            while m:
                low = m & -m
                i = low.bit_length() - 1
                m ^= low
                if covered & low:
                    continue
                avail = nbr_mask[i] & ~covered
                if avail == 0:
                    return None
                if avail & (avail - 1) == 0:
                    j = avail.bit_length() - 1
                    chosen.append((i, j))
                    covered |= low | avail
                    progress = True
            if not progress:
                return covered

    def rec(covered: int) -> Iterator[None]:
        mark = len(chosen)
        covered = propagate(covered)
        if covered is not None:
            if covered == full:
                yield None
            else:
                free = ~covered & (covered + 1)
                i = free.bit_length() - 1
                for j in nbrs[i]:
                    if not covered >> j & 1:
                        chosen.append((i, j))
                        yield from rec(covered | free | (1 << j))
                        chosen.pop()
        del chosen[mark:]

    for _ in rec(0):
        tiles = frozenset(
            (cells[i], cells[j]) if region.is_black(cells[i]) else (cells[j], cells[i])
            for i, j in chosen
        )
        yield Tiling(region, tiles)


def enumerate_tilings(region: Region, limit: int | None = None) -> list[Tiling]:
    """All tilings of ``region``; raises :class:`EnumerationLimitError` past ``limit``."""
    out = []
    for t in iter_tilings(region):
        out.append(t)
        if limit is not None and len(out) > limit:
            raise EnumerationLimitError(limit)
    return out


def count_by_enumeration(region: Region, limit: int | None = None) -> int:
    """Count tilings by exhaustive backtracking without materializing them.

    Every tiling is visited individually, so the running time is proportional
    to the count.  Raises :class:`EnumerationLimitError` once the count
    exceeds ``limit``.
    """
    if not region.is_balanced:
        return 0
    mk = _Masks(region)
    later, full = mk.later, mk.full
    cap = limit if limit is not None else -1
    count = 0

    def rec(covered: int) -> None:
        nonlocal count
        if covered == full:
            count += 1
            if count == cap + 1:
                raise EnumerationLimitError(limit)
            return
        low = ~covered & (covered + 1)
        for bit in later[low.bit_length() - 1]:
            if not covered & bit:
                rec(covered | low | bit)

    rec(0)
    return count


def find_tiling(region: Region) -> Tiling | None:
    """Some tiling of ``region`` by augmenting-path bipartite matching, or None."""
    if not region.is_balanced:
        return None
    match: dict[Cell, Cell] = {}  # white -> black

    def augment(b: Cell, seen: set[Cell]) -> bool:
        for w in region.neighbors(b):
            if w in seen:
                continue
            seen.add(w)
            if w not in match or augment(match[w], seen):
                match[w] = b
                return True
        return False

    for b in region.black_cells:
        if not augment(b, set()):
            return None
    return Tiling(region, frozenset((b, w) for w, b in match.items()))
