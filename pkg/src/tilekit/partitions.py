"""Boxed plane partitions and the pile-of-cubes picture of hexagon tilings.

Entry ``n[i][j]`` counts the cubes stacked over square ``(i, j)`` of an
``r x c`` floor, at most ``m`` high.  Rows run along the hexagon's ``r``
direction, columns along ``c``, stacks along ``m``.  The concave corner
``(i, j, k)`` of the pile is drawn at lattice point ``(j - i + r, k - j + c)``
of :func:`tilekit.shapes.hexagon`; adding a cube raises the height function
there by 3.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidPartitionError, InvalidTilingError, ParseError
from .height import heights_from_tiling, min_heights, tiling_from_heights
from .region import Lattice, Region
from .shapes import hexagon, recognize_hexagon
from .tiling import Tiling


@dataclass(frozen=True)
class PlanePartition:
    rows: tuple[tuple[int, ...], ...]
    m: int

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows or not rows[0] or any(len(row) != len(rows[0]) for row in rows):
            raise InvalidPartitionError("partition must be a non-empty rectangular array")
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                if v < 0 or v > self.m:
                    raise InvalidPartitionError(f"entry ({i}, {j}) = {v} outside [0, {self.m}]")
                if i + 1 < len(rows) and rows[i + 1][j] > v:
                    raise InvalidPartitionError(f"column {j} increases below row {i}")
                if j + 1 < len(row) and row[j + 1] > v:
                    raise InvalidPartitionError(f"row {i} increases after column {j}")

    @property
    def r(self) -> int:
        return len(self.rows)

    @property
    def c(self) -> int:
        return len(self.rows[0])

    @property
    def volume(self) -> int:
        return sum(map(sum, self.rows))

    @classmethod
    def zeros(cls, r: int, c: int, m: int) -> PlanePartition:
        return cls(tuple((0,) * c for _ in range(r)), m)

    def __str__(self) -> str:
        return "\n".join(" ".join(map(str, row)) for row in self.rows)


def _cube_point(i: int, j: int, k: int, r: int, c: int, offset: tuple[int, int]) -> tuple[int, int]:
    return (j - i + r + offset[0], k - j + c + offset[1])


def _box(region: Region) -> tuple[int, int, int, tuple[int, int]]:
    hexa = recognize_hexagon(region) if region.lattice is Lattice.TRIANGLE else None
    if hexa is None:
        raise InvalidTilingError("region is not a hexagon with opposite sides equal")
    return hexa


def tiling_to_partition(t: Tiling) -> PlanePartition:
    r, c, m, offset = _box(t.region)
    h = heights_from_tiling(t.region, t).values
    h0 = min_heights(t.region).values
    rows = []
    for i in range(r):
        row = []
        for j in range(c):
            n = 0
            for k in range(m):
                p = _cube_point(i, j, k, r, c, offset)
                if (h[p] - h0[p]) // 3 > min(i, j, k):
                    n += 1
            row.append(n)
        rows.append(tuple(row))
    return PlanePartition(tuple(rows), m)


def partition_to_tiling(p: PlanePartition, r: int, c: int, m: int, region: Region | None = None) -> Tiling:
    """The tiling of ``hexagon(r, c, m)`` (or of the given translate) drawn by ``p``."""
    if (p.r, p.c) != (r, c) or p.m > m:
        raise InvalidPartitionError(f"partition does not fit the {r}x{c}x{m} box")
    if region is None:
        region = hexagon(r, c, m)
    rr, cc, mm, offset = _box(region)
    if (rr, cc, mm) != (r, c, m):
        raise InvalidPartitionError("region does not match the box")
    h = dict(min_heights(region).values)
    for i in range(r):
        for j in range(c):
            for k in range(p.rows[i][j]):
                h[_cube_point(i, j, k, r, c, offset)] += 3
    return tiling_from_heights(region, h)


def _poly_mul_binomial(poly: list[int], k: int) -> list[int]:
    # poly * (1 - x^k)
    out = poly + [0] * k
    for n, a in enumerate(poly):
        out[n + k] -= a
    return out


def _poly_div_binomial(poly: list[int], k: int) -> list[int]:
    # poly / (1 - x^k) as a power series truncated to len(poly)
    out = list(poly)
    for n in range(k, len(out)):
        out[n] += out[n - k]
    return out


def macmahon_series(r: int, c: int, m: int) -> list[int]:
    """Coefficients ``pi_0 .. pi_{rcm}``: boxed plane partitions counted by volume."""
    if min(r, c, m) < 1:
        raise ValueError("box sides must be positive")
    poly = [1]
    pairs = [(i, j) for i in range(1, r + 1) for j in range(1, m + 1)]
    for i, j in pairs:
        poly = _poly_mul_binomial(poly, c + i + j - 1)
    for i, j in pairs:
        poly = _poly_div_binomial(poly, i + j - 1)
    top = r * c * m
    if any(poly[top + 1:]):
        raise ArithmeticError("generating function did not reduce to a polynomial")
    return poly[: top + 1]


def iter_partitions(r: int, c: int, m: int):
    """Every plane partition fitting in the ``r x c x m`` box."""
    cells = [(i, j) for i in range(r) for j in range(c)]
    grid = [[0] * c for _ in range(r)]

    def rec(idx):
        if idx == len(cells):
            yield PlanePartition(tuple(map(tuple, grid)), m)
            return
        i, j = cells[idx]
        hi = m
        if i > 0:
            hi = min(hi, grid[i - 1][j])
        if j > 0:
            hi = min(hi, grid[i][j - 1])
        for v in range(hi + 1):
            grid[i][j] = v
            yield from rec(idx + 1)
        grid[i][j] = 0

    yield from rec(0)


def enumerate_partitions(r: int, c: int, m: int) -> list[int]:
    """Counts of boxed plane partitions by volume, by exhaustive generation."""
    counts = [0] * (r * c * m + 1)
    for p in iter_partitions(r, c, m):
        counts[p.volume] += 1
    return counts


def parse_partition(text: str, m: int | None = None) -> PlanePartition:
    """Whitespace-separated rows; ``m`` defaults to the largest entry."""
    try:
        rows = [tuple(int(v) for v in line.split()) for line in text.splitlines() if line.strip()]
    except ValueError:
        raise ParseError("partition entries must be integers") from None
    if not rows:
        raise ParseError("empty partition")
    if m is None:
        m = max(max(row) for row in rows)
    return PlanePartition(tuple(rows), m)
