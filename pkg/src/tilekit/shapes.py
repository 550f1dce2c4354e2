"""Region generators and exact-template recognition."""

from __future__ import annotations

from .region import DOWN, UP, Cell, Lattice, Region, cell_vertices


def rectangle(n: int, m: int) -> Region:
    """``n`` rows by ``m`` columns, lower-left cell at the origin."""
    if n < 1 or m < 1:
        raise ValueError("rectangle sides must be positive")
    return Region(Lattice.SQUARE, frozenset(Cell(x, y) for x in range(m) for y in range(n)))


def _hexagon_cells(r: int, c: int, m: int, dx: int = 0, dy: int = 0) -> frozenset[Cell]:
    def inside(p):
        x, y = p[0] - dx, p[1] - dy
        return 0 <= y <= m + c and 0 <= x <= r + c and c <= x + y <= r + m + c

    cells = set()
    for x in range(-1, r + c + 1):
        for y in range(-1, m + c + 1):
            for o in (UP, DOWN):
                cell = Cell(x + dx, y + dy, o)
                if all(inside(v) for v in cell_vertices(Lattice.TRIANGLE, cell)):
                    cells.add(cell)
    return frozenset(cells)


def hexagon(r: int, c: int, m: int) -> Region:
    """Hexagon with opposite sides equal, holding the ``r x c x m`` box of cubes.

    Corners, counterclockwise: ``(c, 0), (c+r, 0), (c+r, m), (r, c+m), (0, c+m), (0, c)``.
    """
    if min(r, c, m) < 1:
        raise ValueError("hexagon sides must be positive")
    return Region(Lattice.TRIANGLE, _hexagon_cells(r, c, m))


def triangle(n: int) -> Region:
    """The up-pointing triangle of side ``n``."""
    if n < 1:
        raise ValueError("triangle side must be positive")
    cells = {Cell(x, y, UP) for x in range(n) for y in range(n) if x + y <= n - 1}
    cells |= {Cell(x, y, DOWN) for x in range(n) for y in range(n) if x + y <= n - 2}
    return Region(Lattice.TRIANGLE, frozenset(cells))


def recognize_rectangle(region: Region) -> tuple[int, int] | None:
    """``(rows, columns)`` if ``region`` is a full rectangle, else None."""
    if region.lattice is not Lattice.SQUARE:
        return None
    xs = [c.x for c in region.cells]
    ys = [c.y for c in region.cells]
    n, m = max(ys) - min(ys) + 1, max(xs) - min(xs) + 1
    return (n, m) if n * m == len(region) else None


def recognize_hexagon(region: Region) -> tuple[int, int, int, tuple[int, int]] | None:
    """``(r, c, m, offset)`` if ``region`` is a translated :func:`hexagon`."""
    if region.lattice is not Lattice.TRIANGLE:
        return None
    vs = region.vertices
    xmin = min(v[0] for v in vs)
    ymin = min(v[1] for v in vs)
    c = min(v[0] + v[1] for v in vs) - xmin - ymin
    r = max(v[0] for v in vs) - xmin - c
    m = max(v[1] for v in vs) - ymin - c
    if min(r, c, m) < 1:
        return None
    if _hexagon_cells(r, c, m, xmin, ymin) != region.cells:
        return None
    return r, c, m, (xmin, ymin)
