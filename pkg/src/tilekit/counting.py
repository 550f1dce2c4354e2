"""Exact tiling counts: signed adjacency determinants and closed product formulas."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property

import mpmath

from .errors import PrecisionError, RegionError
from .linalg import bareiss_det, permutation_sign
from .region import BipartiteGraph, Region, adjacency
from .shapes import recognize_hexagon, recognize_rectangle
from .tiling import Tiling, enumerate_tilings


@dataclass(frozen=True)
class SignedBipartiteMatrix:
    """Black-by-white adjacency matrix with some entries negated."""

    graph: BipartiteGraph
    signs: dict  # (black, white) -> +1 / -1, one entry per graph edge

    @cached_property
    def matrix(self) -> list[list[int]]:
        col = {w: j for j, w in enumerate(self.graph.white)}
        row = {b: i for i, b in enumerate(self.graph.black)}
        m = [[0] * len(self.graph.white) for _ in self.graph.black]
        for (b, w), s in self.signs.items():
            m[row[b]][col[w]] = s
        return m

    @property
    def negated(self) -> list[tuple]:
        return [e for e in self.graph.edges if self.signs[e] < 0]

    def face_parity_ok(self) -> bool:
        """True when every bounded face of length 4n has an odd number of
        negated edges and every face of length 4n+2 an even number."""
        return all(
            _negated_on(face, self.signs, self._black) % 2 == (len(face) % 4 == 0)
            for face in self.graph.bounded_faces
        )

    @cached_property
    def _black(self) -> frozenset:
        return frozenset(self.graph.black)


def _edge(h, black) -> tuple:
    u, v = h
    return (u, v) if u in black else (v, u)


def _negated_on(face, signs, black) -> int:
    return sum(1 for h in face if signs[_edge(h, black)] < 0)


def kasteleyn_sign(g: BipartiteGraph) -> SignedBipartiteMatrix:
    """Negate edges so that all matchings contribute to the determinant with
    the same sign.

    Faces are visited along a spanning tree of the dual graph rooted at the
    outer face, leaves first; each face fixes its parity with the edge it
    shares with its parent, which no processed face depends on.
    """
    black = frozenset(g.black)
    faces = g.faces
    outer = g.outer_face
    edge_faces: dict[tuple, list[int]] = {}
    for fi, face in enumerate(faces):
        for h in face:
            edge_faces.setdefault(_edge(h, black), []).append(fi)

    parent_edge: dict[int, tuple] = {}
    order = [outer]
    seen = {outer}
    queue = deque([outer])
    while queue:
        f = queue.popleft()
        for h in faces[f]:
            e = _edge(h, black)
            for other in edge_faces[e]:
                if other not in seen:
                    seen.add(other)
                    parent_edge[other] = e
                    order.append(other)
                    queue.append(other)
    if len(seen) != len(faces):
        raise RegionError("dual graph is disconnected; rotation system is malformed")

    signs = {e: 1 for e in g.edges}
    for f in reversed(order[1:]):
        want = 1 if len(faces[f]) % 4 == 0 else 0
        if _negated_on(faces[f], signs, black) % 2 != want:
            e = parent_edge[f]
            signs[e] = -signs[e]
    return SignedBipartiteMatrix(g, signs)


def count_tilings(region: Region) -> int:
    """Number of tilings, as |det| of the sign-corrected adjacency matrix."""
    if not region.is_balanced:
        return 0
    return abs(bareiss_det(kasteleyn_sign(adjacency(region)).matrix))


def unsigned_matrix(region: Region) -> list[list[int]]:
    col = {w: j for j, w in enumerate(region.white_cells)}
    m = [[0] * len(region.white_cells) for _ in region.black_cells]
    for i, b in enumerate(region.black_cells):
        for w in region.neighbors(b):
            m[i][col[w]] = 1
    return m


def det_unsigned(region: Region) -> int:
    """|det B| for the plain 0/1 black-by-white adjacency matrix."""
    if not region.is_balanced:
        raise RegionError("det B needs as many black cells as white cells")
    return abs(bareiss_det(unsigned_matrix(region)))


def tiling_sign(tiling: Tiling) -> int:
    """Sign of the tiling's monomial in det B, rows and columns in (y, x, o) order."""
    region = tiling.region
    col = {w: j for j, w in enumerate(region.white_cells)}
    return permutation_sign([col[tiling.partner[b]] for b in region.black_cells])


def sign_classes(region: Region, tilings: list[Tiling] | None = None) -> tuple[int, int]:
    """``(N_plus, N_minus)``: tilings whose det B monomial is positive / negative."""
    if tilings is None:
        tilings = enumerate_tilings(region)
    plus = sum(1 for t in tilings if tiling_sign(t) > 0)
    return plus, len(tilings) - plus


def rectangle_count(n: int, m: int, max_bits: int = 1 << 20) -> int:
    """Domino tilings of the n x m rectangle (m even) from the cosine product.

    Evaluated with ``2*n*m + 64`` bits of working precision; the result must
    be within 1e-6 of an integer or :class:`PrecisionError` is raised.
    """
    if n < 1 or m < 1:
        raise ValueError("rectangle sides must be positive")
    if m % 2:
        raise ValueError("m must be even (transpose the rectangle)")
    bits = 2 * n * m + 64
    if bits > max_bits:
        raise PrecisionError(f"{n}x{m} needs {bits} bits, above the {max_bits}-bit limit")
    with mpmath.workprec(bits):
        value = mpmath.mpf(1)
        for k in range(1, m // 2 + 1):
            ck = mpmath.cos(k * mpmath.pi / (m + 1)) ** 2
            for l in range(1, n + 1):
                cl = mpmath.cos(l * mpmath.pi / (n + 1)) ** 2
                value *= 2 * mpmath.sqrt(ck + cl)
        nearest = mpmath.nint(value)
        if abs(value - nearest) >= mpmath.mpf("1e-6"):
            raise PrecisionError(f"product for {n}x{m} is not within 1e-6 of an integer")
        return int(nearest)


def hexagon_count(r: int, c: int, m: int) -> int:
    """Lozenge tilings of the hexagon with sides r, c, m, r, c, m."""
    if min(r, c, m) < 1:
        raise ValueError("hexagon sides must be positive")
    num = math.prod(c + i + j - 1 for i in range(1, r + 1) for j in range(1, m + 1))
    den = math.prod(i + j - 1 for i in range(1, r + 1) for j in range(1, m + 1))
    q, rem = divmod(num, den)
    assert rem == 0
    return q


def formula_count(region: Region) -> int | None:
    """Closed-form count when ``region`` is a full rectangle or a hexagon, else None."""
    rect = recognize_rectangle(region)
    if rect is not None:
        n, m = rect
        if m % 2 == 0:
            return rectangle_count(n, m)
        if n % 2 == 0:
            return rectangle_count(m, n)
        return 0
    hexa = recognize_hexagon(region)
    if hexa is not None:
        return hexagon_count(*hexa[:3])
    return None
