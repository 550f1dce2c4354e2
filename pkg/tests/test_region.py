from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from suites import random_region, square_minus
from tilekit.errors import InvalidCutError, ParseError, RegionError
from tilekit.region import (
    DOWN,
    UP,
    Cell,
    Color,
    Cut,
    Lattice,
    Region,
    adjacency,
    boundary_cycles,
    color,
    cuts_basis,
    format_region,
    parse_region,
    validate_cut,
)
from tilekit.shapes import hexagon, recognize_hexagon, recognize_rectangle, rectangle, triangle

UNIT_HEX = hexagon(1, 1, 1)
RING = square_minus(3, 3, [(1, 1)])


class TestParse:
    def test_two_by_two(self):
        r = parse_region("square\n##\n##\n")
        assert len(r) == 4
        assert len(r.black_cells) == len(r.white_cells) == 2
        assert r.hole_count == 0

    def test_ring_has_one_hole(self):
        r = parse_region("square\n###\n#.#\n###\n")
        assert len(r) == 8
        assert r.hole_count == 1
        assert not r.is_simply_connected

    def test_unit_hexagon(self):
        r = parse_region("triangle\n###\n.###\n")
        assert len(r) == 6
        assert sum(c.o == UP for c in r.cells) == 3
        assert sum(c.o == DOWN for c in r.cells) == 3
        assert r == UNIT_HEX.normalized()

    def test_bottom_row_is_y_zero(self):
        r = parse_region("square\n#.\n##\n")
        assert r.cells == {Cell(0, 0), Cell(1, 0), Cell(0, 1)}

    def test_blank_lines_tolerated(self):
        assert parse_region("\n\nsquare\n##\n\n") == rectangle(1, 2)

    @pytest.mark.parametrize(
        "text, err",
        [
            ("", ParseError),
            ("hexagonal\n##\n", ParseError),
            ("square\n#x\n", ParseError),
            ("square\n...\n", RegionError),
            ("square\n#.#\n", RegionError),  # two components
            ("triangle\n#.#\n", RegionError),
        ],
    )
    def test_errors(self, text, err):
        with pytest.raises(err):
            parse_region(text)

    def test_errors_are_value_errors(self):
        with pytest.raises(ValueError):
            parse_region("square\n?\n")


class TestColor:
    def test_convention(self):
        sq = rectangle(1, 2)
        assert color(sq, Cell(0, 0)) is Color.BLACK
        assert color(sq, Cell(1, 0)) is Color.WHITE
        assert color(UNIT_HEX, next(c for c in UNIT_HEX.cells if c.o == UP)) is Color.BLACK
        assert color(UNIT_HEX, next(c for c in UNIT_HEX.cells if c.o == DOWN)) is Color.WHITE

    def test_cell_outside_region(self):
        with pytest.raises(RegionError):
            color(rectangle(1, 2), Cell(5, 5))

    @pytest.mark.parametrize("region", [rectangle(3, 4), hexagon(2, 3, 1), triangle(4), RING])
    def test_proper_two_coloring(self, region):
        for c in region.cells:
            for n in region.neighbors(c):
                assert region.is_black(c) != region.is_black(n)


class TestBoundary:
    def test_square_perimeter(self):
        cycles = boundary_cycles(rectangle(2, 2))
        assert [len(c) for c in cycles] == [8]

    def test_ring(self):
        assert [len(c) for c in boundary_cycles(RING)] == [12, 4]

    def test_unit_hexagon(self):
        assert [len(c) for c in boundary_cycles(UNIT_HEX)] == [6]

    def test_pinched_hole_gets_its_own_cycle(self):
        # hole at (1, 1) touching the outside only at vertex (2, 2)
        r = Region.square([(0, 0), (1, 0), (2, 0), (0, 1), (2, 1), (0, 2), (1, 2), (1, 3)])
        assert r.hole_count == 1
        assert [len(c) for c in r.boundary_cycles] == [14, 4]
        assert (2, 2) in r.boundary_cycles[0] and (2, 2) in r.boundary_cycles[1]

    def test_euler_characteristic_matches_hole_count(self):
        rng = random.Random(7)
        for lattice in Lattice:
            for _ in range(60):
                r = random_region(lattice, rng.randint(1, 30), rng)
                chi = len(r.vertices) - len(r.edges) + len(r.cells)
                assert r.hole_count == 1 - chi


class TestAdjacency:
    @pytest.mark.parametrize(
        "region, v, e",
        [(rectangle(2, 2), 4, 4), (rectangle(2, 3), 6, 7), (UNIT_HEX, 6, 6)],
    )
    def test_sizes(self, region, v, e):
        g = adjacency(region)
        assert len(g.black) + len(g.white) == v
        assert len(g.edges) == e

    @pytest.mark.parametrize("region", [rectangle(3, 4), hexagon(2, 2, 2), RING, square_minus(5, 5, [(2, 2)])])
    def test_faces_match_embedding(self, region):
        g = adjacency(region)
        black = set(g.black)
        for b, w in g.edges:
            assert b in black and w not in black
        # Euler: V - E + F = 2 for a connected plane graph
        assert len(g.black) + len(g.white) - len(g.edges) + len(g.faces) == 2

    def test_unit_square_faces(self):
        g = adjacency(rectangle(2, 2))
        assert sorted(len(f) for f in g.bounded_faces) == [4]


class TestCuts:
    def test_simply_connected_has_none(self):
        assert cuts_basis(rectangle(2, 2)) == []

    def test_ring(self):
        (cut,) = cuts_basis(RING)
        assert len(cut) >= 1
        validate_cut(RING, cut)
        validate_cut(RING, cut.reversed())

    def test_two_holes(self):
        r = square_minus(4, 6, [(1, 1), (4, 1)])
        cuts = cuts_basis(r)
        assert len(cuts) == r.hole_count == 2
        for c in cuts:
            validate_cut(r, c)

    def test_invalid_cuts(self):
        with pytest.raises(InvalidCutError):
            validate_cut(RING, Cut(((2, 1),)))
        with pytest.raises(InvalidCutError):
            validate_cut(RING, Cut(((0, 0), (1, 0))))  # boundary edge
        with pytest.raises(InvalidCutError):
            validate_cut(RING, Cut(((1, 0), (1, 1), (1, 0))))


class TestShapes:
    def test_rectangle_orientation(self):
        r = rectangle(2, 3)
        assert max(c.x for c in r.cells) == 2 and max(c.y for c in r.cells) == 1
        assert recognize_rectangle(r) == (2, 3)
        assert recognize_rectangle(RING) is None

    @pytest.mark.parametrize("rcm", [(1, 1, 1), (2, 3, 1), (3, 1, 2), (2, 2, 2)])
    def test_hexagon(self, rcm):
        r = hexagon(*rcm)
        assert len(r) == 2 * (rcm[0] * rcm[1] + rcm[0] * rcm[2] + rcm[1] * rcm[2])
        assert recognize_hexagon(r)[:3] == rcm
        assert recognize_hexagon(r.translated(3, -2))[:3] == rcm

    def test_triangle_is_unbalanced(self):
        t = triangle(3)
        assert len(t) == 9 and not t.is_balanced
        assert recognize_hexagon(t) is None


lattices = st.sampled_from(list(Lattice))


@settings(max_examples=60, deadline=None)
@given(lattices, st.integers(1, 40), st.integers(0, 10**6))
def test_format_parse_roundtrip(lattice, n, seed):
    r = random_region(lattice, n, random.Random(seed)).normalized()
    assert parse_region(format_region(r)) == r


@settings(max_examples=40, deadline=None)
@given(lattices, st.integers(1, 30), st.integers(0, 10**6), st.integers(-5, 5), st.integers(-5, 5))
def test_translation_invariance(lattice, n, seed, dx, dy):
    r = random_region(lattice, n, random.Random(seed))
    moved = r.translated(2 * dx, 2 * dy)  # even shifts keep square colors
    assert moved.hole_count == r.hole_count
    assert len(moved.black_cells) == len(r.black_cells)
    assert len(adjacency(moved).edges) == len(adjacency(r).edges)
