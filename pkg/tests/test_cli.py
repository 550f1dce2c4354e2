from __future__ import annotations

import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from suites import square_minus
from tilekit.cli import main
from tilekit.height import heights_from_tiling, min_tiling, parse_heights
from tilekit.region import format_region, parse_region
from tilekit.shapes import hexagon, rectangle
from tilekit.tiling import enumerate_tilings, format_tiling, parse_tiling

SVG = "{http://www.w3.org/2000/svg}"


@pytest.fixture
def run(capsys):
    def _run(*argv):
        code = main([str(a) for a in argv])
        out = capsys.readouterr()
        return code, out.out, out.err

    return _run


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return write


@pytest.fixture
def r22(files):
    return files("r22.txt", format_region(rectangle(2, 2)))


@pytest.fixture
def hex222(files):
    return files("hex.txt", format_region(hexagon(2, 2, 2)))


class TestCheck:
    def test_tileable(self, run, r22):
        assert run("check", r22) == (0, "tileable\n", "")

    def test_untileable(self, run, files):
        trap = files("trap.txt", "square\n.#..\n####\n..#.\n")
        assert run("check", trap)[:2] == (1, "untileable interior-contradiction\n")
        ell = files("ell.txt", "square\n#.\n##\n")
        assert run("check", ell)[:2] == (1, "untileable color-imbalance\n")

    def test_multiply_connected_fallback(self, run, files):
        ring = files("ring.txt", format_region(square_minus(3, 3, [(1, 1)])))
        assert run("check", ring)[:2] == (0, "tileable\n")
        odd = files("odd.txt", format_region(square_minus(4, 4, [(1, 1)])))
        assert run("check", odd)[:2] == (1, "untileable color-imbalance\n")
        # balanced, with a hole, yet no perfect matching
        stuck = files("stuck.txt", "square\n.#.##\n##.##\n.####\n##.##\n#####\n")
        assert run("check", stuck)[:2] == (1, "untileable no-perfect-matching\n")

    def test_dumps(self, run, r22):
        code, out, _ = run("check", r22, "--dump-heights", "--print-tiling")
        assert code == 0
        lines = out.splitlines()
        region = rectangle(2, 2)
        h = parse_heights(region, "\n".join(lines[1:10]))
        t = parse_tiling(region, "\n".join(lines[10:]))
        assert t == min_tiling(region)
        assert h == heights_from_tiling(region, t)

    def test_input_errors(self, run, files, tmp_path):
        code, out, err = run("check", tmp_path / "nope.txt")
        assert code == 2 and out == "" and err.startswith("error:")
        assert run("check", files("bad.txt", "square\n#?\n"))[0] == 2
        assert run("check", files("empty.txt", ""))[0] == 2


class TestCount:
    def test_det(self, run, hex222):
        assert run("count", hex222)[:2] == (0, "20\n")

    def test_untileable(self, run, files):
        assert run("count", files("t.txt", "square\n#.\n##\n"))[:2] == (0, "0\n")

    def test_methods(self, run, files):
        f = files("r.txt", format_region(rectangle(4, 4)))
        for method in ("det", "formula", "enumerate"):
            assert run("count", f, "--method", method)[:2] == (0, "36\n")

    def test_all_table(self, run, files):
        f = files("r.txt", format_region(rectangle(3, 4)))
        code, out, _ = run("count", f, "--method", "all")
        assert code == 0
        rows = dict(line.split(None, 1) for line in out.splitlines())
        assert rows == {"determinant": "11", "formula": "11", "enumerate": "11"}

    def test_all_without_formula(self, run, files):
        f = files("ring.txt", format_region(square_minus(5, 5, [(2, 2)])))
        code, out, _ = run("count", f, "--method", "all")
        assert code == 0 and "n/a" in out and "196" in out

    def test_all_skips_large_enumeration(self, run, files):
        f = files("r.txt", format_region(rectangle(8, 8)))
        code, out, _ = run("count", f, "--method", "all")
        assert code == 0
        assert out.count("12988816") == 2 and "skipped" in out

    def test_formula_refused(self, run, files):
        f = files("ring.txt", format_region(square_minus(3, 3, [(1, 1)])))
        code, _, err = run("count", f, "--method", "formula")
        assert code == 2 and "formula" in err

    def test_enumerate_limit(self, run, files):
        f = files("r.txt", format_region(rectangle(4, 4)))
        code, _, err = run("count", f, "--method", "enumerate", "--limit", "10")
        assert code == 2 and "limit" in err

    def test_mismatch_exit_code(self, run, files, monkeypatch):
        import tilekit.cli as cli

        monkeypatch.setattr(cli, "count_tilings", lambda region: 37)
        f = files("r.txt", format_region(rectangle(4, 4)))
        code, _, err = run("count", f, "--method", "all")
        assert code == 3 and "disagree" in err


class TestDistance:
    def test_examples(self, run, r22, files):
        a, b = (files(f"t{i}.txt", format_tiling(t)) for i, t in enumerate(enumerate_tilings(rectangle(2, 2))))
        assert run("distance", r22, a, a)[:2] == (0, "0\n")
        assert run("distance", r22, a, b)[:2] == (0, "1\n")

    def test_extremes(self, run, hex222):
        assert run("distance", hex222, "min", "max")[:2] == (0, "8\n")

    def test_unreachable(self, run, files):
        region = square_minus(3, 3, [(1, 1)])
        ring = files("ring.txt", format_region(region))
        a, b = (files(f"g{i}.txt", format_tiling(t)) for i, t in enumerate(enumerate_tilings(region)))
        assert run("distance", ring, a, b)[:2] == (1, "unreachable\n")
        assert run("distance", ring, a, a)[:2] == (0, "0\n")

    def test_bfs_fallback(self, run, files):
        region = square_minus(5, 5, [(2, 2)])
        f = files("r.txt", format_region(region))
        ts = enumerate_tilings(region)
        a, b = files("a.txt", format_tiling(ts[0])), files("b.txt", format_tiling(ts[1]))
        code, out, _ = run("distance", f, a, b)
        assert code in (0, 1) and out.strip()

    def test_invalid_tiling(self, run, r22, files):
        assert run("distance", r22, files("bad.txt", "0 0 1 1\n"), "min")[0] == 2
        assert run("distance", r22, files("junk.txt", "zero\n"), "min")[0] == 2


class TestComponents:
    def test_rectangle(self, run, files):
        code, out, _ = run("components", files("r.txt", format_region(rectangle(2, 4))))
        assert code == 0
        assert "components: 1" in out and "size 5" in out

    def test_ring(self, run, files):
        code, out, _ = run("components", files("r.txt", format_region(square_minus(3, 3, [(1, 1)]))))
        assert code == 0
        assert "components: 2" in out
        flows = [line.rsplit("flows ", 1)[1] for line in out.splitlines() if line.startswith("component ")]
        assert len(set(flows)) == 2

    def test_unit_hexagon(self, run, files):
        code, out, _ = run("components", files("h.txt", format_region(hexagon(1, 1, 1))), "--edges")
        assert code == 0
        assert "components: 1" in out and "size 2" in out
        assert out.splitlines()[-2:] == ["0 1", "flows separate components: yes"]

    def test_limit(self, run, files):
        code, _, err = run("components", files("r.txt", format_region(rectangle(6, 6))), "--limit", "100")
        assert code == 2 and "more than 100 tilings" in err


class TestRender:
    def test_horizontal_bars(self, run, r22, files):
        t = files("t.txt", format_tiling(min_tiling(rectangle(2, 2))))
        code, out, _ = run("render", r22, t)
        assert code == 0
        assert out == "┌───────┐\n│       │\n├───────┤\n│       │\n└───────┘\n"

    def test_region_only(self, run, r22):
        code, out, _ = run("render", r22)
        assert code == 0 and out.count("┼") == 1

    def test_lozenges(self, run, files):
        f = files("h.txt", format_region(hexagon(1, 1, 1)))
        code, out, _ = run("render", f, "max")
        assert code == 0
        assert set(out) <= set(" /\\_\n")
        assert out.count("/") and out.count("\\") and out.count("_")

    def test_svg_polygons(self, run, hex222):
        code, out, _ = run("render", hex222, "min", "--format", "svg")
        assert code == 0
        root = ET.fromstring(out)
        tiles = [p for p in root.iter(SVG + "polygon") if p.get("class") == "tile"]
        assert len(tiles) == 12
        assert all(len(p.get("points").split()) == 4 for p in tiles)

    def test_svg_deterministic_and_scaled(self, run, hex222):
        a = run("--format", "svg", "render", hex222, "max", "--scale", "10")[1]
        b = run("render", hex222, "max", "--format", "svg", "--scale", "10")[1]
        assert a == b
        big = run("render", hex222, "max", "--format", "svg", "--scale", "40")[1]
        assert float(ET.fromstring(big).get("width")) > float(ET.fromstring(a).get("width"))

    def test_heights_labels(self, run, r22):
        region = rectangle(2, 2)
        h = heights_from_tiling(region, min_tiling(region))
        code, out, _ = run("render", r22, "min", "--show-heights")
        assert code == 0
        table = out.split("heights:\n", 1)[1]
        assert parse_heights(region, table) == h
        svg = run("render", r22, "min", "--show-heights", "--format", "svg")[1]
        labels = [t.text for t in ET.fromstring(svg).iter(SVG + "text")]
        assert sorted(map(int, labels)) == sorted(h.values.values())

    def test_colors(self, run, r22):
        out = run("render", r22, "--show-colors")[1]
        assert out.count("░") == 6  # two black cells, three columns each
        svg = run("render", r22, "--show-colors", "--format", "svg")[1]
        fills = [p.get("fill") for p in ET.fromstring(svg).iter(SVG + "polygon")]
        assert fills.count("#303030") == 2

    def test_output_file(self, run, r22, tmp_path):
        target = tmp_path / "out.svg"
        code, out, _ = run("render", r22, "min", "--format", "svg", "-o", target)
        assert code == 0 and out == ""
        ET.parse(target)

    def test_heights_need_tiling(self, run, r22):
        assert run("render", r22, "--show-heights")[0] == 2

    def test_bad_scale(self, run, r22):
        assert run("render", r22, "--scale", "0")[0] == 2


class TestPartition:
    def test_encode_decode(self, run, files):
        f = files("h.txt", format_region(hexagon(2, 2, 2)))
        code, out, _ = run("partition", "encode", f, "max")
        assert (code, out) == (0, "2 2\n2 2\n")
        arr = files("p.txt", "1 0\n0 0\n")
        code, out, _ = run("partition", "decode", arr, 2, 2, 2)
        assert code == 0
        region = hexagon(2, 2, 2)
        t = parse_tiling(region, out)
        code, out, _ = run("partition", "encode", f, files("t.txt", format_tiling(t)))
        assert out == "1 0\n0 0\n"

    def test_invalid(self, run, files):
        assert run("partition", "decode", files("p.txt", "0 1\n0 0\n"), 2, 2, 2)[0] == 2
        assert run("partition", "decode", files("p.txt", "3\n"), 1, 1, 2)[0] == 2
        assert run("partition", "encode", files("r.txt", format_region(rectangle(2, 2))), "min")[0] == 2


class TestGen:
    def test_shapes(self, run):
        assert parse_region(run("gen", "rect", 3, 4)[1]) == rectangle(3, 4)
        assert parse_region(run("gen", "hex", 1, 2, 3)[1]) == hexagon(1, 2, 3).normalized()
        assert len(parse_region(run("gen", "tri", 4)[1])) == 16

    def test_random_is_seeded(self, run):
        a = run("gen", "random", 15, "--seed", 4)[1]
        assert a == run("--seed", "4", "gen", "random", 15)[1]
        assert len(parse_region(a)) == 15
        assert a != run("gen", "random", 15, "--seed", 5)[1]
        assert run("gen", "random", 15)[1] == run("gen", "random", 15, "--seed", 0)[1]
        tri = parse_region(run("gen", "random", 9, "--lattice", "triangle")[1])
        assert len(tri) == 9

    def test_extremes(self, run, r22):
        region = rectangle(2, 2)
        assert parse_tiling(region, run("gen", "min", r22)[1]) == min_tiling(region)
        assert run("gen", "max", r22)[1] != run("gen", "min", r22)[1]

    def test_untileable_extreme(self, run, files):
        assert run("gen", "min", files("ell.txt", "square\n#.\n##\n"))[0] == 2

    @pytest.mark.parametrize("args", [("rect", 2), ("rect", 0, 2), ("hex", 1, "x", 1), ("tri", -1)])
    def test_bad_parameters(self, run, args):
        assert run("gen", *args)[0] == 2


class TestDumpHeights:
    def test_default_is_min(self, run, r22):
        region = rectangle(2, 2)
        code, out, _ = run("dump-heights", r22)
        assert code == 0
        assert parse_heights(region, out) == heights_from_tiling(region, min_tiling(region))

    def test_holes_rejected(self, run, files):
        f = files("ring.txt", format_region(square_minus(3, 3, [(1, 1)])))
        code, _, err = run("dump-heights", f)
        assert code == 2 and "hole" in err


def test_argparse_errors_exit_2(run):
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["count", "x.txt", "--method", "magic"])
    assert exc.value.code == 2


def test_module_entry_point(tmp_path):
    path = tmp_path / "r.txt"
    path.write_text(format_region(rectangle(2, 2)))
    proc = subprocess.run([sys.executable, "-m", "tilekit", "check", str(path)], capture_output=True, text=True)
    assert (proc.returncode, proc.stdout) == (0, "tileable\n")
    proc = subprocess.run([sys.executable, "-m", "tilekit", "--version"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("tilekit ")
