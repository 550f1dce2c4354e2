"""Command line interface.

Exit codes: 0 success, 1 negative answer (untileable, unreachable),
2 bad input or a refused request, 3 internal disagreement between methods.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import __version__
from .counting import count_tilings, formula_count
from .errors import EnumerationLimitError, TilekitError
from .flips import distance, flip_graph, flow_signature
from .height import (
    Untileable,
    format_heights,
    heights_from_tiling,
    max_tiling,
    min_tiling,
)
from .partitions import parse_partition, partition_to_tiling, tiling_to_partition
from .region import UP, Cell, Lattice, Region, cuts_basis, format_region, lattice_neighbors, parse_region
from .render import RenderStyle, render
from .shapes import hexagon, rectangle, triangle
from .tiling import Tiling, count_by_enumeration, find_tiling, format_tiling, parse_tiling

DEFAULT_LIMIT = 10**6


class UsageError(TilekitError):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _region(path: str) -> Region:
    return parse_region(_read(path))


def _tiling(region: Region, source: str) -> Tiling:
    """A tiling file, or ``min`` / ``max`` for the extreme tilings."""
    if source in ("min", "max"):
        t = (min_tiling if source == "min" else max_tiling)(region)
        if isinstance(t, Untileable):
            raise UsageError(f"region is untileable ({t.stage})")
        return t
    return parse_tiling(region, _read(source))


def _out(text: str) -> None:
    sys.stdout.write(text)


# --- subcommands ---------------------------------------------------------------


def cmd_check(args) -> int:
    region = _region(args.region)
    if region.is_simply_connected:
        t = min_tiling(region)
    elif not region.is_balanced:
        t = Untileable("color-imbalance")
    else:
        t = find_tiling(region) or Untileable("no-perfect-matching")
    if isinstance(t, Untileable):
        _out(f"untileable {t.stage}\n")
        return 1
    _out("tileable\n")
    if args.dump_heights:
        _out(format_heights(heights_from_tiling(region, t)))
    if args.print_tiling:
        _out(format_tiling(t))
    return 0


def cmd_count(args) -> int:
    region = _region(args.region)
    method = args.method
    if method == "det":
        _out(f"{count_tilings(region)}\n")
        return 0
    if method == "formula":
        value = formula_count(region)
        if value is None:
            raise UsageError("formula needs a full rectangle or a hexagon with opposite sides equal")
        _out(f"{value}\n")
        return 0
    if method == "enumerate":
        _out(f"{count_by_enumeration(region, args.limit)}\n")
        return 0

    rows: list[tuple[str, str]] = []
    values = []
    det = count_tilings(region)
    rows.append(("determinant", str(det)))
    values.append(det)
    formula = formula_count(region)
    rows.append(("formula", "n/a" if formula is None else str(formula)))
    if formula is not None:
        values.append(formula)
    skipped = ("enumerate", f"skipped (more than {args.limit} tilings)")
    if det > args.limit:
        rows.append(skipped)  # visiting that many tilings one by one would only hit the cap
    else:
        try:
            enum = count_by_enumeration(region, args.limit)
            rows.append(("enumerate", str(enum)))
            values.append(enum)
        except EnumerationLimitError:
            rows.append(skipped)
    width = max(len(name) for name, _ in rows)
    for name, val in rows:
        _out(f"{name:<{width}}  {val}\n")
    if len(set(values)) > 1:
        print("error: counting methods disagree", file=sys.stderr)
        return 3
    return 0


def cmd_distance(args) -> int:
    region = _region(args.region)
    t1 = _tiling(region, args.tiling1)
    t2 = _tiling(region, args.tiling2)
    if region.is_simply_connected:
        _out(f"{distance(t1, t2)}\n")
        return 0
    g = flip_graph(region, args.limit)
    index = {t.tiles: i for i, t in enumerate(g.tilings)}
    d = g.distance(index[t1.tiles], index[t2.tiles])
    if d is None:
        _out("unreachable\n")
        return 1
    _out(f"{d}\n")
    return 0


def cmd_components(args) -> int:
    region = _region(args.region)
    g = flip_graph(region, args.limit)
    cuts = cuts_basis(region)
    sigs = [flow_signature(t, cuts) for t in g.tilings]
    comps = g.components
    comp_sigs = [{sigs[i] for i in c} for c in comps]
    bijective = all(len(s) == 1 for s in comp_sigs) and len(
        {next(iter(s)) for s in comp_sigs}
    ) == len(comps)
    _out(f"tilings: {len(g)}\ncomponents: {len(comps)}\n")
    for k, (members, s) in enumerate(zip(comps, comp_sigs)):
        flows = " | ".join(" ".join(map(str, sig)) or "-" for sig in sorted(s))
        _out(f"component {k}: size {len(members)}, flows {flows}\n")
    if args.edges:
        _out(g.format_edges())
    if region.lattice is Lattice.TRIANGLE:
        _out(f"flows separate components: {'yes' if bijective else 'no'}\n")
    elif not bijective:
        print("error: flow signatures do not match flip-graph components", file=sys.stderr)
        return 3
    return 0


def cmd_render(args) -> int:
    region = _region(args.region)
    tiling = _tiling(region, args.tiling) if args.tiling else None
    heights = None
    if args.show_heights:
        if tiling is None:
            raise UsageError("--show-heights needs a tiling")
        heights = heights_from_tiling(region, tiling)
    style = RenderStyle(args.format, args.scale, args.show_heights, args.show_colors)
    text = render(region, tiling, heights, style)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        _out(text)
    return 0


def cmd_partition(args) -> int:
    if args.direction == "encode":
        region = _region(args.region)
        _out(f"{tiling_to_partition(_tiling(region, args.tiling))}\n")
        return 0
    p = parse_partition(_read(args.array), args.m)
    _out(format_tiling(partition_to_tiling(p, args.r, args.c, args.m)))
    return 0


def _random_region(n: int, lattice: Lattice, rng: random.Random) -> Region:
    """Grow a connected region cell by cell from a seeded RNG."""
    cells = {Cell(0, 0, UP) if lattice is Lattice.TRIANGLE else Cell(0, 0)}
    while len(cells) < n:
        frontier = {m for c in cells for m in lattice_neighbors(lattice, c)} - cells
        cells.add(rng.choice(sorted(frontier, key=lambda c: c.key)))
    return Region(lattice, frozenset(cells)).normalized()


def cmd_gen(args) -> int:
    kind = args.kind
    if kind in ("min", "max"):
        _out(format_tiling(_tiling(_region(args.params[0]), kind)))
        return 0
    try:
        nums = [int(p) for p in args.params]
    except ValueError:
        raise UsageError("generator parameters must be integers") from None
    expected = {"rect": 2, "hex": 3, "tri": 1, "random": 1}[kind]
    if len(nums) != expected:
        raise UsageError(f"gen {kind} takes {expected} integer parameter(s)")
    if min(nums) < 1:
        raise UsageError("generator parameters must be positive")
    if kind == "rect":
        region = rectangle(*nums)
    elif kind == "hex":
        region = hexagon(*nums)
    elif kind == "tri":
        region = triangle(*nums)
    else:
        lattice = Lattice(args.lattice)
        region = _random_region(nums[0], lattice, random.Random(args.seed))
    _out(format_region(region))
    return 0


def cmd_dump_heights(args) -> int:
    region = _region(args.region)
    tiling = _tiling(region, args.tiling)
    _out(format_heights(heights_from_tiling(region, tiling)))
    return 0


# --- parser ----------------------------------------------------------------------


def _global_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    def d(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--format", choices=("ascii", "svg"), default=d("ascii"))
    parser.add_argument("--scale", type=float, default=d(24.0), help="pixels per unit (svg)")
    parser.add_argument("--seed", type=int, default=d(0), help="seed for randomized tools")
    parser.add_argument(
        "--limit", type=int, default=d(DEFAULT_LIMIT), help="enumeration cap in tilings"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tilekit", description="Domino and lozenge tilings: existence, counting, flips."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _global_options(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="decide tileability")
    p.add_argument("region")
    p.add_argument("--dump-heights", action="store_true", help="print heights of the minimal tiling")
    p.add_argument("--print-tiling", action="store_true", help="print the minimal tiling")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("count", parents=[common], help="count tilings exactly")
    p.add_argument("region")
    p.add_argument("--method", choices=("det", "formula", "enumerate", "all"), default="det")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("distance", parents=[common], help="flip distance between two tilings")
    p.add_argument("region")
    p.add_argument("tiling1", help="tiling file, or min / max")
    p.add_argument("tiling2", help="tiling file, or min / max")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("components", parents=[common], help="flip-graph components and flows")
    p.add_argument("region")
    p.add_argument("--edges", action="store_true", help="also print the flip graph as 'i j' lines")
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("render", parents=[common], help="draw a region or a tiling")
    p.add_argument("region")
    p.add_argument("tiling", nargs="?", help="tiling file, or min / max")
    p.add_argument("--show-heights", action="store_true")
    p.add_argument("--show-colors", action="store_true")
    p.add_argument("-o", "--output", help="write to a file instead of standard output")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("partition", parents=[common], help="hexagon tilings <-> plane partitions")
    psub = p.add_subparsers(dest="direction", required=True)
    q = psub.add_parser("encode", parents=[common], help="tiling -> partition array")
    q.add_argument("region")
    q.add_argument("tiling", help="tiling file, or min / max")
    q = psub.add_parser("decode", parents=[common], help="partition array -> tiling of hexagon(r, c, m)")
    q.add_argument("array")
    q.add_argument("r", type=int)
    q.add_argument("c", type=int)
    q.add_argument("m", type=int)
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("gen", parents=[common], help="generate regions and extreme tilings")
    p.add_argument("kind", choices=("rect", "hex", "tri", "random", "min", "max"))
    p.add_argument("params", nargs="+", help="rect N M | hex R C M | tri N | random N | min/max REGION")
    p.add_argument("--lattice", choices=("square", "triangle"), default="square")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("dump-heights", parents=[common], help="print a height function")
    p.add_argument("region")
    p.add_argument("tiling", nargs="?", default="min", help="tiling file, or min / max")
    p.set_defaults(func=cmd_dump_heights)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (TilekitError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
