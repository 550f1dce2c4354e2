"""Exact domino and lozenge tilings of planar regions.

Decides tileability with height functions, builds the extreme tilings,
counts tilings exactly by signed determinants and product formulas, and
studies the flip graph, flows across holes and boxed plane partitions.
"""

from .counting import count_tilings, det_unsigned, formula_count, hexagon_count, rectangle_count, sign_classes
from .errors import TilekitError
from .flips import FlipGraph, apply_flip, available_flips, distance, flip_graph, flow, flow_signature, orientation_counts
from .height import (
    HeightFunction,
    Untileable,
    heights_from_tiling,
    is_valid_height,
    join,
    max_heights,
    max_tiling,
    meet,
    min_heights,
    min_tiling,
    tiling_from_heights,
)
from .partitions import PlanePartition, macmahon_series, partition_to_tiling, tiling_to_partition
from .region import Cell, Lattice, Region, adjacency, cuts_basis, format_region, parse_region
from .shapes import hexagon, rectangle, triangle
from .tiling import Tiling, count_by_enumeration, enumerate_tilings, find_tiling, format_tiling, parse_tiling

__version__ = "0.1.0"

__all__ = [
    "Cell", "FlipGraph", "HeightFunction", "Lattice", "PlanePartition", "Region", "TilekitError",
    "Tiling", "Untileable", "adjacency", "apply_flip", "available_flips", "count_by_enumeration",
    "count_tilings", "cuts_basis", "det_unsigned", "distance", "enumerate_tilings", "find_tiling",
    "flip_graph", "flow", "flow_signature", "format_region", "format_tiling", "formula_count",
    "heights_from_tiling", "hexagon", "hexagon_count", "is_valid_height", "join", "macmahon_series",
    "max_heights", "max_tiling", "meet", "min_heights", "min_tiling", "orientation_counts",
    "parse_region", "parse_tiling", "partition_to_tiling", "rectangle", "rectangle_count",
    "sign_classes", "tiling_from_heights", "tiling_to_partition", "triangle",
]
