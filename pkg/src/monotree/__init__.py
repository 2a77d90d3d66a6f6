"""Monotone grid drawings of trees.

Three constructions are provided: a rooted one-quadrant drawing on an n x n
grid, an order-preserving two-quadrant drawing rooted at a gravity root, and a
roughly square four-quadrant drawing. ``monotree.verify`` checks any
drawing for monotonicity, planarity, slope-disjointness and the size bounds.
"""

from .angles import AngleRange, apply_spine_reorder, assign_angles, assign_child_ranges
from .enumeration import enumerate_free_trees, enumerate_rooted_trees
from .layout import (
    FOUR_Q,
    ONE_Q,
    TWO_Q,
    Drawing,
    GridDims,
    draw,
    draw_four_quadrants,
    draw_one_quadrant,
    draw_two_quadrants,
    grid_dims,
)
from .locator import GridVector, locate_q1, locate_q12, small_angle_point
from .tree import (
    Partition,
    RootedTree,
    Tree,
    TreeError,
    gen_complete_binary,
    gen_path,
    gen_random,
    gravity_root,
    partition_at_gravity_root,
    root_at,
)
from .verify import check_bounds, check_embedding, check_nssd, monotone_drawing, monotone_pair, planar, verify

__all__ = [
    "AngleRange", "Drawing", "FOUR_Q", "GridDims", "GridVector", "ONE_Q", "Partition",
    "RootedTree", "TWO_Q", "Tree", "TreeError", "apply_spine_reorder", "assign_angles",
    "assign_child_ranges", "check_bounds", "check_embedding", "check_nssd", "draw",
    "draw_four_quadrants", "draw_one_quadrant", "draw_two_quadrants", "enumerate_free_trees",
    "enumerate_rooted_trees", "gen_complete_binary", "gen_path", "gen_random", "grid_dims",
    "gravity_root", "locate_q1", "locate_q12", "monotone_drawing", "monotone_pair",
    "partition_at_gravity_root", "planar", "root_at", "small_angle_point", "verify",
]
