"""The one-, two- and four-quadrant monotone tree drawings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .angles import (
    HALF_PLANE,
    QUADRANT_1,
    AngleAssignment,
    AngleRange,
    apply_spine_reorder,
    assign_angles,
)
from .locator import locate_range
from .tree import RootedTree, Tree, gravity_root, partition_at_gravity_root, root_at

ONE_Q, TWO_Q, FOUR_Q = "one_q", "two_q", "four_q"
ALGORITHMS = (ONE_Q, TWO_Q, FOUR_Q)


class GridDims(NamedTuple):
    width_points: int
    height_points: int

    def __str__(self) -> str:
        return f"{self.width_points}x{self.height_points}"


@dataclass(frozen=True)
class Drawing:
    tree: Tree
    coords: tuple[tuple[int, int], ...]
    algorithm: str
    root_used: int
    angle_assignment: Optional[AngleAssignment] = None
    rooted: Optional[RootedTree] = None
    # gravity root of T1 in a four-quadrant drawing
    secondary_root: Optional[int] = None

    @property
    def n(self) -> int:
        return self.tree.n


def grid_dims(d: Drawing | list[tuple[int, int]]) -> GridDims:
    pts = d.coords if isinstance(d, Drawing) else d
    if not pts:
        raise ValueError("empty drawing")
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    return GridDims(max(xs) - min(xs) + 1, max(ys) - min(ys) + 1)


def _place(rt: RootedTree, ranges: AngleAssignment) -> list[tuple[int, int]]:
    coords = [(0, 0)] * rt.n
    for u in rt.preorder():
        ux, uy = coords[u]
        for v in rt.children[u]:
            if v in rt.spine:
                coords[v] = (ux - 1, uy)
            else:
                dx, dy = locate_range(ranges[v])
                coords[v] = (ux + dx, uy + dy)
    return coords


def _draw_rooted(rt: RootedTree, root_range: AngleRange, exact: bool | None) -> tuple[list, AngleAssignment]:
    ranges = assign_angles(rt, root_range, exact)
    return _place(rt, ranges), ranges


def draw_one_quadrant(rt: RootedTree, exact: bool | None = None) -> Drawing:
    """Root at the origin, root range <0, pi/2>, embedding respected."""
    coords, ranges = _draw_rooted(rt, QUADRANT_1, exact)
    return Drawing(rt.tree, tuple(coords), ONE_Q, rt.root, ranges, rt)


def draw_two_quadrants(tree: Tree, exact: bool | None = None) -> Drawing:
    """Gravity root at the origin with range <0, pi>, embedding respected."""
    rt = root_at(tree, gravity_root(tree))
    coords, ranges = _draw_rooted(rt, HALF_PLANE, exact)
    return Drawing(tree, tuple(coords), TWO_Q, rt.root, ranges, rt)


def draw_two_quadrants_with_spine(tree: Tree, target: int, exact: bool | None = None) -> Drawing:
    """Upper-half drawing rooted at the gravity root, with the path to
    ``target`` moved last at every level and drawn as unit steps to the left."""
    rt = apply_spine_reorder(root_at(tree, gravity_root(tree)), target)
    coords, ranges = _draw_rooted(rt, HALF_PLANE, exact)
    return Drawing(tree, tuple(coords), TWO_Q, rt.root, ranges, rt)


def draw_four_quadrants(tree: Tree, exact: bool | None = None) -> Drawing:
    """Split at the gravity root r; draw the larger part T1 in the upper half
    plane with the path from its own gravity root to r laid along the negative
    x-axis, and the smaller part T2 below r as a reflected one-quadrant drawing.
    """
    n = tree.n
    if n <= 2:
        d = draw_two_quadrants(tree, exact)
        return Drawing(tree, d.coords, FOUR_Q, d.root_used, secondary_root=d.root_used)
    part = partition_at_gravity_root(tree)
    r = part.shared_root

    t1_ids = sorted(part.t1_vertices)
    t1 = tree.relabel(t1_ids)
    upper = draw_two_quadrants_with_spine(t1, t1_ids.index(r), exact)
    c1 = upper.coords

    t2_ids = sorted(part.t2_vertices)
    t2 = tree.relabel(t2_ids)
    c2, _ = _draw_rooted(root_at(t2, t2_ids.index(r)), QUADRANT_1, exact)

    coords: list[tuple[int, int]] = [(0, 0)] * n
    for i, v in enumerate(t1_ids):
        coords[v] = c1[i]
    rx, ry = coords[r]
    for i, v in enumerate(t2_ids):
        if v != r:
            x, y = c2[i]
            coords[v] = (rx + x, ry - y)
    return Drawing(tree, tuple(coords), FOUR_Q, r, secondary_root=t1_ids[upper.root_used])


def draw(tree: Tree, algorithm: str, root: int | None = None, exact: bool | None = None) -> Drawing:
    if algorithm == ONE_Q:
        if root is None:
            raise ValueError("the one-quadrant drawing needs a root")
        return draw_one_quadrant(root_at(tree, root), exact)
    if algorithm == TWO_Q:
        return draw_two_quadrants(tree, exact)
    if algorithm == FOUR_Q:
        return draw_four_quadrants(tree, exact)
    raise ValueError(f"unknown algorithm {algorithm!r}")
