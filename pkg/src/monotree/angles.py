"""Angle-range assignment.

Angles are carried as multiples of pi: ``AngleRange(Fraction(1, 4), Fraction(1, 2))``
is the sector between 45 and 90 degrees. Every boundary produced by the
size-proportional split is a rational multiple of pi, so the exact mode never
rounds. The float mode exists for very large trees where denominators blow up.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .tree import RootedTree

Angle = Union[Fraction, float]

# switch to float angles above this many vertices unless told otherwise
EXACT_LIMIT = 10_000


@dataclass(frozen=True)
class AngleRange:
    lo: Angle
    hi: Angle

    def __post_init__(self) -> None:
        if not 0 <= self.lo < self.hi <= 1:
            raise ValueError(f"invalid angle range <{self.lo}pi, {self.hi}pi>")

    @property
    def length(self) -> Angle:
        return self.hi - self.lo

    @property
    def lo_rad(self) -> float:
        return float(self.lo) * math.pi

    @property
    def hi_rad(self) -> float:
        return float(self.hi) * math.pi

    @property
    def exact(self) -> bool:
        return isinstance(self.lo, Fraction) and isinstance(self.hi, Fraction)

    def contains(self, other: "AngleRange") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def __str__(self) -> str:
        return f"<{self.lo}pi, {self.hi}pi>"


QUADRANT_1 = AngleRange(Fraction(0), Fraction(1, 2))
HALF_PLANE = AngleRange(Fraction(0), Fraction(1))

AngleAssignment = tuple  # tuple[AngleRange, ...] indexed by vertex


def assign_child_ranges(
    parent: AngleRange, child_sizes: Sequence[int], parent_size: int
) -> list[AngleRange]:
    """Split ``parent`` among children left to right, each child getting a
    share proportional to its subtree size.

    The last child's upper boundary is pinned to ``parent.hi`` so the tiling is
    exact in float mode too.
    """
    if not child_sizes:
        return []
    total = parent_size - 1
    if any(s < 1 for s in child_sizes) or sum(child_sizes) != total:
        raise ValueError("child subtree sizes must be positive and sum to parent size - 1")
    span = parent.length
    out = []
    lo = parent.lo
    acc = 0
    for i, s in enumerate(child_sizes):
        acc += s
        if i == len(child_sizes) - 1:
            hi = parent.hi
        elif isinstance(span, Fraction):
            hi = lo + span * Fraction(s, total)
        else:
            hi = parent.lo + span * acc / total
        out.append(AngleRange(lo, hi))
        lo = hi
    return out


def assign_angles(
    rt: RootedTree, root_range: AngleRange = QUADRANT_1, exact: bool | None = None
) -> AngleAssignment:
    """Angle range of every vertex, root first, by repeated proportional splits.

    ``exact=None`` picks exact rationals up to ``EXACT_LIMIT`` vertices.
    """
    if exact is None:
        exact = rt.n <= EXACT_LIMIT
    if not exact:
        root_range = AngleRange(float(root_range.lo), float(root_range.hi))
    ranges: list[AngleRange | None] = [None] * rt.n
    ranges[rt.root] = root_range
    for u in rt.preorder():
        kids = rt.children[u]
        if kids:
            sizes = [rt.subtree_size[v] for v in kids]
            for v, r in zip(kids, assign_child_ranges(ranges[u], sizes, rt.subtree_size[u])):
                ranges[v] = r
    return tuple(ranges)


def apply_spine_reorder(rt: RootedTree, target: int) -> RootedTree:
    """Move every vertex on the path from the root to ``target`` to the end of
    its parent's child list, and flag those vertices as spine children.

    With the half-plane root range this hands each spine vertex a range ending
    at pi; the layout then draws its entering edge as a unit step to the left.
    """
    path = rt.path_from_root(target)
    if len(path) == 1:
        return rt
    children = list(rt.children)
    for parent, child in zip(path, path[1:]):
        children[parent] = tuple(c for c in children[parent] if c != child) + (child,)
    return RootedTree(
        rt.tree, rt.root, rt.parent, tuple(children), rt.subtree_size, frozenset(path[1:])
    )
