"""Independent checks on a finished drawing.

Everything here works from the coordinates and integer predicates; none of it
reuses the layout code paths. The one-, two- and four-quadrant size bounds are
checked against the tagged algorithm.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ._kernels import first_non_monotone_pair
from .angles import AngleAssignment
from .geometry import slope_cmp
from .layout import FOUR_Q, ONE_Q, TWO_Q, Drawing, GridDims, grid_dims
from .tree import RootedTree, Tree

PASS, FAIL, NOT_APPLICABLE = "pass", "fail", "not_applicable"


def _cross(ax: int, ay: int, bx: int, by: int) -> int:
    return ax * by - ay * bx


def _half(v: tuple[int, int]) -> int:
    x, y = v
    return 0 if y > 0 or (y == 0 and x > 0) else 1


def _angle_order(a: tuple[int, int], b: tuple[int, int]) -> int:
    """Compare slopes in [0, 2pi) exactly; 0 for equal directions."""
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return ha - hb
    c = _cross(*a, *b)
    return -1 if c > 0 else (1 if c < 0 else 0)


def _tree_path(tree: Tree, u: int, v: int) -> list[int]:
    parent = {u: -1}
    queue = [u]
    for w in queue:
        if w == v:
            break
        for x in tree.adjacency[w]:
            if x not in parent:
                parent[x] = w
                queue.append(x)
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def path_vectors_monotone(vectors: list[tuple[int, int]]) -> bool:
    """True iff some direction has strictly positive dot product with every
    vector, i.e. the sorted directions leave a circular gap wider than pi."""
    dirs = set()
    for x, y in vectors:
        if x == 0 and y == 0:
            return False
        g = math.gcd(x, y)
        dirs.add((x // g, y // g))
    if len(dirs) == 1:
        return True
    ordered = sorted(dirs, key=functools.cmp_to_key(_angle_order))
    for a, b in zip(ordered, ordered[1:] + ordered[:1]):
        if _cross(*a, *b) < 0:
            return True
    return False


def monotone_pair(d: Drawing, u: int, v: int) -> bool:
    if u == v:
        raise ValueError("monotone_pair needs two distinct vertices")
    path = _tree_path(d.tree, u, v)
    c = d.coords
    vecs = [(c[b][0] - c[a][0], c[b][1] - c[a][1]) for a, b in zip(path, path[1:])]
    return path_vectors_monotone(vecs)


def first_non_monotone(d: Drawing) -> Optional[tuple[int, int]]:
    tree = d.tree
    indptr = np.zeros(tree.n + 1, np.int64)
    for v, nbrs in enumerate(tree.adjacency):
        indptr[v + 1] = indptr[v] + len(nbrs)
    indices = np.fromiter((u for nbrs in tree.adjacency for u in nbrs), np.int64, int(indptr[-1]))
    xs = np.array([p[0] for p in d.coords], np.int64)
    ys = np.array([p[1] for p in d.coords], np.int64)
    s, t = first_non_monotone_pair(indptr, indices, xs, ys)
    return None if s < 0 else (int(s), int(t))


def monotone_drawing(d: Drawing) -> bool:
    return first_non_monotone(d) is None


# -- planarity --------------------------------------------------------------


def _orient(p, q, r) -> int:
    v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (v > 0) - (v < 0)


def _on_segment(p, q, r) -> bool:
    """q on closed segment pr, given the three are collinear."""
    return min(p[0], r[0]) <= q[0] <= max(p[0], r[0]) and min(p[1], r[1]) <= q[1] <= max(p[1], r[1])


def segments_intersect(p1, q1, p2, q2) -> bool:
    o1, o2 = _orient(p1, q1, p2), _orient(p1, q1, q2)
    o3, o4 = _orient(p2, q2, p1), _orient(p2, q2, q1)
    if o1 != o2 and o3 != o4 and 0 not in (o1, o2, o3, o4):
        return True
    return (
        (o1 == 0 and _on_segment(p1, p2, q1))
        or (o2 == 0 and _on_segment(p1, q2, q1))
        or (o3 == 0 and _on_segment(p2, p1, q2))
        or (o4 == 0 and _on_segment(p2, q1, q2))
    )


def first_crossing(d: Drawing, tree: Tree | None = None) -> Optional[tuple[tuple[int, int], tuple[int, int]]]:
    """First pair of edges that meet anywhere except a shared endpoint."""
    tree = tree or d.tree
    c = d.coords
    if len(set(c)) != len(c):
        seen: dict = {}
        for v, p in enumerate(c):
            if p in seen:
                return ((seen[p], seen[p]), (v, v))
            seen[p] = v
    edges = sorted(tree.edges(), key=lambda e: min(c[e[0]][0], c[e[1]][0]))
    for i, (a, b) in enumerate(edges):
        pa, pb = c[a], c[b]
        right = max(pa[0], pb[0])
        for e, f in edges[i + 1:]:
            pe, pf = c[e], c[f]
            if min(pe[0], pf[0]) > right:
                break
            shared = {a, b} & {e, f}
            if shared:
                w = shared.pop()
                s = b if a == w else a
                t = f if e == w else e
                ws, wt = c[w], (c[s], c[t])
                vs = (wt[0][0] - ws[0], wt[0][1] - ws[1])
                vt = (wt[1][0] - ws[0], wt[1][1] - ws[1])
                if _cross(*vs, *vt) == 0 and vs[0] * vt[0] + vs[1] * vt[1] > 0:
                    return ((a, b), (e, f))
            elif segments_intersect(pa, pb, pe, pf):
                return ((a, b), (e, f))
    return None


def planar(d: Drawing, tree: Tree | None = None) -> bool:
    return first_crossing(d, tree) is None


# -- angle-range properties -------------------------------------------------


@dataclass(frozen=True)
class NssdResult:
    status: str
    prop: Optional[str] = None  # "P1", "P2" or "P3"
    vertex: Optional[int] = None

    def __bool__(self) -> bool:
        return self.status == PASS


def check_nssd(d: Drawing, a: AngleAssignment | None = None, rt: RootedTree | None = None) -> NssdResult:
    """Check the three non-strict slope-disjoint properties.

    P1 is checked per edge against the tightest boundaries over the child
    endpoint and all of its ancestors, which is exactly the set of ranges the
    edge must respect.
    """
    if d.algorithm == FOUR_Q:
        return NssdResult(NOT_APPLICABLE)
    a = a if a is not None else d.angle_assignment
    rt = rt or d.rooted
    if a is None or rt is None:
        return NssdResult(NOT_APPLICABLE)
    c = d.coords

    for u in rt.preorder():
        kids = rt.children[u]
        for v in kids:
            if not (a[u].lo <= a[v].lo < a[v].hi <= a[u].hi):
                return NssdResult(FAIL, "P2", v)
        by_lo = sorted(kids, key=lambda v: a[v].lo)
        for v, w in zip(by_lo, by_lo[1:]):
            if a[v].hi > a[w].lo:
                return NssdResult(FAIL, "P3", w)

    # (lo bound, hi bound) tightest along the root path, inclusive
    bounds = {rt.root: (a[rt.root].lo, a[rt.root].hi)}
    for u in rt.preorder():
        for v in rt.children[u]:
            lo = max(bounds[u][0], a[v].lo)
            hi = min(bounds[u][1], a[v].hi)
            bounds[v] = (lo, hi)
            x, y = c[v][0] - c[u][0], c[v][1] - c[u][1]
            if (x, y) == (0, 0) or not (slope_cmp(x, y, lo) > 0 and slope_cmp(x, y, hi) < 0):
                return NssdResult(FAIL, "P1", v)
    return NssdResult(PASS)


# -- size bounds and embedding ---------------------------------------------


def odd(n: int) -> int:
    return n % 2


def allowed_dims(algorithm: str, n: int) -> GridDims:
    if algorithm == ONE_Q:
        return GridDims(n, n)
    if algorithm == TWO_Q:
        if odd(n):
            return GridDims(n, (n + 1) // 2)
        return GridDims(n + 1, n // 2 + 1)
    if algorithm == FOUR_Q:
        side = 3 * (n + 2) // 4
        return GridDims(side, side)
    raise ValueError(f"unknown algorithm {algorithm!r}")


@dataclass(frozen=True)
class BoundCheck:
    ok: bool
    observed: GridDims
    allowed: GridDims

    def __bool__(self) -> bool:
        return self.ok


def check_bounds(d: Drawing, n: int | None = None) -> BoundCheck:
    n = d.n if n is None else n
    obs = grid_dims(d)
    allowed = allowed_dims(d.algorithm, n)
    ok = obs.width_points <= allowed.width_points and obs.height_points <= allowed.height_points
    return BoundCheck(ok, obs, allowed)


def check_embedding(d: Drawing, rt: RootedTree | None = None) -> Optional[bool]:
    """Child edge slopes strictly increase in child order around every vertex.

    ``None`` for four-quadrant drawings, which do not keep the embedding.
    """
    if d.algorithm == FOUR_Q:
        return None
    rt = rt or d.rooted
    if rt is None:
        return None
    c = d.coords
    for u in range(rt.n):
        vecs = [(c[v][0] - c[u][0], c[v][1] - c[u][1]) for v in rt.children[u]]
        for p, q in zip(vecs, vecs[1:]):
            if _angle_order(p, q) >= 0:
                return False
    return True


@dataclass(frozen=True)
class VerificationReport:
    monotone: bool
    monotone_witness: Optional[tuple[int, int]]
    planar: bool
    planar_witness: Optional[tuple]
    nssd: NssdResult
    bounds: BoundCheck
    embedding_ok: Optional[bool]

    @property
    def ok(self) -> bool:
        return (
            self.monotone
            and self.planar
            and self.nssd.status != FAIL
            and self.bounds.ok
            and self.embedding_ok is not False
        )


def verify(d: Drawing, check_planarity: bool = True) -> VerificationReport:
    mono = first_non_monotone(d)
    cross = first_crossing(d) if check_planarity else None
    return VerificationReport(
        monotone=mono is None,
        monotone_witness=mono,
        planar=cross is None,
        planar_witness=cross,
        nssd=check_nssd(d),
        bounds=check_bounds(d),
        embedding_ok=check_embedding(d),
    )
