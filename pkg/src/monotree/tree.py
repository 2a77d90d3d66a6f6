"""Trees, rootings, gravity roots and the two-way split used by the
four-quadrant drawing."""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class TreeError(ValueError):
    """Raised for input that does not describe a tree."""


@dataclass(frozen=True)
class Tree:
    """Unrooted tree on vertices ``0..n-1``.

    ``adjacency[v]`` is the ordered neighbour list of ``v``; that order is the
    embedding used by the order-respecting drawing algorithms.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = self.n
        if n < 1:
            raise TreeError("a tree needs at least one vertex")
        if len(self.adjacency) != n:
            raise TreeError(f"expected {n} adjacency lists, got {len(self.adjacency)}")
        degree_sum = 0
        for v, nbrs in enumerate(self.adjacency):
            if len(set(nbrs)) != len(nbrs):
                raise TreeError(f"duplicate neighbour in adjacency of {v}")
            for u in nbrs:
                if not 0 <= u < n or u == v:
                    raise TreeError(f"bad neighbour {u} of vertex {v}")
                if v not in self.adjacency[u]:
                    raise TreeError(f"edge ({v},{u}) missing from adjacency of {u}")
            degree_sum += len(nbrs)
        if degree_sum != 2 * (n - 1):
            raise TreeError(f"a tree on {n} vertices has {n - 1} edges, got {degree_sum // 2}")
        seen = [False] * n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            v = stack.pop()
            for u in self.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    count += 1
                    stack.append(u)
        if count != n:
            raise TreeError("graph is not connected")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Tree":
        """Build a tree whose adjacency order is the order edges appear in."""
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise TreeError(f"edge ({u},{v}) out of range for n={n}")
            adj[u].append(v)
            adj[v].append(u)
        return cls(n, tuple(tuple(a) for a in adj))

    def edges(self) -> list[tuple[int, int]]:
        """Edges in an order whose first-appearance reading reproduces every
        adjacency list.

        Such an order always exists for a tree; it is a topological order of the
        per-vertex precedence constraints, smallest available edge first.
        """
        if self.n == 1:
            return []
        key = lambda u, v: (u, v) if u < v else (v, u)  # noqa: E731
        pending: dict[tuple[int, int], int] = {}
        # an edge is ready once it is first among the unused edges at both ends
        pos = [0] * self.n
        for v, nbrs in enumerate(self.adjacency):
            if nbrs:
                e = key(v, nbrs[0])
                pending[e] = pending.get(e, 0) + 1
        heap = [e for e, c in pending.items() if c == 2]
        heapq.heapify(heap)
        out = []
        while heap:
            e = heapq.heappop(heap)
            out.append(e)
            for v in e:
                pos[v] += 1
                if pos[v] < len(self.adjacency[v]):
                    nxt = key(v, self.adjacency[v][pos[v]])
                    pending[nxt] = pending.get(nxt, 0) + 1
                    if pending[nxt] == 2:
                        heapq.heappush(heap, nxt)
        assert len(out) == self.n - 1
        return out

    def relabel(self, vertices: Sequence[int]) -> "Tree":
        """Induced subtree on ``vertices``; local id ``i`` is ``vertices[i]``.

        Adjacency order is inherited from this tree.
        """
        local = {v: i for i, v in enumerate(vertices)}
        adj = tuple(
            tuple(local[u] for u in self.adjacency[v] if u in local) for v in vertices
        )
        return Tree(len(vertices), adj)


@dataclass(frozen=True)
class RootedTree:
    tree: Tree
    root: int
    parent: tuple[int, ...]
    children: tuple[tuple[int, ...], ...]
    subtree_size: tuple[int, ...]
    # vertices whose entering edge is a spine edge, drawn as a (-1, 0) step
    spine: frozenset[int] = field(default_factory=frozenset)

    @property
    def n(self) -> int:
        return self.tree.n

    def preorder(self) -> list[int]:
        order = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            order.append(v)
            stack.extend(reversed(self.children[v]))
        return order

    def path_from_root(self, v: int) -> list[int]:
        path = [v]
        while v != self.root:
            v = self.parent[v]
            path.append(v)
        path.reverse()
        return path


def root_at(tree: Tree, root: int) -> RootedTree:
    if not 0 <= root < tree.n:
        raise TreeError(f"root {root} not a vertex of a {tree.n}-vertex tree")
    n = tree.n
    parent = [-1] * n
    order = [root]
    for v in order:
        for u in tree.adjacency[v]:
            if u != parent[v]:
                parent[u] = v
                order.append(u)
    size = [1] * n
    for v in reversed(order):
        if v != root:
            size[parent[v]] += size[v]
    children = tuple(
        tuple(u for u in tree.adjacency[v] if u != parent[v]) for v in range(n)
    )
    return RootedTree(tree, root, tuple(parent), children, tuple(size))


def gravity_root_trace(tree: Tree) -> list[tuple[int, int]]:
    """Candidate roots visited by the gravity-root walk.

    Each entry is ``(vertex, largest component of T minus vertex)``; the last
    entry is the gravity root. The walk starts at vertex 0 and moves to the
    neighbour inside the largest component, smallest id on ties.
    """
    n = tree.n
    rt = root_at(tree, 0)
    size, parent = rt.subtree_size, rt.parent

    def component(r: int, u: int) -> int:
        return n - size[r] if u == parent[r] else size[u]

    trace = []
    r = 0
    while True:
        best_u, best = -1, 0
        for u in sorted(tree.adjacency[r]):
            c = component(r, u)
            if c > best:
                best_u, best = u, c
        trace.append((r, best))
        if 2 * best <= n:
            return trace
        r = best_u


def gravity_root(tree: Tree) -> int:
    return gravity_root_trace(tree)[-1][0]


@dataclass(frozen=True)
class Partition:
    t1_vertices: frozenset[int]
    t2_vertices: frozenset[int]
    shared_root: int


def partition_at_gravity_root(tree: Tree) -> Partition:
    """Split T at its gravity root r into two subtrees sharing only r, each of
    at most (2n+1)/3 vertices, with ``|T1| >= |T2|``."""
    n = tree.n
    if n < 3:
        raise TreeError("partition needs at least 3 vertices")
    r = gravity_root(tree)
    rt = root_at(tree, r)
    kids = rt.children[r]
    sizes = [rt.subtree_size[c] for c in kids]
    m = max(sizes)

    def collect(starts: Iterable[int]) -> set[int]:
        out = {r}
        stack = list(starts)
        while stack:
            v = stack.pop()
            out.add(v)
            stack.extend(rt.children[v])
        return out

    if 3 * m >= n - 1:
        big = kids[sizes.index(m)]
        g1 = [big]
        g2 = [c for c in kids if c != big]
    else:
        g1, g2 = [], []
        s1 = s2 = 1
        for i in sorted(range(len(kids)), key=lambda i: (sizes[i], i)):
            if s1 <= s2:
                g1.append(kids[i])
                s1 += sizes[i]
            else:
                g2.append(kids[i])
                s2 += sizes[i]
    t1, t2 = collect(g1), collect(g2)
    if len(t1) < len(t2):
        t1, t2 = t2, t1
    return Partition(frozenset(t1), frozenset(t2), r)


# -- generators -------------------------------------------------------------


def gen_path(n: int) -> Tree:
    return Tree.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def gen_complete_binary(levels: int) -> Tree:
    """Complete binary tree with ``levels`` levels, heap numbered, children of
    ``i`` are ``2i+1`` then ``2i+2``."""
    if levels < 1:
        raise TreeError("levels must be >= 1")
    n = 2**levels - 1
    return Tree.from_edges(n, (((i - 1) // 2, i) for i in range(1, n)))


def gen_random(n: int, seed: int) -> Tree:
    """Uniformly random labelled tree, decoded from a random Pruefer sequence."""
    if n < 1:
        raise TreeError("n must be >= 1")
    if n <= 2:
        return gen_path(n)
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return Tree.from_edges(n, prufer_decode(seq, n))


def prufer_decode(seq: Sequence[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return edges
