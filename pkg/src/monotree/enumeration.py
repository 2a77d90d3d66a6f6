"""Exhaustive enumeration of rooted and free (unrooted) unlabelled trees."""

from __future__ import annotations

from typing import Iterator, Sequence

from .tree import RootedTree, Tree, TreeError, root_at

MAX_ENUM_N = 14


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_ENUM_N:
        raise TreeError(f"enumeration supports 1 <= n <= {MAX_ENUM_N}, got {n}")


def level_sequences(n: int) -> Iterator[tuple[int, ...]]:
    """Canonical level sequences of all rooted trees on n vertices.

    Starts from the path and applies the Beyer-Hedetniemi successor rule
    until the star is reached, so each isomorphism class appears once.
    """
    _check_n(n)
    seq = list(range(n))
    while True:
        yield tuple(seq)
        p = n - 1
        while p > 0 and seq[p] <= 1:
            p -= 1
        if p == 0:
            return
        q = p - 1
        while seq[q] != seq[p] - 1:
            q -= 1
        shift = p - q
        for i in range(p, n):
            seq[i] = seq[i - shift]


def tree_from_levels(levels: Sequence[int]) -> Tree:
    """Tree with vertices numbered in preorder; vertex 0 is the root."""
    last_at_depth: dict[int, int] = {}
    edges = []
    for v, depth in enumerate(levels):
        if v:
            edges.append((last_at_depth[depth - 1], v))
        last_at_depth[depth] = v
    return Tree.from_edges(len(levels), edges)


def enumerate_rooted_trees(n: int) -> Iterator[RootedTree]:
    for levels in level_sequences(n):
        yield root_at(tree_from_levels(levels), 0)


def canonical_rooted(rt: RootedTree) -> str:
    """AHU string of a rooted tree, children sorted; equal iff isomorphic."""
    code: dict[int, str] = {}
    for v in reversed(rt.preorder()):
        code[v] = "(" + "".join(sorted(code[c] for c in rt.children[v])) + ")"
    return code[rt.root]


def centroids(tree: Tree) -> list[int]:
    n = tree.n
    rt = root_at(tree, 0)
    out = []
    for v in range(n):
        biggest = n - rt.subtree_size[v]
        for c in rt.children[v]:
            biggest = max(biggest, rt.subtree_size[c])
        if 2 * biggest <= n:
            out.append(v)
    return out


def canonical_free(tree: Tree) -> str:
    return min(canonical_rooted(root_at(tree, c)) for c in centroids(tree))


def enumerate_free_trees(n: int) -> Iterator[Tree]:
    """One tree per isomorphism class, in order of first appearance among the
    rooted enumeration."""
    seen: set[str] = set()
    for levels in level_sequences(n):
        tree = tree_from_levels(levels)
        key = canonical_free(tree)
        if key not in seen:
            seen.add(key)
            yield tree
