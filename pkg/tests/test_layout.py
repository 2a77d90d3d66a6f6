import math

import pytest
from hypothesis import given, settings, strategies as st

from monotree.angles import assign_angles
from monotree.layout import (
    FOUR_Q,
    ONE_Q,
    TWO_Q,
    GridDims,
    draw,
    draw_four_quadrants,
    draw_one_quadrant,
    draw_two_quadrants,
    grid_dims,
)
from monotree.locator import length_bound
from monotree.tree import Tree, gen_complete_binary, gen_path, gen_random, partition_at_gravity_root, root_at


def star(n):
    return Tree.from_edges(n, [(0, i) for i in range(1, n)])


def test_grid_dims_examples():
    assert grid_dims([(0, 0), (14, 14)]) == GridDims(15, 15)
    assert grid_dims([(0, 0)]) == GridDims(1, 1)
    assert grid_dims([(-2, 0), (2, 2)]) == GridDims(5, 3)
    assert str(GridDims(5, 3)) == "5x3"
    with pytest.raises(ValueError):
        grid_dims([])


def test_one_quadrant_path():
    d = draw_one_quadrant(root_at(gen_path(15), 0))
    assert d.coords == tuple((i, i) for i in range(15))
    assert grid_dims(d) == (15, 15)


def test_one_quadrant_two_vertices():
    d = draw_one_quadrant(root_at(gen_path(2), 0))
    assert d.coords == ((0, 0), (1, 1))


def test_one_quadrant_single_vertex():
    d = draw(Tree.from_edges(1, []), ONE_Q, 0)
    assert d.coords == ((0, 0),)


def test_two_quadrant_star():
    d = draw_two_quadrants(star(5))
    assert d.root_used == 0
    assert d.coords[1:] == ((2, 1), (1, 2), (-1, 2), (-2, 1))
    assert grid_dims(d) == (5, 3)


def test_two_quadrant_path():
    d = draw_two_quadrants(gen_path(15))
    assert d.root_used == 7
    assert grid_dims(d) == (15, 8)


def test_four_quadrant_path():
    assert grid_dims(draw_four_quadrants(gen_path(15))) in {(8, 11), (11, 8)}


def test_four_quadrant_small():
    assert draw_four_quadrants(Tree.from_edges(1, [])).coords == ((0, 0),)
    d = draw_four_quadrants(gen_path(2))
    assert d.algorithm == FOUR_Q and d.coords == ((0, 0), (0, 1))
    # T1 = {1, 0} with the spine step to the left, T2 = {1, 2} reflected below
    d = draw_four_quadrants(gen_path(3))
    assert d.root_used == 1
    assert d.coords == ((0, 0), (-1, 0), (0, -1))
    assert grid_dims(d) == (2, 2)


def test_binary_tree_sizes_within_theorem_bounds():
    t = gen_complete_binary(5)
    w, h = grid_dims(draw(t, ONE_Q, 0))
    assert w <= 31 and h <= 31
    w, h = grid_dims(draw(t, TWO_Q))
    assert w <= 31 and h <= 16
    w, h = grid_dims(draw(t, FOUR_Q))
    assert max(w, h) <= 24


def test_unknown_algorithm():
    with pytest.raises(ValueError):
        draw(gen_path(3), "eight_q")
    with pytest.raises(ValueError):
        draw(gen_path(3), ONE_Q)


trees = st.builds(gen_random, st.integers(1, 80), st.integers(0, 10**6))


@settings(max_examples=100, deadline=None)
@given(trees, st.integers(0, 10**6))
def test_one_quadrant_invariants(t, k):
    rt = root_at(t, k % t.n)
    d = draw_one_quadrant(rt)
    assert d.coords[rt.root] == (0, 0)
    assert len(set(d.coords)) == t.n
    assert all(x > 0 and y > 0 for v, (x, y) in enumerate(d.coords) if v != rt.root)
    a = assign_angles(rt)
    for v in range(t.n):
        p = rt.parent[v]
        if p >= 0:
            dx = d.coords[v][0] - d.coords[p][0]
            dy = d.coords[v][1] - d.coords[p][1]
            assert max(dx, dy) <= length_bound(float(a[v].length) * math.pi)


@settings(max_examples=100, deadline=None)
@given(trees)
def test_two_quadrant_invariants(t):
    d = draw_two_quadrants(t)
    assert d.coords[d.root_used] == (0, 0)
    assert len(set(d.coords)) == t.n
    assert all(y >= 1 for v, (x, y) in enumerate(d.coords) if v != d.root_used)


@settings(max_examples=100, deadline=None)
@given(st.builds(gen_random, st.integers(3, 80), st.integers(0, 10**6)))
def test_four_quadrant_lower_part_off_axis(t):
    d = draw_four_quadrants(t)
    p = partition_at_gravity_root(t)
    r = p.shared_root
    ry = d.coords[r][1]
    for v in p.t2_vertices - {r}:
        assert d.coords[v][1] < ry
    for v in p.t1_vertices:
        assert d.coords[v][1] >= ry
    assert len(set(d.coords)) == t.n


def test_deterministic():
    t = gen_random(300, 5)
    for algo in (ONE_Q, TWO_Q, FOUR_Q):
        assert draw(t, algo, 0).coords == draw(t, algo, 0).coords


def test_float_mode_close_to_exact():
    t = gen_random(200, 9)
    for algo in (ONE_Q, TWO_Q, FOUR_Q):
        d = draw(t, algo, 0, exact=False)
        assert len(set(d.coords)) == t.n
