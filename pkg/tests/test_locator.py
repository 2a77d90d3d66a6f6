import math
from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings, strategies as st

from monotree.angles import AngleRange
from monotree.geometry import strictly_inside
from monotree.locator import (
    GridVector,
    length_bound,
    locate_q1,
    locate_q12,
    locate_range,
    small_angle_point,
)

PI = math.pi
EPS = 1e-9


def inside(v, t1, t2):
    a = math.atan2(v[1], v[0])
    return t1 + EPS < a < t2 - EPS


def scan(t1, t2, limit):
    """Every grid vector with max(|x|, y) <= limit strictly inside the sector."""
    return [
        (x, y)
        for x in range(-limit, limit + 1)
        for y in range(0, limit + 1)
        if (x, y) != (0, 0) and t1 < math.atan2(y, x) < t2
    ]


@pytest.mark.parametrize(
    "t1, t2, expected",
    [
        (0, 0.1, (10, 1)),
        (PI / 8, PI / 4, (3, 2)),
        (0.2, 0.45, (4, 1)),
    ],
)
def test_small_angle_examples(t1, t2, expected):
    v = small_angle_point(t1, t2)
    assert v == expected
    assert inside(v, t1, t2)
    assert v in scan(t1, t2, max(expected))


@pytest.mark.parametrize(
    "t1, t2, expected",
    [
        (0, PI / 2, (1, 1)),
        (0, PI / 4, (2, 1)),
        (PI / 4, PI / 2, (1, 2)),
        (0.5, 0.6, (10, 6)),
    ],
)
def test_q1_examples(t1, t2, expected):
    v = locate_q1(t1, t2)
    assert v == expected
    assert inside(v, t1, t2)


@pytest.mark.parametrize(
    "b1, b2, expected",
    [
        (PI / 4, 3 * PI / 4, (0, 1)),
        (PI / 2, PI, (-1, 1)),
        (0, PI / 2, (1, 1)),
    ],
)
def test_q12_examples(b1, b2, expected):
    assert locate_q12(b1, b2) == expected


def test_preconditions():
    with pytest.raises(ValueError):
        small_angle_point(0.3, 0.9)
    with pytest.raises(ValueError):
        locate_q1(0.5, 0.5)
    with pytest.raises(ValueError):
        locate_q1(0.1, 2.0)
    with pytest.raises(ValueError):
        locate_q12(-0.1, 1.0)


def test_exact_ranges_strictly_inside():
    for den in range(2, 40):
        for a in range(den):
            for b in range(a + 1, den + 1):
                r = AngleRange(F(a, den), F(b, den))
                v = locate_range(r)
                if r.lo < F(1, 2) < r.hi:
                    assert v == (0, 1)
                else:
                    assert strictly_inside(v.x, v.y, r.lo, r.hi)


def test_exact_boundary_quarter():
    assert locate_range(AngleRange(F(1, 4), F(1, 2))) == (1, 2)
    assert locate_range(AngleRange(F(0), F(1, 4))) == (2, 1)
    assert locate_range(AngleRange(F(1, 2), F(3, 4))) == (-1, 2)
    assert locate_range(AngleRange(F(3, 4), F(1))) == (-2, 1)


def test_exact_mirror():
    for den in range(3, 30):
        for a in range(den // 2, den):
            for b in range(a + 1, den + 1):
                if F(a, den) < F(1, 2):
                    continue
                r = AngleRange(F(a, den), F(b, den))
                m = AngleRange(1 - r.hi, 1 - r.lo)
                x, y = locate_range(m)
                assert locate_range(r) == (-x, y)


sectors = st.tuples(st.floats(0, PI / 2), st.floats(0, PI / 2)).filter(
    lambda p: p[1] - p[0] > 1e-3
)


@settings(max_examples=500, deadline=None)
@given(sectors)
def test_q1_inside_and_short(s):
    t1, t2 = s
    v = locate_q1(t1, t2)
    assert isinstance(v, GridVector)
    assert v.x > 0 and v.y > 0
    assert inside(v, t1, t2)
    assert max(v) <= length_bound(t2 - t1)


@settings(max_examples=500, deadline=None)
@given(st.tuples(st.floats(0, PI), st.floats(0, PI)).filter(lambda p: p[1] - p[0] > 1e-3))
def test_q12_inside_and_mirror(s):
    b1, b2 = s
    v = locate_q12(b1, b2)
    assert v.y >= 1
    if b1 < PI / 2 < b2:
        assert v == (0, 1)
    else:
        assert inside(v, b1, b2)
        assert max(abs(v.x), v.y) <= length_bound(b2 - b1)
    if b1 >= PI / 2:
        x, y = locate_q1(PI - b2, PI - b1)
        assert v == (-x, y)


@settings(max_examples=300, deadline=None)
@given(sectors)
def test_scan_oracle_feasibility(s):
    t1, t2 = s
    d = length_bound(t2 - t1)
    assume(d <= 50)
    v = locate_q1(t1, t2)
    found = scan(t1, t2, d)
    assert found
    assert tuple(v) in found
