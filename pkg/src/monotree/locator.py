"""Short grid vectors whose slope falls strictly inside a given sector.

Two entry points per operation: radian floats (``locate_q1`` and friends) and
``AngleRange`` values carried as exact multiples of pi (``locate_range``). The
exact path classifies every pi/4 and pi/2 boundary without rounding; only
arctan(1/2), which no rational multiple of pi can equal, is compared in float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, NamedTuple

from .angles import AngleRange
from .geometry import slope_rad, strictly_inside

ATAN_HALF = math.atan(0.5)
QUARTER = Fraction(1, 4)
HALF = Fraction(1, 2)


class GridVector(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class _Sector:
    t1: float  # radians
    t2: float
    width: float
    lo_ge_quarter: bool  # t1 >= pi/4
    hi_le_quarter: bool  # t2 <= pi/4
    wide: bool  # width > pi/4
    inside: Callable[[int, int], bool]
    # tan(pi/2 - t2), computed without cancellation when t2 is exact
    cot_hi: float


def _radian_sector(t1: float, t2: float) -> _Sector:
    return _Sector(
        t1, t2, t2 - t1,
        t1 >= math.pi / 4, t2 <= math.pi / 4, t2 - t1 > math.pi / 4,
        lambda x, y: t1 < slope_rad(x, y) < t2,
        math.tan(math.pi / 2 - t2),
    )


def _exact_sector(q1, q2) -> _Sector:
    return _Sector(
        float(q1) * math.pi, float(q2) * math.pi, float(q2 - q1) * math.pi,
        q1 >= QUARTER, q2 <= QUARTER, q2 - q1 > QUARTER,
        lambda x, y: strictly_inside(x, y, q1, q2),
        math.tan(float(HALF - q2) * math.pi),
    )


def _depth(width: float) -> int:
    # 0.6 - 0.5 is 0.0999..98 in doubles; do not let that push d to 11
    return max(1, math.ceil(1 / width - 1e-9))


def _small_angle(s: _Sector) -> GridVector:
    d = _depth(s.width)
    try:
        return _nudge(s, d, math.floor(math.tan(s.t1) * d + 1), vary_y=True)
    except ArithmeticError:
        d += 1
        return _nudge(s, d, math.floor(math.tan(s.t1) * d + 1), vary_y=True)


def _nudge(s: _Sector, x: int, y: int, vary_y: bool) -> GridVector:
    """Repair a float rounding miss by moving the free coordinate one step."""
    if s.inside(x, y):
        return GridVector(x, y)
    for step in (-1, 1, -2, 2):
        cx, cy = (x, y + step) if vary_y else (x + step, y)
        if cx >= 0 and cy >= 0 and (cx, cy) != (0, 0) and s.inside(cx, cy):
            return GridVector(cx, cy)
    raise ArithmeticError(f"no grid point found near ({x},{y}) in sector ({s.t1}, {s.t2})")


def _q1(s: _Sector) -> GridVector:
    if s.wide:
        return GridVector(1, 1)
    if s.width > ATAN_HALF:
        if s.lo_ge_quarter:
            return GridVector(1, 2)
        if s.t1 >= ATAN_HALF:
            return GridVector(1, 1)
        return GridVector(2, 1)
    if s.hi_le_quarter:
        return _small_angle(s)
    if s.lo_ge_quarter:
        d = _depth(s.width)
        try:
            return _nudge(s, math.floor(s.cot_hi * d + 1), d, vary_y=False)
        except ArithmeticError:
            d += 1
            return _nudge(s, math.floor(s.cot_hi * d + 1), d, vary_y=False)
    return GridVector(1, 1)


def small_angle_point(theta1: float, theta2: float) -> GridVector:
    """``(d, floor(tan(theta1)*d + 1))`` with ``d = ceil(1/(theta2-theta1))``,
    for sectors inside [0, pi/4]."""
    if not 0 <= theta1 < theta2 <= math.pi / 4:
        raise ValueError(f"need 0 <= theta1 < theta2 <= pi/4, got ({theta1}, {theta2})")
    return _small_angle(_radian_sector(theta1, theta2))


def locate_q1(theta1: float, theta2: float) -> GridVector:
    """Grid vector strictly inside a first-quadrant sector (radians)."""
    if not 0 <= theta1 < theta2 <= math.pi / 2:
        raise ValueError(f"need 0 <= theta1 < theta2 <= pi/2, got ({theta1}, {theta2})")
    return _q1(_radian_sector(theta1, theta2))


def locate_q12(beta1: float, beta2: float) -> GridVector:
    """Grid vector inside an upper half-plane sector (radians).

    Returns (0, 1) whenever pi/2 is strictly inside; otherwise a first-quadrant
    vector, or the x-mirror of one for sectors in the second quadrant.
    """
    if not 0 <= beta1 < beta2 <= math.pi:
        raise ValueError(f"need 0 <= beta1 < beta2 <= pi, got ({beta1}, {beta2})")
    if beta1 < math.pi / 2 < beta2:
        return GridVector(0, 1)
    if beta2 <= math.pi / 2:
        return locate_q1(beta1, beta2)
    x, y = locate_q1(math.pi - beta2, math.pi - beta1)
    return GridVector(-x, y)


def locate_range(r: AngleRange) -> GridVector:
    """Exact-boundary version of ``locate_q12`` for a range in multiples of pi."""
    lo, hi = r.lo, r.hi
    if lo < HALF < hi:
        return GridVector(0, 1)
    if hi <= HALF:
        return _q1(_exact_sector(lo, hi))
    x, y = _q1(_exact_sector(1 - hi, 1 - lo))
    return GridVector(-x, y)


def length_bound(width: float) -> int:
    """Integer form of the edge-length bound ``ceil((pi/2) / width)``."""
    return math.ceil((math.pi / 2) / width)
