"""Exact slope comparisons for integer vectors against rational multiples of pi."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

import mpmath

Angle = Union[Fraction, float]

_FAST_MARGIN = 1e-9


def octant_slope(x: int, y: int) -> Fraction | None:
    """Slope of (x, y) as a multiple of pi when it is a multiple of pi/4.

    These are the only lattice directions whose slope is a rational multiple
    of pi, hence the only ones that can tie with a rational boundary.
    """
    if x == 0 and y == 0:
        raise ValueError("zero vector has no slope")
    if y == 0:
        return Fraction(0) if x > 0 else Fraction(1)
    if x == 0:
        return Fraction(1, 2) if y > 0 else Fraction(3, 2)
    if abs(x) != abs(y):
        return None
    return {(1, 1): Fraction(1, 4), (-1, 1): Fraction(3, 4),
            (-1, -1): Fraction(5, 4), (1, -1): Fraction(7, 4)}[(x // abs(x), y // abs(y))]


def slope_rad(x: int, y: int) -> float:
    """Slope in [0, 2pi)."""
    a = math.atan2(y, x)
    return a + 2 * math.pi if a < 0 else a


def slope_cmp(x: int, y: int, q: Angle) -> int:
    """Sign of ``slope(x, y) - q*pi`` with slopes taken in [0, 2pi).

    Exact for rational ``q``: octant directions are compared as rationals, the
    rest in float when clearly separated and with 60-digit mpmath otherwise.
    """
    s = octant_slope(x, y)
    if s is not None and isinstance(q, Fraction):
        return (s > q) - (s < q)
    diff = slope_rad(x, y) - float(q) * math.pi
    if abs(diff) > _FAST_MARGIN or not isinstance(q, Fraction):
        return (diff > 0) - (diff < 0)
    with mpmath.workdps(60):
        a = mpmath.atan2(y, x)
        if a < 0:
            a += 2 * mpmath.pi
        d = a - mpmath.mpf(q.numerator) / q.denominator * mpmath.pi
        return (d > 0) - (d < 0)


def strictly_inside(x: int, y: int, lo: Angle, hi: Angle) -> bool:
    return slope_cmp(x, y, lo) > 0 and slope_cmp(x, y, hi) < 0
