"""Compiled inner loops for the whole-drawing checks."""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def first_non_monotone_pair(indptr, indices, xs, ys):
    """Scan every source with a DFS that carries the angular span of the path
    edge vectors seen so far, as a ccw arc from (ax, ay) to (bx, by) of width
    below pi. A path is monotone iff that arc stays below pi.

    Returns the first failing (source, target) pair or (-1, -1).
    """
    n = xs.shape[0]
    st_v = np.empty(n, np.int64)
    st_p = np.empty(n, np.int64)
    st_arc = np.empty((n, 4), np.int64)
    for s in range(n):
        top = 0
        st_v[0] = s
        st_p[0] = -1
        while top >= 0:
            v = st_v[top]
            p = st_p[top]
            ax = st_arc[top, 0]
            ay = st_arc[top, 1]
            bx = st_arc[top, 2]
            by = st_arc[top, 3]
            top -= 1
            for k in range(indptr[v], indptr[v + 1]):
                w = indices[k]
                if w == p:
                    continue
                ex = xs[w] - xs[v]
                ey = ys[w] - ys[v]
                if v == s:
                    nax, nay, nbx, nby = ex, ey, ex, ey
                else:
                    c_a = ax * ey - ay * ex  # cross(A, e)
                    c_b = ex * by - ey * bx  # cross(e, B)
                    if c_a >= 0 and c_b >= 0 and not (c_a == 0 and c_b == 0 and ax * ex + ay * ey < 0):
                        nax, nay, nbx, nby = ax, ay, bx, by
                    elif c_a > 0:
                        nax, nay, nbx, nby = ax, ay, ex, ey
                    elif c_b > 0:
                        nax, nay, nbx, nby = ex, ey, bx, by
                    else:
                        return s, w
                top += 1
                st_v[top] = w
                st_p[top] = v
                st_arc[top, 0] = nax
                st_arc[top, 1] = nay
                st_arc[top, 2] = nbx
                st_arc[top, 3] = nby
    return -1, -1
