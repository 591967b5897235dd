"""Pure-Python twin of the compiled collision prefilter."""

from __future__ import annotations

import math


def collision_candidates(xs, ys, rs, ox, oy, oR, slack):
    n = len(xs)
    out = []
    for j in range(n):
        d = math.hypot(xs[j] - ox, ys[j] - oy)
        tol = slack * (oR + d + rs[j] + 1.0)
        if d + rs[j] >= oR - tol:
            out.append((0, j + 1))
    for i in range(n):
        xi, yi, ri = xs[i], ys[i], rs[i]
        for j in range(i + 1, n):
            d = math.hypot(xi - xs[j], yi - ys[j])
            tol = slack * (ri + rs[j] + d + 1.0)
            if d <= ri + rs[j] + tol:
                out.append((i + 1, j + 1))
    return out
