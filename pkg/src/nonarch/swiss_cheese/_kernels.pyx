# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Float prefilter for disc collisions.

Reports every pair that might collide, with a relative slack, in
lexicographic order.  Exact confirmation happens in Decimal afterwards.
"""

from libc.math cimport sqrt, fabs


def collision_candidates(double[:] xs, double[:] ys, double[:] rs,
                         double ox, double oy, double oR, double slack):
    """Candidate colliding pairs (i, j), i < j, where 0 is the outer region
    and hole k sits at position k + 1."""
    cdef Py_ssize_t n = xs.shape[0]
    cdef Py_ssize_t i, j
    cdef double dx, dy, d, tol
    out = []
    for j in range(n):
        dx = xs[j] - ox
        dy = ys[j] - oy
        d = sqrt(dx * dx + dy * dy)
        tol = slack * (oR + fabs(d) + rs[j] + 1.0)
        if d + rs[j] >= oR - tol:
            out.append((0, j + 1))
    for i in range(n):
        for j in range(i + 1, n):
            dx = xs[i] - xs[j]
            dy = ys[i] - ys[j]
            d = sqrt(dx * dx + dy * dy)
            tol = slack * (rs[i] + rs[j] + d + 1.0)
            if d <= rs[i] + rs[j] + tol:
                out.append((i + 1, j + 1))
    return out

