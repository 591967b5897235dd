"""Discs in the plane with high-precision decimal coordinates.

Every predicate takes a tolerance; tangency within it counts as contact.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from decimal import Decimal, localcontext

DEFAULT_GEO_PRECISION = 50


def eps_for(precision: int) -> Decimal:
    return Decimal(10) ** -(precision - 10)


def D(x) -> Decimal:
    """Decimal from int, str or Decimal; floats go through repr to stay exact-looking."""
    if isinstance(x, Decimal):
        return x
    if isinstance(x, float):
        return Decimal(repr(x))
    return Decimal(x)


class GeometryError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Disc:
    cx: Decimal
    cy: Decimal
    r: Decimal
    closed: bool = False

    def __post_init__(self):
        for name in ("cx", "cy", "r"):
            object.__setattr__(self, name, D(getattr(self, name)))
        if not self.r > 0:
            raise GeometryError("radius must be positive")

    @property
    def center(self) -> tuple[Decimal, Decimal]:
        return (self.cx, self.cy)

    def to_json(self) -> dict:
        return {"c": [str(self.cx), str(self.cy)], "r": str(self.r)}

    @classmethod
    def from_json(cls, data, closed=False) -> "Disc":
        cx, cy = data["c"]
        return cls(D(cx), D(cy), D(data["r"]), closed)

    def as_open(self) -> "Disc":
        return Disc(self.cx, self.cy, self.r, False)

    def as_closed(self) -> "Disc":
        return Disc(self.cx, self.cy, self.r, True)


class Geo:
    """Precision P and tolerance eps = 10^-(P-10) for all geometric work."""

    def __init__(self, precision: int | None = None):
        if precision is None:
            precision = int(os.environ.get("NONARCH_GEO_PRECISION", DEFAULT_GEO_PRECISION))
        if precision < 12:
            raise ValueError("geometric precision must be at least 12 digits")
        self.precision = precision
        self.eps = eps_for(precision)

    def dist(self, a: Disc, b: Disc) -> Decimal:
        with _Prec(self.precision):
            dx = a.cx - b.cx
            dy = a.cy - b.cy
            return (dx * dx + dy * dy).sqrt()

    # predicates ---------------------------------------------------------

    def holes_meet(self, a: Disc, b: Disc) -> bool:
        """Closures of two open discs intersect (tangency within eps included)."""
        with _Prec(self.precision):
            s = a.r + b.r
            dx = a.cx - b.cx
            dy = a.cy - b.cy
            d2 = dx * dx + dy * dy
            # squared comparison is exact for exactly representable inputs
            if d2 <= s * s:
                return True
            return (d2.sqrt() - s) <= self.eps

    def hole_meets_boundary(self, outer: Disc, hole: Disc) -> bool:
        """The closure of ``hole`` is not inside int(outer), within eps."""
        with _Prec(self.precision):
            return self.dist(outer, hole) + hole.r >= outer.r - self.eps

    def disc_in_disc(self, inner: Disc, outer: Disc) -> bool:
        with _Prec(self.precision):
            return self.dist(inner, outer) + inner.r <= outer.r + self.eps

    def discs_disjoint(self, a: Disc, b: Disc) -> bool:
        """Open/closed pair with disjoint interiors-plus-one-boundary: d >= r_a + r_b - eps."""
        with _Prec(self.precision):
            return self.dist(a, b) >= a.r + b.r - self.eps

    # constructions --------------------------------------------------------

    def combine(self, d1: Disc, d2: Disc) -> Disc:
        """An open disc containing d1 and d2 with radius at most r1 + r2."""
        with _Prec(self.precision):
            d = self.dist(d1, d2)
            if d > d1.r + d2.r + self.eps:
                raise GeometryError("closures are disjoint")
            if d + d2.r <= d1.r:
                return d1.as_open()
            if d + d1.r <= d2.r:
                return d2.as_open()
            R = (d1.r + d2.r + d) / 2
            t = (R - d1.r) / d
            return Disc(d1.cx + t * (d2.cx - d1.cx), d1.cy + t * (d2.cy - d1.cy), R, False)

    def shrink(self, outer: Disc, hole: Disc) -> Disc:
        """A closed disc inside ``outer`` and missing ``hole``, radius at least R - r."""
        with _Prec(self.precision):
            d = self.dist(outer, hole)
            R, r = outer.r, hole.r
            if d >= R + r:
                return outer.as_closed()
            if d == 0:
                raise GeometryError("concentric outer disc and hole")
            if d + r < R - self.eps or d + R <= r:
                raise GeometryError("shrink hypotheses fail")
            Rp = (R + d - r) / 2
            t = (R - Rp) / d
            return Disc(outer.cx + t * (outer.cx - hole.cx),
                        outer.cy + t * (outer.cy - hole.cy), Rp, True)


class _Prec:
    __slots__ = ("prec", "_cm")

    def __init__(self, prec: int):
        self.prec = prec

    def __enter__(self):
        self._cm = localcontext()
        ctx = self._cm.__enter__()
        ctx.prec = self.prec
        return ctx

    def __exit__(self, *exc):
        return self._cm.__exit__(*exc)


def boundary_points(disc: Disc, count: int, geo: Geo) -> list[tuple[Decimal, Decimal]]:
    """``count`` points on the boundary circle.

    Uses the rational parametrisation ((1-t^2)/(1+t^2), 2t/(1+t^2)) so the
    samples sit on the circle to working precision, not to float precision.
    """
    out = []
    with _Prec(geo.precision):
        for k in range(count):
            # half-angles offset away from pi/2 so t stays finite
            t = D(math.tan(math.pi * (k + 0.5) / count - math.pi / 2))
            den = 1 + t * t
            out.append((disc.cx + disc.r * (1 - t * t) / den, disc.cy + disc.r * 2 * t / den))
    return out


def point_in_closed(pt, disc: Disc, geo: Geo, slack: Decimal | None = None) -> bool:
    slack = geo.eps if slack is None else slack
    with _Prec(geo.precision):
        dx = pt[0] - disc.cx
        dy = pt[1] - disc.cy
        return (dx * dx + dy * dy).sqrt() <= disc.r + slack
