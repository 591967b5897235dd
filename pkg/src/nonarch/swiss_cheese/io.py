"""Cheese JSON validation, SVG snapshots and the seeded random generator."""

from __future__ import annotations

import random
from decimal import Decimal, InvalidOperation

from ..errors import SchemaError
from .engine import SwissCheese
from .geometry import Disc, GeometryError


def _num(value, path: str) -> Decimal:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise SchemaError(path, "expected a decimal string or an integer")
    try:
        d = Decimal(value)
    except InvalidOperation:
        raise SchemaError(path, f"not a decimal number: {value!r}") from None
    if not d.is_finite():
        raise SchemaError(path, "number must be finite")
    return d


def _disc(obj, path: str, closed: bool) -> Disc:
    if not isinstance(obj, dict):
        raise SchemaError(path, "expected an object with keys c and r")
    if "c" not in obj:
        raise SchemaError(f"{path}.c", "missing")
    if "r" not in obj:
        raise SchemaError(f"{path}.r", "missing")
    c = obj["c"]
    if not isinstance(c, list) or len(c) != 2:
        raise SchemaError(f"{path}.c", "expected a pair")
    cx = _num(c[0], f"{path}.c[0]")
    cy = _num(c[1], f"{path}.c[1]")
    r = _num(obj["r"], f"{path}.r")
    try:
        return Disc(cx, cy, r, closed)
    except GeometryError as e:
        raise SchemaError(f"{path}.r", str(e)) from None


def parse_cheese(data) -> SwissCheese:
    if not isinstance(data, dict):
        raise SchemaError("$", "expected an object")
    if "outer" not in data:
        raise SchemaError("$.outer", "missing")
    outer = _disc(data["outer"], "$.outer", True)
    holes = data.get("holes", [])
    if not isinstance(holes, list):
        raise SchemaError("$.holes", "expected a list")
    return SwissCheese(outer, tuple(_disc(h, f"$.holes[{i}]", False) for i, h in enumerate(holes)))


# -- svg ----------------------------------------------------------------------


def _f(x) -> str:
    return f"{float(x):.4f}"


def _panel(cheese: SwissCheese, x0: float, cx: float, cy: float, label: str) -> list[str]:
    # SVG y grows downwards, so every y coordinate is negated
    o = cheese.outer
    out = [f'<g transform="translate({_f(x0 - cx)},{_f(cy)})">',
           f'<circle cx="{_f(o.cx)}" cy="{_f(-o.cy)}" r="{_f(o.r)}" fill="none" '
           f'stroke="black" stroke-width="0.01"/>']
    for h in cheese.holes:
        out.append(f'<circle cx="{_f(h.cx)}" cy="{_f(-h.cy)}" r="{_f(h.r)}" '
                   f'fill="#888" fill-opacity="0.6" stroke="none"/>')
    out.append("</g>")
    return out


def render_svg(before: SwissCheese, after: SwissCheese | None = None) -> str:
    """Deterministic side-by-side SVG; the view box is fixed by the outer disc of ``before``."""
    R = float(before.outer.r)
    cx, cy = float(before.outer.cx), float(before.outer.cy)
    span = 2.6 * R
    panels = [(before, "before")] + ([(after, "after")] if after is not None else [])
    lines = [f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{_f(0)} {_f(-span / 2)} '
             f'{_f(span * len(panels))} {_f(span)}">']
    for k, (ch, label) in enumerate(panels):
        x0 = span * k + span / 2
        lines += _panel(ch, x0, cx, cy, label)
        lines.append(f'<text x="{_f(x0)}" y="{_f(-1.15 * R)}" font-size="{_f(0.08 * R)}" '
                     f'text-anchor="middle">{label}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


# -- random cheeses --------------------------------------------------------------


def random_cheese(rng: random.Random, n_holes: int, fill: float | None = None) -> SwissCheese:
    """Unit outer disc and ``n_holes`` holes whose radii sum to ``fill`` < 1.

    Centres fall in a disc of radius 1.15 so some holes cross the boundary.
    Coordinates are rounded to 6 decimals and passed as strings, so the input
    is exact.
    """
    if fill is None:
        fill = rng.uniform(0.3, 0.9)
    weights = [rng.random() + 0.05 for _ in range(n_holes)]
    total = sum(weights)
    holes = []
    for w in weights:
        r = max(round(fill * w / total, 6), 1e-6)
        while True:
            x, y = rng.uniform(-1.15, 1.15), rng.uniform(-1.15, 1.15)
            if x * x + y * y <= 1.15 ** 2:
                break
        holes.append(Disc(Decimal(f"{x:.6f}"), Decimal(f"{y:.6f}"), Decimal(f"{r:.6f}")))
    return SwissCheese(Disc(Decimal(0), Decimal(0), Decimal(1), True), tuple(holes))
