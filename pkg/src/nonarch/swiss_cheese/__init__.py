"""Finite Swiss cheeses and the classicalisation step map with certificates."""

from ._accel import BACKEND
from .engine import (
    Certificate,
    ClassicaliseResult,
    DiscAssignment,
    NotInH,
    StepRecord,
    SwissCheese,
    classicalise,
    delta,
    is_classical,
    min_collision,
    min_collision_exact,
    step,
    tamper,
    verify_certificate,
)
from .geometry import Disc, Geo, GeometryError, boundary_points, eps_for, point_in_closed
from .harness import HarnessRow, run_harness, run_instance
from .io import SchemaError, parse_cheese, random_cheese, render_svg


def combine_discs(d1: Disc, d2: Disc, geo: Geo | None = None) -> Disc:
    return (geo or Geo()).combine(d1, d2)


def shrink_outer(outer: Disc, hole: Disc, geo: Geo | None = None) -> Disc:
    return (geo or Geo()).shrink(outer, hole)


__all__ = [
    "BACKEND", "Certificate", "ClassicaliseResult", "DiscAssignment", "NotInH", "StepRecord",
    "SwissCheese", "classicalise", "delta", "is_classical", "min_collision",
    "min_collision_exact", "step", "tamper", "verify_certificate", "Disc", "Geo",
    "GeometryError", "boundary_points", "eps_for", "point_in_closed", "HarnessRow",
    "run_harness", "run_instance", "SchemaError", "parse_cheese", "random_cheese",
    "render_svg", "combine_discs", "shrink_outer",
]
