"""JSON readers and writers for algebra specs and function tables."""

from __future__ import annotations

import re

from ..errors import SchemaError
from ..extensions import FIELDS, GaloisAut
from ..extensions.cyclotomic import CyclotomicField, sqrt5
from ..extensions.quadratic import QuadraticExtension
from .core import AlgebraSpec, Endo, FnTable, SpecError, StoneSpace

_G_NAMES = {"conj": 1, "frob": 1, "gen": 1, "id": 0}


def parse_g(text, field, path: str = "$.g") -> GaloisAut:
    if isinstance(text, int) and not isinstance(text, bool):
        return GaloisAut(field, text)
    if not isinstance(text, str):
        raise SchemaError(path, "expected a name or an integer power")
    if text in _G_NAMES:
        return GaloisAut(field, _G_NAMES[text])
    m = re.fullmatch(r"(?:g|gen|frob)\^(\d+)", text)
    if m:
        return GaloisAut(field, int(m.group(1)))
    raise SchemaError(path, f"unknown automorphism {text!r}")


def parse_field(name, path: str = "$.field"):
    if name not in FIELDS:
        raise SchemaError(path, f"unknown field {name!r}; expected one of {sorted(FIELDS)}")
    return FIELDS[name]


def parse_spec(data) -> AlgebraSpec:
    if not isinstance(data, dict):
        raise SchemaError("$", "expected an object")
    for key in ("points", "tau", "field"):
        if key not in data:
            raise SchemaError(f"$.{key}", "missing")
    pts = data["points"]
    if not isinstance(pts, list) or not all(isinstance(p, str) for p in pts):
        raise SchemaError("$.points", "expected a list of strings")
    tau = data["tau"]
    if not isinstance(tau, dict):
        raise SchemaError("$.tau", "expected an object mapping points to points")
    for k, v in tau.items():
        if k not in pts:
            raise SchemaError(f"$.tau.{k}", "not a point")
        if v not in pts:
            raise SchemaError(f"$.tau.{k}", f"image {v!r} is not a point")
    field = parse_field(data["field"])
    g = parse_g(data.get("g", "gen"), field)
    try:
        space = StoneSpace(tuple(pts))
        endo = Endo.from_dict(space, tau)
    except SpecError as e:
        raise SchemaError("$.tau" if "map" in str(e) else "$.points", str(e)) from None
    return AlgebraSpec(space, endo, g)


def spec_to_json(spec: AlgebraSpec) -> dict:
    return {"points": list(spec.space.points), "tau": spec.tau.to_dict(),
            "field": spec.field.name, "g": spec.g.power}


def parse_element(field, data, path: str):
    """Field element from JSON, with a few named shorthands."""
    if isinstance(data, str):
        s = data.strip()
        if isinstance(field, CyclotomicField):
            if s == "sqrt5":
                return sqrt5(field)
            m = re.fullmatch(r"z(?:eta)?\^?(\d*)", s)
            if m:
                return field.zeta(int(m.group(1) or 1))
        if isinstance(field, QuadraticExtension) and s in ("theta", field.symbol):
            return field.theta()
    try:
        return field.deserialize(data)
    except (ValueError, TypeError, KeyError, ZeroDivisionError) as e:
        raise SchemaError(path, f"not an element of {field.name}: {e}") from None


def parse_table(spec: AlgebraSpec, data) -> FnTable:
    if not isinstance(data, dict):
        raise SchemaError("$", "expected an object mapping points to values")
    vals = {}
    for x in spec.space.points:
        if x not in data:
            raise SchemaError(f"$.{x}", "missing value")
        vals[x] = parse_element(spec.field, data[x], f"$.{x}")
    return FnTable.from_dict(spec.space, vals)


def element_to_json(field, x):
    return field.serialize(x)


def table_to_json(f: FnTable, field) -> dict:
    return {str(x): element_to_json(field, v) for x, v in f.items()}
