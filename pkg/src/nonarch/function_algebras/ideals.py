"""The subsets O, O^x, J and M^y of C(X, tau, g) cut out by omega."""

from __future__ import annotations

from dataclasses import dataclass

from .core import AlgebraSpec, FnTable, is_member


@dataclass(frozen=True)
class IdealView:
    kind: str  # "O" | "Ox" | "J" | "My"
    spec: AlgebraSpec
    point: object = None

    def __post_init__(self):
        if self.kind not in ("O", "Ox", "J", "My"):
            raise ValueError(f"unknown ideal kind {self.kind!r}")
        if self.kind == "My" and self.point not in self.spec.space:
            raise ValueError("M^y needs a point of X")

    def contains(self, f: FnTable) -> bool:
        if self.kind == "O":
            return in_O(f, self.spec)
        if self.kind == "Ox":
            return in_O_units(f, self.spec)
        if self.kind == "J":
            return in_J(f, self.spec)
        return in_My(f, self.spec, self.point)


def _omegas(f: FnTable, spec: AlgebraSpec):
    return [spec.field.omega(v) for v in f.values]


def in_O(f: FnTable, spec: AlgebraSpec) -> bool:
    return bool(is_member(f, spec)) and min(_omegas(f, spec)) >= 0


def in_O_units(f: FnTable, spec: AlgebraSpec) -> bool:
    return bool(is_member(f, spec)) and all(w == 0 for w in _omegas(f, spec))


def in_J(f: FnTable, spec: AlgebraSpec) -> bool:
    return bool(is_member(f, spec)) and min(_omegas(f, spec)) > 0


def in_My(f: FnTable, spec: AlgebraSpec, y) -> bool:
    return in_O(f, spec) and spec.field.omega(f(y)) > 0


def maximality_witness(f: FnTable, spec: AlgebraSpec) -> FnTable:
    """f' = 0 where omega(f) = 0 and 1 where omega(f) > 0.

    For f in O with omega(f(y)) = 0, f' lies in M^y and f + f' is a unit of O.
    """
    field = spec.field
    zero, one = field.zero(), field.one()
    return f.map(lambda v: zero if field.omega(v) == 0 else one)
