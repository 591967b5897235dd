"""Finite Stone spaces, their endomorphisms, and the algebras C(X, tau, g)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Any, Callable, Hashable, Iterable, Mapping, Sequence

from ..extensions.base import Field, GaloisAut


class SpecError(ValueError):
    """A malformed space, map or table."""


class InvalidSpec(ArithmeticError):
    """ord(tau) does not divide ord(g)."""


@dataclass(frozen=True)
class StoneSpace:
    points: tuple

    def __post_init__(self):
        pts = tuple(self.points)
        object.__setattr__(self, "points", pts)
        if not pts:
            raise SpecError("the space must be nonempty")
        if len(set(pts)) != len(pts):
            raise SpecError("point labels must be distinct")

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, x):
        return x in self.points


@dataclass(frozen=True)
class Endo:
    """A bijection of a finite space; ``order`` is its least period."""

    space: StoneSpace
    mapping: tuple  # image of space.points[i], in order

    def __post_init__(self):
        if len(self.mapping) != len(self.space):
            raise SpecError("map must be total on the space")
        if set(self.mapping) != set(self.space.points):
            raise SpecError("map must be a bijection of the space")

    @classmethod
    def from_dict(cls, space: StoneSpace, mapping: Mapping) -> "Endo":
        missing = [x for x in space.points if x not in mapping]
        if missing:
            raise SpecError(f"map undefined at {missing[0]!r}")
        return cls(space, tuple(mapping[x] for x in space.points))

    @classmethod
    def identity(cls, space: StoneSpace) -> "Endo":
        return cls(space, space.points)

    @classmethod
    def cycle(cls, space: StoneSpace, cycle: Sequence) -> "Endo":
        m = {x: x for x in space.points}
        for i, x in enumerate(cycle):
            m[x] = cycle[(i + 1) % len(cycle)]
        return cls.from_dict(space, m)

    @cached_property
    def _index(self) -> dict:
        return {x: self.mapping[i] for i, x in enumerate(self.space.points)}

    def __call__(self, x):
        return self._index[x]

    def power(self, n: int) -> "Endo":
        n %= self.order
        out = []
        for x in self.space.points:
            for _ in range(n):
                x = self(x)
            out.append(x)
        return Endo(self.space, tuple(out))

    def orbit(self, x) -> list:
        out = [x]
        y = self(x)
        while y != x:
            out.append(y)
            y = self(y)
        return out

    def orbits(self) -> list[list]:
        seen: set = set()
        out = []
        for x in self.space.points:
            if x not in seen:
                o = self.orbit(x)
                seen.update(o)
                out.append(o)
        return out

    def order_at(self, x) -> int:
        return len(self.orbit(x))

    @cached_property
    def order(self) -> int:
        return reduce(math.lcm, (len(o) for o in self.orbits()), 1)

    def to_dict(self) -> dict:
        return dict(self._index)


@dataclass(frozen=True)
class AlgebraSpec:
    space: StoneSpace
    tau: Endo
    g: GaloisAut

    @property
    def field(self) -> Field:
        return self.g.field

    @property
    def valid(self) -> bool:
        return self.g.order % self.tau.order == 0

    def require_valid(self):
        if not self.valid:
            raise InvalidSpec("ord(tau) does not divide ord(g)")

    def power(self, n: int) -> "AlgebraSpec":
        """(X, tau^n, g^n)."""
        return AlgebraSpec(self.space, self.tau.power(n), self.g ** n)

    def constant(self, c) -> "FnTable":
        return FnTable(self.space, tuple(c for _ in self.space.points))


class FnTable:
    """A function on a finite space, stored as a tuple aligned with ``space.points``."""

    __slots__ = ("space", "values")

    def __init__(self, space: StoneSpace, values: Sequence):
        if len(values) != len(space):
            raise SpecError("table must be total on the space")
        self.space = space
        self.values = tuple(values)

    @classmethod
    def from_dict(cls, space: StoneSpace, mapping: Mapping) -> "FnTable":
        missing = [x for x in space.points if x not in mapping]
        if missing:
            raise SpecError(f"table undefined at {missing[0]!r}")
        return cls(space, [mapping[x] for x in space.points])

    @classmethod
    def build(cls, space: StoneSpace, fn: Callable[[Any], Any]) -> "FnTable":
        return cls(space, [fn(x) for x in space.points])

    def __call__(self, x):
        return self.values[self.space.points.index(x)]

    def items(self):
        return zip(self.space.points, self.values)

    def map(self, fn) -> "FnTable":
        return FnTable(self.space, [fn(v) for v in self.values])

    def _zip(self, other, op) -> "FnTable":
        if isinstance(other, FnTable):
            if other.space != self.space:
                raise SpecError("tables on different spaces")
            return FnTable(self.space, [op(a, b) for a, b in zip(self.values, other.values)])
        return FnTable(self.space, [op(a, other) for a in self.values])

    def __add__(self, other):
        return self._zip(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._zip(other, lambda a, b: a - b)

    def __mul__(self, other):
        return self._zip(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __neg__(self):
        return self.map(lambda a: -a)

    def __eq__(self, other):
        if not isinstance(other, FnTable):
            return NotImplemented
        return self.space == other.space and all(
            a == b for a, b in zip(self.values, other.values))

    __hash__ = None

    def key(self) -> tuple:
        """Hashable form for tables over fields with hashable elements."""
        return tuple(getattr(v, "key", lambda: v)() for v in self.values)

    def __repr__(self):
        inner = ", ".join(f"{x!r}: {v!r}" for x, v in self.items())
        return f"FnTable({{{inner}}})"


def check_values(f: FnTable, field: Field):
    for x, v in f.items():
        if not field.contains(v):
            raise TypeError(f"value at {x!r} is not an element of {field.name}")


@dataclass(frozen=True)
class Membership:
    member: bool
    witness: Hashable | None = None

    def __bool__(self):
        return self.member


def is_member(f: FnTable, spec: AlgebraSpec) -> Membership:
    """Check f(tau(x)) = g(f(x)) pointwise; report the first failing x."""
    check_values(f, spec.field)
    for x, v in f.items():
        if not f(spec.tau(x)) == spec.g(v):
            return Membership(False, x)
    return Membership(True)


def sigma(f: FnTable, spec: AlgebraSpec, times: int = 1) -> FnTable:
    """sigma(f) = g^(ord(g)-1) o f o tau, applied ``times`` times."""
    m = spec.g.order
    ginv = spec.g ** (m - 1)
    for _ in range(times):
        f = FnTable.build(spec.space, lambda x, f=f: ginv(f(spec.tau(x))))
    return f


def sup_omega(f: FnTable, field: Field):
    """inf over X of omega(f(x)); the sup norm is p^(-this)."""
    return min(field.omega(v) for v in f.values)


def orbit_fixed_values(field: Field, g: GaloisAut, length: int) -> list:
    """Values v with g^length(v) = v, for a finite field."""
    h = g ** length
    return [v for v in field.elements() if h(v) == v]


def spec_from_cycles(points: Iterable, cycles: Iterable[Sequence], g: GaloisAut) -> AlgebraSpec:
    space = StoneSpace(tuple(points))
    m = {x: x for x in space.points}
    for c in cycles:
        for i, x in enumerate(c):
            m[x] = c[(i + 1) % len(c)]
    return AlgebraSpec(space, Endo.from_dict(space, m), g)
