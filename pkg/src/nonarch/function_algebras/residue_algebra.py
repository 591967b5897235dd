"""Expansions over g-stable representatives and the residue algebra O/J."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..extensions.base import GaloisAut
from ..extensions.quadratic import QuadraticExtension
from ..extensions.residue import ResidueRepSet, stable_reps
from .core import AlgebraSpec, FnTable, is_member
from .ideals import in_J, in_O

DEFAULT_DEPTH = 8


class RepsNotStable(ValueError):
    pass


def _expand_value(v, reps: ResidueRepSet, start: int, depth: int) -> list:
    field = reps.field
    w = v * Fraction(reps.prime_element) ** -start if start else v
    out = []
    for _ in range(depth):
        r = reps.rep_of(field.residue(w))
        out.append(r)
        w = (w - r) * Fraction(1, reps.prime_element)
    return out


@dataclass(frozen=True)
class Expansion:
    start: int                 # index of the first layer, f = sum_{i >= start} f_i pi^i
    layers: tuple              # FnTables f_start, f_start+1, ...
    prime_element: int

    def partial_sum(self, upto: int | None = None) -> FnTable:
        layers = self.layers if upto is None else self.layers[:upto]
        total = None
        for i, f_i in enumerate(layers):
            scale = Fraction(self.prime_element) ** (self.start + i)
            term = f_i * scale
            total = term if total is None else total + term
        return total


def expand_function(f: FnTable, reps: ResidueRepSet, depth: int = DEFAULT_DEPTH,
                    start: int | None = None) -> Expansion:
    """Write f = sum_i f_i pi^i with every f_i taking values in ``reps``."""
    if not reps.is_closed():
        raise RepsNotStable("representatives are not g-stable")
    field = reps.field
    if start is None:
        finite = [field.omega(v) for v in f.values if not v.is_zero()]
        start = min(finite) if finite else 0
    cols = [_expand_value(v, reps, start, depth) for v in f.values]
    layers = tuple(FnTable(f.space, [c[i] for c in cols]) for i in range(depth))
    return Expansion(start, layers, reps.prime_element)


@dataclass
class ResidueAlgebra:
    spec: AlgebraSpec
    residue_spec: AlgebraSpec
    reps: ResidueRepSet

    def phi(self, f: FnTable) -> FnTable:
        """The class of f modulo J, read off as the reduction of f_0."""
        if not in_O(f, self.spec):
            raise ValueError("phi is defined on O(X, tau, g)")
        f0 = expand_function(f, self.reps, depth=1, start=0).layers[0]
        field = self.spec.field
        return f0.map(field.residue)

    def lift(self, fbar: FnTable) -> FnTable:
        """The rep-valued member mapping to fbar, using the canonical rep order."""
        f = fbar.map(self.reps.rep_of)
        if not is_member(f, self.spec):
            raise AssertionError("lift is not a member")
        return f

    def in_kernel(self, f: FnTable) -> bool:
        zero = self.residue_spec.field.zero()
        return all(v == zero for v in self.phi(f).values)

    def is_J(self, f: FnTable) -> bool:
        return in_J(f, self.spec)


def residue_algebra(spec: AlgebraSpec) -> ResidueAlgebra:
    spec.require_valid()
    field = spec.field
    if not isinstance(field, QuadraticExtension):
        raise TypeError("residue algebras need a nontrivially valued field")
    reps = stable_reps(spec.g)
    gbar = GaloisAut(field.residue_field, field.residue_automorphism(spec.g.power))
    rspec = AlgebraSpec(spec.space, spec.tau, gbar)
    return ResidueAlgebra(spec, rspec, reps)
