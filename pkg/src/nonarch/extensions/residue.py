"""Residue-class representatives that a Galois automorphism maps into themselves.

Starting from the canonical representatives ``a + b*theta`` with digits in
``0..p-1``, each class gets a representative ``a`` whose g-orbit meets every
class at most once.  The fixed point needed for that is produced either by
averaging over the orbit (when ``p`` does not divide the orbit length) or by
the norm-and-Frobenius-power construction (when it does).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .base import GaloisAut, ord_at
from .quadratic import QuadExtElement, QuadraticExtension


class StableRepsError(ArithmeticError):
    pass


@dataclass(frozen=True)
class ResidueRepSet:
    field: QuadraticExtension
    g: GaloisAut
    elements: tuple[QuadExtElement, ...]
    prime_element: int

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def rep_of(self, residue) -> QuadExtElement:
        for r in self.elements:
            if self.field.residue(r) == residue:
                return r
        raise KeyError(residue)

    def index_of(self, x: QuadExtElement) -> int | None:
        for i, r in enumerate(self.elements):
            if r == x:
                return i
        return None

    def is_closed(self) -> bool:
        return all(self.index_of(self.g(r)) is not None for r in self.elements)


def average_fixed_point(candidate: QuadExtElement, h: GaloisAut) -> QuadExtElement:
    """(1/m) * sum_{i<m} h^i(candidate), m = ord(h, candidate); needs p not dividing m."""
    field = candidate.field
    m = ord_at(h, candidate)
    if m % field.p == 0:
        raise StableRepsError("averaging needs p not dividing the orbit length")
    total = candidate
    y = candidate
    for _ in range(m - 1):
        y = h(y)
        total = total + y
    return total * Fraction(1, m)


def frobenius_fixed_point(a0: QuadExtElement, h: GaloisAut) -> QuadExtElement:
    """(a0 h(a0) ... h^(p-1)(a0)) ** (p^(k-1)) for ord(h, a0) = p.

    ``k`` is the residue degree, so the result lies in the residue class of
    ``a0`` and is fixed by ``h``.
    """
    field = a0.field
    p = field.p
    if ord_at(h, a0) != p:
        raise StableRepsError("the Frobenius construction needs ord(h, a0) = p")
    prod = a0
    y = a0
    for _ in range(p - 1):
        y = h(y)
        prod = prod * y
    k = field.residue_field.degree
    return prod ** (p ** (k - 1))


def fixed_point_in_class(candidate: QuadExtElement, h: GaloisAut) -> tuple[QuadExtElement, list[str]]:
    """An element of the candidate's residue class fixed by ``h``.

    ``h`` must map the class to itself.  Returns the element and the list of
    construction branches taken.
    """
    field = candidate.field
    p = field.p
    if not field.residue(h(candidate)) == field.residue(candidate):
        raise StableRepsError("automorphism does not preserve the residue class")
    a = candidate
    branches: list[str] = []
    while True:
        m = ord_at(h, a)
        if m % p:
            break
        # reduce the p-part of the orbit length one factor at a time
        a = frobenius_fixed_point(a, h ** (m // p))
        branches.append("frobenius")
    if ord_at(h, a) > 1:
        a = average_fixed_point(a, h)
        branches.append("average")
    if not h(a) == a:
        raise StableRepsError("construction did not produce a fixed point")
    if not field.omega(a - candidate) > 0:
        raise StableRepsError("construction left the residue class")
    return a, branches


def first_return(candidate: QuadExtElement, g: GaloisAut) -> int:
    """Least n >= 1 with g^n(candidate) in the class of candidate."""
    field = candidate.field
    target = field.residue(candidate)
    y = candidate
    for n in range(1, g.order + 1):
        y = g(y)
        if field.residue(y) == target:
            return n
    raise StableRepsError("orbit never returned to the starting class")


def stable_reps(g: GaloisAut) -> ResidueRepSet:
    """A g-closed set of representatives, one per residue class, containing 0."""
    field = g.field
    if not isinstance(field, QuadraticExtension):
        raise TypeError("stable representatives need a finite residue field")
    chosen: list[QuadExtElement] = [field.zero()]
    seen = {field.residue(field.zero())}
    for cand in field.canonical_reps():
        cls = field.residue(cand)
        if cls in seen:
            continue
        n = first_return(cand, g)
        a, _ = fixed_point_in_class(cand, g ** n)
        y = a
        for _ in range(n):
            c = field.residue(y)
            if c in seen:
                raise StableRepsError("orbit revisited a class")
            seen.add(c)
            chosen.append(y)
            y = g(y)
    if len(chosen) != field.residue_field.order:
        raise StableRepsError("representatives do not cover the residue field")
    return ResidueRepSet(field, g, tuple(chosen), prime_element=field.p)
