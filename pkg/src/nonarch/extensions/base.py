"""Shared interface for the value fields and their cyclic Galois groups."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Iterator

INF = math.inf


class Field:
    """A field with a distinguished generator of a cyclic Galois group.

    ``galois(x, k)`` applies the k-th power of the generator.  Subclasses fill
    in the arithmetic through their element types; elements support ``+``,
    ``-``, ``*`` and ``==``.
    """

    name: str = ""
    characteristic: int = 0
    galois_order: int = 1

    def zero(self) -> Any:
        raise NotImplementedError

    def one(self) -> Any:
        raise NotImplementedError

    def from_int(self, n: int) -> Any:
        raise NotImplementedError

    def galois(self, x: Any, power: int = 1) -> Any:
        raise NotImplementedError

    def omega(self, x: Any):
        """Valuation logarithm; the trivial valuation unless overridden."""
        return INF if x == self.zero() else 0

    def contains(self, x: Any) -> bool:
        raise NotImplementedError

    def probe_elements(self) -> list:
        """Fixed search list used when an element of a given order is needed."""
        raise NotImplementedError

    @property
    def is_finite(self) -> bool:
        return False

    def elements(self) -> Iterator:
        raise TypeError(f"{self.name} is infinite")

    def serialize(self, x: Any):
        raise NotImplementedError

    def deserialize(self, data: Any) -> Any:
        raise NotImplementedError

    def generator(self) -> "GaloisAut":
        return GaloisAut(self, 1)

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


@dataclass(frozen=True)
class GaloisAut:
    """The automorphism ``generator ** power`` of ``field``."""

    field: Field
    power: int = 1

    def __call__(self, x):
        return self.field.galois(x, self.power % self.field.galois_order)

    @property
    def order(self) -> int:
        n = self.field.galois_order
        return n // math.gcd(self.power % n, n) if self.power % n else 1

    def __pow__(self, k: int) -> "GaloisAut":
        return GaloisAut(self.field, (self.power * k) % self.field.galois_order)

    def compose(self, other: "GaloisAut") -> "GaloisAut":
        if other.field is not self.field:
            raise ValueError("automorphisms of different fields")
        return GaloisAut(self.field, (self.power + other.power) % self.field.galois_order)

    def is_identity(self) -> bool:
        return self.power % self.field.galois_order == 0

    def __repr__(self):
        return f"GaloisAut({self.field.name}, g^{self.power})"


def ord_of(g: GaloisAut) -> int:
    return g.order


def ord_at(g: GaloisAut, s) -> int:
    """min{n >= 1 : g^(n)(s) = s}."""
    y = g(s)
    n = 1
    while not y == s:
        y = g(y)
        n += 1
        if n > g.order:
            raise ArithmeticError("orbit longer than the automorphism order")
    return n


def ord_set(g: GaloisAut, elements: Iterable) -> set[int]:
    return {ord_at(g, s) for s in elements}


def fixed_field_elements(g: GaloisAut, probes: Iterable) -> list:
    return [s for s in probes if g(s) == s]


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def find_element_of_order(g: GaloisAut, k: int, probes: Iterable | None = None):
    """First probe element ``a`` with ord(g, a) == k, or ``None``."""
    if probes is None:
        probes = g.field.probe_elements()
    for a in probes:
        if ord_at(g, a) == k:
            return a
    return None


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())
