"""Finite fields GF(p^k) = F_p[x]/(m(x)) with the Frobenius as Galois generator."""

from __future__ import annotations

import itertools
from functools import cached_property

from .base import Field


def _is_irreducible(p: int, modulus: tuple[int, ...]) -> bool:
    """Brute-force irreducibility for the small moduli used here."""
    k = len(modulus) - 1
    for deg in range(1, k // 2 + 1):
        for tail in itertools.product(range(p), repeat=deg):
            cand = (*tail, 1)
            if _polymod_zero(p, modulus, cand):
                return False
    return True


def _polymod_zero(p, num, den) -> bool:
    num = list(num)
    while len(num) >= len(den):
        lead = num[-1] % p
        shift = len(num) - len(den)
        for i, c in enumerate(den):
            num[shift + i] = (num[shift + i] - lead * c) % p
        num.pop()
    return not any(c % p for c in num)


class FFElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: "FiniteField", coeffs):
        self.field = field
        self.coeffs = tuple(int(c) % field.p for c in coeffs)

    def _lift(self, other):
        if isinstance(other, FFElement):
            if other.field is not self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return FFElement(self.field, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return FFElement(self.field, (-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.field._mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        f = self.field
        if n < 0:
            return f.inverse(self) ** (-n)
        result = f.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self * self.field.inverse(other)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.from_int(other)
        if not isinstance(other, FFElement):
            return NotImplemented
        return other.field is self.field and other.coeffs == self.coeffs

    def __hash__(self):
        return hash((self.field.name, self.coeffs))

    def __lt__(self, other):
        return self.index < other.index

    @property
    def index(self) -> int:
        p = self.field.p
        return sum(c * p ** i for i, c in enumerate(self.coeffs))

    def __repr__(self):
        return f"{self.field.name}{list(self.coeffs)}"


class FiniteField(Field):
    """GF(p^k) with basis 1, t, ..., t^(k-1) where m(t) = 0."""

    def __init__(self, p: int, modulus, name: str | None = None, symbol: str = "t"):
        modulus = tuple(int(c) % p for c in modulus)
        if modulus[-1] != 1:
            raise ValueError("modulus must be monic (coefficients low to high)")
        if not _is_irreducible(p, modulus):
            raise ValueError("modulus is reducible")
        self.p = p
        self.modulus = modulus
        self.degree = len(modulus) - 1
        self.characteristic = p
        self.galois_order = self.degree
        self.name = name or f"F{p ** self.degree}"
        self.symbol = symbol

    @property
    def order(self) -> int:
        return self.p ** self.degree

    @property
    def is_finite(self) -> bool:
        return True

    def zero(self):
        return FFElement(self, (0,) * self.degree)

    def one(self):
        return self.from_int(1)

    def from_int(self, n: int):
        return FFElement(self, (n,) + (0,) * (self.degree - 1))

    def gen(self):
        return self.element(0, 1) if self.degree > 1 else self.one()

    def element(self, *coeffs):
        coeffs = list(coeffs) + [0] * (self.degree - len(coeffs))
        return FFElement(self, coeffs[: self.degree])

    def _mul(self, x: FFElement, y: FFElement) -> FFElement:
        p, k = self.p, self.degree
        prod = [0] * (2 * k - 1)
        for i, a in enumerate(x.coeffs):
            if a:
                for j, b in enumerate(y.coeffs):
                    prod[i + j] += a * b
        for d in range(2 * k - 2, k - 1, -1):
            c = prod[d] % p
            if c:
                for i in range(k):
                    prod[d - k + i] -= c * self.modulus[i]
            prod[d] = 0
        return FFElement(self, prod[:k])

    def inverse(self, x: FFElement) -> FFElement:
        if x == self.zero():
            raise ZeroDivisionError("division by zero")
        return x ** (self.order - 2)

    def frobenius(self, x: FFElement, times: int = 1) -> FFElement:
        return x ** (self.p ** (times % self.degree))

    def galois(self, x, power: int = 1):
        return self.frobenius(x, power)

    def contains(self, x) -> bool:
        return isinstance(x, FFElement) and x.field is self

    @cached_property
    def _elements(self) -> tuple:
        return tuple(FFElement(self, c[::-1]) for c in
                     itertools.product(range(self.p), repeat=self.degree))

    def elements(self):
        return iter(self._elements)

    def probe_elements(self) -> list:
        return list(self._elements)

    def serialize(self, x: FFElement):
        return list(x.coeffs)

    def deserialize(self, data):
        if isinstance(data, int):
            return self.from_int(data)
        return self.element(*data)


F25 = FiniteField(5, (-2, 0, 1), name="F25", symbol="sqrt2")
F4 = FiniteField(2, (1, 1, 1), name="F4", symbol="zeta3")
F16 = FiniteField(2, (1, 1, 0, 0, 1), name="F16")
