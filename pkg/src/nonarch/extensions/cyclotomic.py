"""Cyclotomic fields Q(zeta_n) with exact rational arithmetic and the trivial valuation."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .base import Field


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    while len(num) >= len(den) and any(num):
        shift = len(num) - len(den)
        c = num[-1] // den[-1]
        q[shift] = c
        for i, d in enumerate(den):
            num[shift + i] -= c * d
        num.pop()
    return q, num


def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (low to high) of Phi_n, by dividing x^n - 1 by Phi_d for d | n, d < n."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    while poly and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


def _primitive_root(n: int) -> int:
    units = [k for k in range(1, n) if math.gcd(k, n) == 1]
    phi = len(units)
    for k in units[1:]:
        x, order = k, 1
        while x != 1:
            x = x * k % n
            order += 1
        if order == phi:
            return k
    if phi == 1:
        return 1
    raise ValueError(f"Gal(Q(zeta_{n})/Q) is not cyclic")


class CycloElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: "CyclotomicField", coeffs: Sequence):
        if len(coeffs) != field.degree:
            raise ValueError("coefficient vector has the wrong length")
        self.field = field
        self.coeffs = tuple(Fraction(c) for c in coeffs)

    @property
    def modulus(self) -> tuple[int, ...]:
        return self.field.modulus

    def _lift(self, other):
        if isinstance(other, CycloElement):
            if other.field is not self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return CycloElement(self.field, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloElement(self.field, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return CycloElement(self.field, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.field._mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = self.field.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.n, self.coeffs))

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __repr__(self):
        terms = [f"{c}*z^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"


class CyclotomicField(Field):
    """Q(zeta_n) with basis 1, zeta, ..., zeta^(d-1) and Galois generator zeta -> zeta^k."""

    characteristic = 0

    def __init__(self, n: int, name: str | None = None, generator_exponent: int | None = None):
        self.n = n
        self.modulus = cyclotomic_polynomial(n)
        self.degree = len(self.modulus) - 1
        self.name = name or f"zeta{n}"
        self.generator_exponent = generator_exponent or _primitive_root(n)
        k, order = self.generator_exponent % n, 1
        while k != 1:
            k = k * self.generator_exponent % n
            order += 1
        if order != self.degree:
            raise ValueError("generator exponent does not generate the Galois group")
        self.galois_order = self.degree

    @cached_property
    def _powers(self) -> list[tuple[Fraction, ...]]:
        """zeta^j reduced modulo Phi_n, for 0 <= j < n."""
        d = self.degree
        out = []
        vec = [Fraction(0)] * d
        vec[0] = Fraction(1)
        for _ in range(self.n):
            out.append(tuple(vec))
            carry = vec[-1]
            vec = [Fraction(0)] + vec[:-1]
            if carry:
                for i in range(d):
                    vec[i] -= carry * self.modulus[i]
        return out

    def _mul(self, x: CycloElement, y: CycloElement) -> CycloElement:
        d = self.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(x.coeffs):
            if a:
                for j, b in enumerate(y.coeffs):
                    if b:
                        prod[i + j] += a * b
        out = [Fraction(0)] * d
        for j, c in enumerate(prod):
            if c:
                row = self._powers[j]
                for i in range(d):
                    out[i] += c * row[i]
        return CycloElement(self, out)

    def zeta(self, power: int = 1) -> CycloElement:
        return CycloElement(self, self._powers[power % self.n])

    def zero(self):
        return CycloElement(self, [0] * self.degree)

    def one(self):
        return self.from_rational(1)

    def from_int(self, n: int):
        return self.from_rational(n)

    def from_rational(self, q) -> CycloElement:
        return CycloElement(self, [Fraction(q)] + [0] * (self.degree - 1))

    def exponent_of(self, power: int) -> int:
        return pow(self.generator_exponent, power % self.galois_order, self.n)

    def galois(self, x: CycloElement, power: int = 1) -> CycloElement:
        k = self.exponent_of(power)
        out = [Fraction(0)] * self.degree
        for i, c in enumerate(x.coeffs):
            if c:
                row = self._powers[i * k % self.n]
                for j in range(self.degree):
                    out[j] += c * row[j]
        return CycloElement(self, out)

    def contains(self, x) -> bool:
        return isinstance(x, CycloElement) and x.field is self

    def trace_to(self, x: CycloElement, step: int) -> CycloElement:
        """Sum of g^(j*step)(x) over the subgroup generated by g^step."""
        total = self.zero()
        for j in range(self.galois_order // math.gcd(step, self.galois_order)):
            total = total + self.galois(x, j * step)
        return total

    def distinguished_elements(self) -> list[CycloElement]:
        if self.n == 10:
            return [sqrt5(self)]
        return []

    def probe_elements(self) -> list:
        """Distinguished elements, powers of zeta, then traces of zeta to each subfield."""
        out = list(self.distinguished_elements())
        out += [self.one()] + [self.zeta(i) for i in range(1, self.n)]
        for step in range(1, self.galois_order + 1):
            if self.galois_order % step == 0:
                out.append(self.trace_to(self.zeta(), step))
        return out

    def serialize(self, x: CycloElement) -> dict:
        return {"modulus": self.name, "coeffs": [str(c) for c in x.coeffs]}

    def deserialize(self, data) -> CycloElement:
        if isinstance(data, dict):
            if data.get("modulus", self.name) != self.name:
                raise ValueError(f"element of {data['modulus']}, expected {self.name}")
            return CycloElement(self, [Fraction(str(c)) for c in data["coeffs"]])
        return self.from_rational(Fraction(str(data)))


def sqrt5(field: CyclotomicField) -> CycloElement:
    """zeta + zeta^9 - zeta^3 - zeta^7 in Q(zeta_10)."""
    if field.n != 10:
        raise ValueError("sqrt5 is built inside Q(zeta_10)")
    z = field.zeta
    return z(1) + z(9) - z(3) - z(7)


ZETA10 = CyclotomicField(10, "zeta10", 3)
ZETA14 = CyclotomicField(14, "zeta14", 3)


def cyclo_apply(g, x: CycloElement) -> CycloElement:
    return g(x)
