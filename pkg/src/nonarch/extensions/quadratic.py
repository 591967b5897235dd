"""Unramified quadratic extensions Q_p(theta) with theta^2 = t*theta - n.

The shipped instance is Q_5(sqrt2) (t = 0, n = -2).  Q_2(zeta_3) (t = -1,
n = 1) is also provided: its Galois order is divisible by the residue
characteristic, which is what exercises the Frobenius-power branch of the
stable-representative construction.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from ..valued_fields.padic import DEFAULT_PRECISION, INF, PAdicNumber
from .base import Field
from .finite import F4, F25, FiniteField


class QuadExtElement:
    """The element ``a + b*theta`` of a :class:`QuadraticExtension`."""

    __slots__ = ("field", "a", "b")

    def __init__(self, field: "QuadraticExtension", a: PAdicNumber, b: PAdicNumber):
        if a.prime != field.p or b.prime != field.p:
            raise ValueError("components must share the field's prime")
        self.field = field
        self.a = a
        self.b = b

    def _lift(self, other):
        if isinstance(other, QuadExtElement):
            if other.field is not self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.element(other, 0, precision=self.precision)
        if isinstance(other, PAdicNumber):
            return QuadExtElement(self.field, other, PAdicNumber.zero(self.field.p, other.precision))
        return NotImplemented

    @property
    def precision(self) -> int:
        return min(self.a.precision, self.b.precision)

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return QuadExtElement(self.field, self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadExtElement(self.field, -self.a, -self.b)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return QuadExtElement(self.field, self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        t, n = self.field.trace, self.field.norm_const
        a, b, c, d = self.a, self.b, other.a, other.b
        bd = b * d
        return QuadExtElement(self.field, a * c - bd * n, a * d + b * c + bd * t)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self * self.field.inverse(other)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return self.field.inverse(self) ** (-k)
        result = self.field.element(1, 0, precision=self.precision)
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
        return self.a == other.a and self.b == other.b

    __hash__ = None

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def key(self) -> tuple[Fraction, Fraction]:
        """Exact rational coordinates of the stored digits."""
        return (self.a.to_fraction(), self.b.to_fraction())

    def __repr__(self):
        a, b = self.a.balanced_fraction(), self.b.balanced_fraction()
        if not b:
            return f"({a})"
        return f"({a} {'-' if b < 0 else '+'} {abs(b)}*{self.field.symbol})"

    def to_json(self) -> dict:
        return {"a": self.a.to_json(), "b": self.b.to_json()}


class QuadraticExtension(Field):
    characteristic = 0
    galois_order = 2
    ramification_index = 1
    residue_degree = 2

    def __init__(self, p: int, trace: int, norm_const: int, name: str, symbol: str,
                 precision: int = DEFAULT_PRECISION, residue_field: FiniteField | None = None):
        self.p = p
        self.trace = trace
        self.norm_const = norm_const
        self.name = name
        self.symbol = symbol
        self.precision = precision
        # x^2 - t x + n irreducible mod p  <=>  unramified of degree 2 with basis 1, theta
        if residue_field is None:
            residue_field = FiniteField(p, (norm_const, -trace, 1), name=f"F{p * p}",
                                        symbol=symbol)
        elif residue_field.modulus != tuple(c % p for c in (norm_const, -trace, 1)):
            raise ValueError("residue field modulus does not match")
        self.residue_field = residue_field

    def element(self, a=0, b=0, precision: int | None = None) -> QuadExtElement:
        prec = self.precision if precision is None else precision

        def conv(v):
            if isinstance(v, PAdicNumber):
                return v
            return PAdicNumber.from_rational(Fraction(v), self.p, prec)

        return QuadExtElement(self, conv(a), conv(b))

    def theta(self) -> QuadExtElement:
        return self.element(0, 1)

    def zero(self):
        return self.element(0, 0)

    def one(self):
        return self.element(1, 0)

    def from_int(self, n: int):
        return self.element(n, 0)

    def conjugate(self, x: QuadExtElement) -> QuadExtElement:
        # theta -> t - theta
        return QuadExtElement(self, x.a + x.b * self.trace, -x.b)

    def galois(self, x, power: int = 1):
        return self.conjugate(x) if power % 2 else x

    def norm(self, x: QuadExtElement) -> PAdicNumber:
        """x * g(x) = a^2 + t*a*b + n*b^2, an element of Q_p."""
        a, b = x.a, x.b
        return a * a + a * b * self.trace + b * b * self.norm_const

    def inverse(self, x: QuadExtElement) -> QuadExtElement:
        nx = self.norm(x)
        if nx.is_zero():
            raise ZeroDivisionError("division by zero")
        c = self.conjugate(x)
        ninv = 1 / nx
        return QuadExtElement(self, c.a * ninv, c.b * ninv)

    def omega(self, x: QuadExtElement):
        """min(nu(a), nu(b)); valid because 1, theta is an integral basis."""
        return min(x.a.valuation, x.b.valuation)

    def extend_valuation(self, x: QuadExtElement):
        """(1/2) nu(N(x)), the valuation extended through the norm map."""
        v = self.norm(x).valuation
        if v == INF:
            return INF
        half = Fraction(v, 2)
        return int(half) if half.denominator == 1 else half

    def contains(self, x) -> bool:
        return isinstance(x, QuadExtElement) and x.field is self

    # residue field ----------------------------------------------------------

    def residue(self, x: QuadExtElement):
        if self.omega(x) < 0:
            raise ValueError("not integral")
        return self.residue_field.element(x.a.residue(), x.b.residue())

    def canonical_reps(self) -> list[QuadExtElement]:
        """{a + b*theta : 0 <= a, b < p}, in lexicographic (a, b) order."""
        return [self.element(a, b) for a, b in itertools.product(range(self.p), repeat=2)]

    def residue_automorphism(self, power: int = 1):
        """The induced automorphism on the residue field as a Frobenius power."""
        # conjugation reduces to the nontrivial automorphism of F_{p^2}
        return power % 2

    def probe_elements(self) -> list:
        th = self.theta()
        return [self.one(), th, self.one() + th, self.from_int(2) + th]

    def serialize(self, x: QuadExtElement):
        return x.to_json()

    def deserialize(self, data) -> QuadExtElement:
        if isinstance(data, dict) and "a" in data:
            def comp(v):
                if isinstance(v, dict):
                    return PAdicNumber.from_json(v)
                return PAdicNumber.from_rational(Fraction(str(v)), self.p, self.precision)
            return QuadExtElement(self, comp(data["a"]), comp(data.get("b", 0)))
        return self.element(Fraction(str(data)), 0)


Q5_SQRT2 = QuadraticExtension(5, 0, -2, name="Q5_sqrt2", symbol="sqrt2", residue_field=F25)
Q2_ZETA3 = QuadraticExtension(2, -1, 1, name="Q2_zeta3", symbol="zeta3", residue_field=F4)


def omega(x: QuadExtElement):
    return x.field.omega(x)


def norm_map(x: QuadExtElement) -> PAdicNumber:
    return x.field.norm(x)


def extend_valuation(x: QuadExtElement):
    return x.field.extend_valuation(x)


def conjugate(x: QuadExtElement) -> QuadExtElement:
    return x.field.conjugate(x)


def residue_reduce(x: QuadExtElement):
    return x.field.residue(x)


def residue_field_descriptor(field: QuadraticExtension = Q5_SQRT2) -> dict:
    rf = field.residue_field
    return {
        "field": field.name,
        "residue_field": rf.name,
        "order": rf.order,
        "ramification_index": field.ramification_index,
        "residue_degree": field.residue_degree,
    }
