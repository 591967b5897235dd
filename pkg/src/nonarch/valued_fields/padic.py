"""Exact p-adic numbers with a fixed count of significant digits.

A nonzero value is stored as ``p**valuation * unit`` where ``unit`` is an
integer in ``[1, p**precision)`` not divisible by ``p``.  The digit tuple is
derived from ``unit`` on demand.  Zero carries valuation ``math.inf``.
"""

from __future__ import annotations

import math
import os
from fractions import Fraction
from typing import Union

INF = math.inf

DEFAULT_PRECISION = int(os.environ.get("NONARCH_PRECISION", "32"))

Rational = Union[int, Fraction]


def valuation_of_int(n: int, p: int) -> float | int:
    """Return nu_p(n) for an integer ``n`` (``inf`` for zero)."""
    if n == 0:
        return INF
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def valuation_of_rational(q: Rational, p: int) -> float | int:
    q = Fraction(q)
    if q == 0:
        return INF
    return valuation_of_int(q.numerator, p) - valuation_of_int(q.denominator, p)


class PAdicNumber:
    """An element of Q_p known to ``precision`` significant digits."""

    __slots__ = ("prime", "valuation", "unit", "precision")

    def __init__(self, prime: int, valuation, unit: int, precision: int):
        if precision < 1:
            raise ValueError("precision must be positive")
        self.prime = prime
        self.precision = precision
        if valuation == INF or unit % prime ** precision == 0:
            self.valuation = INF
            self.unit = 0
        else:
            unit %= prime ** precision
            if unit % prime == 0:
                raise ValueError("unit part must not be divisible by p")
            self.valuation = int(valuation)
            self.unit = unit

    # construction ---------------------------------------------------------

    @classmethod
    def zero(cls, p: int, precision: int = DEFAULT_PRECISION) -> "PAdicNumber":
        return cls(p, INF, 0, precision)

    @classmethod
    def from_rational(cls, q: Rational, p: int,
                      precision: int = DEFAULT_PRECISION) -> "PAdicNumber":
        q = Fraction(q)
        if q == 0:
            return cls.zero(p, precision)
        num, den = q.numerator, q.denominator
        vn = valuation_of_int(num, p)
        vd = valuation_of_int(den, p)
        num //= p ** vn
        den //= p ** vd
        modulus = p ** precision
        # den is a p-adic unit, so it is invertible mod p**precision
        unit = num * pow(den, -1, modulus) % modulus
        return cls(p, vn - vd, unit, precision)

    @classmethod
    def from_digits(cls, p: int, valuation, digits, precision: int | None = None):
        digits = list(digits)
        if precision is None:
            precision = max(len(digits), 1)
        if valuation == INF or not any(digits):
            return cls.zero(p, precision)
        for d in digits:
            if not 0 <= d < p:
                raise ValueError(f"digit {d} outside 0..{p - 1}")
        if digits[0] == 0:
            raise ValueError("leading digit must be nonzero")
        unit = sum(d * p ** i for i, d in enumerate(digits))
        return cls(p, valuation, unit, precision)

    # views ----------------------------------------------------------------

    @property
    def digits(self) -> tuple[int, ...]:
        if self.valuation == INF:
            return ()
        out = []
        u = self.unit
        for _ in range(self.precision):
            u, r = divmod(u, self.prime)
            out.append(r)
        return tuple(out)

    def is_zero(self) -> bool:
        return self.valuation == INF

    def to_fraction(self) -> Fraction:
        """The rational ``sum(digits[i] * p**(valuation + i))``."""
        if self.valuation == INF:
            return Fraction(0)
        return Fraction(self.unit) * Fraction(self.prime) ** self.valuation

    def balanced_fraction(self) -> Fraction:
        """Like :meth:`to_fraction` but with the unit taken in (-p^prec/2, p^prec/2]."""
        if self.valuation == INF:
            return Fraction(0)
        mod = self.prime ** self.precision
        u = self.unit - mod if 2 * self.unit > mod else self.unit
        return Fraction(u) * Fraction(self.prime) ** self.valuation

    def residue(self) -> int:
        """Image in F_p; requires valuation >= 0."""
        if self.valuation == INF or self.valuation > 0:
            return 0
        if self.valuation < 0:
            raise ValueError("not integral")
        return self.unit % self.prime

    def with_precision(self, precision: int) -> "PAdicNumber":
        if self.valuation == INF:
            return PAdicNumber.zero(self.prime, precision)
        return PAdicNumber(self.prime, self.valuation,
                           self.unit % self.prime ** precision, precision)

    # arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> "PAdicNumber":
        if isinstance(other, PAdicNumber):
            if other.prime != self.prime:
                raise ValueError("mismatched primes")
            return other
        if isinstance(other, (int, Fraction)):
            return PAdicNumber.from_rational(other, self.prime, self.precision)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return neg(self)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, neg(other))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(other, neg(self))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, inv(other))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mul(other, inv(self))

    def __pow__(self, n: int):
        if n < 0:
            return inv(self) ** (-n)
        if self.valuation == INF:
            return PAdicNumber.zero(self.prime, self.precision) if n else \
                PAdicNumber.from_rational(1, self.prime, self.precision)
        modulus = self.prime ** self.precision
        return PAdicNumber(self.prime, self.valuation * n,
                           pow(self.unit, n, modulus), self.precision)

    def __eq__(self, other):
        """Equal when every digit known to both operands agrees."""
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        if not isinstance(other, PAdicNumber):
            return NotImplemented
        if other.prime != self.prime:
            return False
        return add(self, neg(other)).valuation == INF

    def __hash__(self):
        raise TypeError("finite-precision p-adic numbers are unhashable")

    def __repr__(self):
        if self.valuation == INF:
            return f"PAdicNumber(p={self.prime}, 0, prec={self.precision})"
        return (f"PAdicNumber(p={self.prime}, val={self.valuation}, "
                f"digits={list(self.digits)})")

    # serialization --------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "p": self.prime,
            "val": "inf" if self.valuation == INF else self.valuation,
            "digits": list(self.digits),
            "prec": self.precision,
        }

    @classmethod
    def from_json(cls, data: dict) -> "PAdicNumber":
        val = data["val"]
        val = INF if val == "inf" else int(val)
        return cls.from_digits(int(data["p"]), val, data["digits"], int(data["prec"]))


def vlog(x: PAdicNumber):
    """Valuation logarithm nu_p(x); ``inf`` for zero."""
    return x.valuation


def expand(q: Rational, p: int, n: int = DEFAULT_PRECISION) -> PAdicNumber:
    """First ``n`` digits of the canonical expansion of ``q`` over {0..p-1}."""
    return PAdicNumber.from_rational(q, p, n)


def abs_p(x: PAdicNumber) -> Fraction:
    """|x|_p = p**(-nu_p(x)) as an exact rational."""
    if x.valuation == INF:
        return Fraction(0)
    return Fraction(x.prime) ** (-x.valuation)


def add(x: PAdicNumber, y: PAdicNumber) -> PAdicNumber:
    """Sum, keeping min(prec) digits less any leading cancellation."""
    if x.prime != y.prime:
        raise ValueError("mismatched primes")
    p = x.prime
    prec = min(x.precision, y.precision)
    if x.valuation == INF:
        return y.with_precision(prec)
    if y.valuation == INF:
        return x.with_precision(prec)
    if y.valuation < x.valuation:
        x, y = y, x
    shift = y.valuation - x.valuation
    if shift >= prec:
        return x.with_precision(prec)
    modulus = p ** prec
    s = (x.unit + y.unit * p ** shift) % modulus
    if s == 0:
        return PAdicNumber.zero(p, prec)
    c = 0
    while s % p == 0:
        s //= p
        c += 1
    return PAdicNumber(p, x.valuation + c, s, prec - c)


def neg(x: PAdicNumber) -> PAdicNumber:
    if x.valuation == INF:
        return x
    return PAdicNumber(x.prime, x.valuation, -x.unit, x.precision)


def mul(x: PAdicNumber, y: PAdicNumber) -> PAdicNumber:
    if x.prime != y.prime:
        raise ValueError("mismatched primes")
    prec = min(x.precision, y.precision)
    if x.valuation == INF or y.valuation == INF:
        return PAdicNumber.zero(x.prime, prec)
    modulus = x.prime ** prec
    return PAdicNumber(x.prime, x.valuation + y.valuation,
                       x.unit * y.unit % modulus, prec)


def inv(x: PAdicNumber) -> PAdicNumber:
    if x.valuation == INF:
        raise ZeroDivisionError("division by zero")
    modulus = x.prime ** x.precision
    return PAdicNumber(x.prime, -x.valuation, pow(x.unit, -1, modulus), x.precision)


def truncations(x: PAdicNumber) -> list[PAdicNumber]:
    """Partial sums of the digit expansion of ``x``, one per digit."""
    if x.valuation == INF:
        return [x]
    out = []
    acc = 0
    p = x.prime
    for i, d in enumerate(x.digits):
        acc += d * p ** i
        out.append(PAdicNumber(p, x.valuation, acc, x.precision) if acc else
                   PAdicNumber.zero(p, x.precision))
    return out
