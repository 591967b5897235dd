"""Series over Q_p: partial sums with a convergence verdict, and radii of convergence."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .padic import INF, PAdicNumber, add, valuation_of_int


@dataclass(frozen=True)
class SeriesSum:
    value: PAdicNumber
    converges: bool
    tail_valuation: float

    @property
    def verdict(self) -> str:
        return "converges" if self.converges else "diverges"


def sum_series(terms: Sequence[PAdicNumber], threshold: int | None = None) -> SeriesSum:
    """Partial sum of ``terms`` and whether the terms visibly tend to 0.

    A series over a non-Archimedean field converges iff its terms tend to 0,
    so on finite data the verdict asks that the last term's valuation reach
    ``threshold``.  The default threshold is the smallest term valuation plus
    half the number of terms.
    """
    if not terms:
        raise ValueError("empty series")
    p = terms[0].prime
    total = PAdicNumber.zero(p, min(t.precision for t in terms))
    for t in terms:
        total = add(total, t)
    vals = [t.valuation for t in terms]
    low = min(vals)
    last = vals[-1]
    if low == INF:
        return SeriesSum(total, True, INF)
    if threshold is None:
        threshold = low + max(1, len(terms) // 2)
    return SeriesSum(total, last >= threshold, last)


@dataclass(frozen=True)
class SeriesSpec:
    """Coefficient valuations ``nu(a_n)`` for ``n`` in ``0..bound``."""

    prime: int
    coeff_valuation: Callable[[int], float]
    bound: int

    def __post_init__(self):
        if self.bound < 8:
            raise ValueError("truncation bound must be at least 8")

    def valuations(self) -> list:
        return [self.coeff_valuation(n) for n in range(self.bound + 1)]


@dataclass(frozen=True)
class Radius:
    """Radius of convergence reported as ``p ** exponent``.

    ``exponent`` estimates ``liminf nu(a_n)/n`` from the tail window.  When the
    tail valuations are exactly affine, ``exact_exponent`` holds the slope.
    """

    prime: int
    exponent: float
    exact_exponent: Fraction | None

    @property
    def estimate(self) -> float:
        if self.exponent == INF:
            return INF
        return float(self.prime) ** self.exponent

    @property
    def exact(self) -> float | None:
        if self.exact_exponent is None:
            return None
        return float(self.prime) ** float(self.exact_exponent)

    @property
    def value(self) -> float:
        return self.exact if self.exact is not None else self.estimate


def _affine_slope(ns, vals) -> Fraction | None:
    if any(v == INF for v in vals):
        return None
    slope = Fraction(vals[1] - vals[0], ns[1] - ns[0])
    base = vals[0] - slope * ns[0]
    if all(v == slope * n + base for n, v in zip(ns, vals)):
        return slope
    return None


def radius_of_convergence(spec: SeriesSpec) -> Radius:
    """Estimate rho = 1 / limsup |a_n|**(1/n) = p ** liminf(nu(a_n)/n)."""
    vals = spec.valuations()
    lo = max(1, spec.bound // 2)
    ns = list(range(lo, spec.bound + 1))
    tail = [vals[n] for n in ns]
    finite = [(n, v) for n, v in zip(ns, tail) if v != INF]
    if not finite:
        return Radius(spec.prime, INF, None)
    exponent = min(v / n for n, v in finite)
    slope = _affine_slope(ns, tail)
    return Radius(spec.prime, exponent, slope)


def factorial_reciprocal_valuations(p: int) -> Callable[[int], int]:
    """nu_p(1/n!) built by accumulating nu_p(k) for k <= n."""
    cache = [0]

    def nu(n: int) -> int:
        while len(cache) <= n:
            k = len(cache)
            cache.append(cache[-1] - valuation_of_int(k, p))
        return cache[n]

    return nu


PATTERNS = {
    "constant": lambda p: (lambda n: 0),
    "geometric": lambda p: (lambda n: -n),
    "factorial": factorial_reciprocal_valuations,
}


def pattern_spec(name: str, p: int, bound: int) -> SeriesSpec:
    try:
        make = PATTERNS[name]
    except KeyError:
        raise ValueError(f"unknown pattern {name!r}") from None
    return SeriesSpec(p, make(p), bound)
