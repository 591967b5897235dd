"""Seeded random elements of the shipped fields."""

from __future__ import annotations

import random
from fractions import Fraction

from .base import Field
from .cyclotomic import CycloElement, CyclotomicField
from .finite import FiniteField
from .quadratic import QuadraticExtension
from ..valued_fields.padic import PAdicNumber


def random_padic(rng: random.Random, p: int, vmin: int, vmax: int, precision: int,
                 zero_prob: float = 0.0) -> PAdicNumber:
    """p^v * u with v uniform in [vmin, vmax] and u a random unit mod p^precision."""
    if rng.random() < zero_prob:
        return PAdicNumber.zero(p, precision)
    v = rng.randint(vmin, vmax)
    u = rng.randrange(1, p ** precision)
    while u % p == 0:
        u = rng.randrange(1, p ** precision)
    return PAdicNumber(p, v, u, precision)


def random_element(field: Field, rng: random.Random, *, vmin: int = 0, vmax: int = 3,
                   zero_prob: float = 0.1, height: int = 5):
    if isinstance(field, QuadraticExtension):
        comp = [random_padic(rng, field.p, vmin, vmax, field.precision, zero_prob)
                for _ in range(2)]
        return field.element(*comp)
    if isinstance(field, FiniteField):
        return rng.choice(field.probe_elements())
    if isinstance(field, CyclotomicField):
        return CycloElement(field, [Fraction(rng.randint(-height, height), rng.randint(1, 3))
                                    for _ in range(field.degree)])
    raise TypeError(f"no sampler for {field!r}")
