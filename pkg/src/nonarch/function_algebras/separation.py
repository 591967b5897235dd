"""Point separation in C(X, tau, g), the member enumerator, and random members."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass

from ..extensions.base import Field, GaloisAut, find_element_of_order, ord_at
from ..extensions.finite import FiniteField
from ..extensions.sampling import random_element
from .core import AlgebraSpec, FnTable, InvalidSpec, is_member, sigma


def separates(spec: AlgebraSpec) -> bool:
    """C(X, tau, g) separates the points of X exactly when ord(tau) | ord(g)."""
    return spec.valid


@dataclass(frozen=True)
class Separation:
    function: FnTable
    case: str
    detail: dict


def _sigma_orbit_product(h: FnTable, spec: AlgebraSpec, powers) -> FnTable:
    out = None
    for i in powers:
        term = sigma(h, spec, i)
        out = term if out is None else out * term
    return out


def _sigma_orbit_sum(h: FnTable, spec: AlgebraSpec, count: int) -> FnTable:
    out = h
    cur = h
    for _ in range(count - 1):
        cur = sigma(cur, spec)
        out = out + cur
    return out


def element_of_order(g: GaloisAut, k: int):
    a = find_element_of_order(g, k)
    if a is None:
        raise LookupError(f"no probe element of order {k} under {g}")
    return a


def separating_function(x, y, spec: AlgebraSpec) -> Separation:
    """A member f of C(X, tau, g) with f(x) != f(y).

    Case 1 handles y outside the tau-orbit of x; Case 2.1 and Case 2.2 handle
    y = tau^n(x) in characteristic zero and p respectively.
    """
    if x == y:
        raise ValueError("points must be distinct")
    spec.require_valid()
    field = spec.field
    space = spec.space
    m = spec.g.order
    zero, one = field.zero(), field.one()
    orbit = spec.tau.orbit(x)

    if y not in orbit:
        # convention: h is 0 at y and 1 elsewhere
        h = FnTable.build(space, lambda z: zero if z == y else one)
        f = _sigma_orbit_product(h, spec, range(m))
        return Separation(f, "1", {"m": m})

    k = len(orbit)
    n = orbit.index(y)
    a = element_of_order(spec.g, k)
    h = FnTable.build(space, lambda z: a if z == x else zero)
    mp = m // k
    p = field.characteristic
    if p == 0:
        f = _sigma_orbit_sum(h, spec, m)
        return Separation(f, "2.1", {"k": k, "n": n, "a": a, "m_prime": mp})

    t, s = 0, mp
    while s % p == 0:
        s //= p
        t += 1
    f1 = _sigma_orbit_product(h, spec, [j * s * k for j in range(p ** t)])
    f = _sigma_orbit_sum(f1, spec, s * k)
    return Separation(f, "2.2", {"k": k, "n": n, "a": a, "m_prime": mp, "t": t, "s": s})


# -- enumeration --------------------------------------------------------------


def _require_finite(field: Field):
    if not field.is_finite:
        raise TypeError(f"enumeration needs a finite value field, got {field.name}")


def orbit_values(field: Field, g: GaloisAut, length: int) -> list:
    h = g ** length
    return [v for v in field.elements() if h(v) == v]


def enumerate_members(spec: AlgebraSpec) -> list[FnTable]:
    """All members, built orbit by orbit: f(tau^i(x0)) = g^i(f(x0)) with g^|O| fixing f(x0)."""
    field = spec.field
    _require_finite(field)
    orbits = spec.tau.orbits()
    choices = [orbit_values(field, spec.g, len(o)) for o in orbits]
    out = []
    for combo in itertools.product(*choices):
        vals = {}
        for o, v in zip(orbits, combo):
            for z in o:
                vals[z] = v
                v = spec.g(v)
        out.append(FnTable.from_dict(spec.space, vals))
    return out


def member_count_formula(spec: AlgebraSpec) -> int:
    """prod over tau-orbits O of #{v : g^|O|(v) = v}, in closed form for finite fields."""
    field = spec.field
    if not isinstance(field, FiniteField):
        raise TypeError("closed form is available for finite fields only")
    total = 1
    for o in spec.tau.orbits():
        e = (spec.g.power * len(o)) % field.degree
        total *= field.p ** math.gcd(e, field.degree)
    return total


def separates_by_enumeration(spec: AlgebraSpec, members: list[FnTable] | None = None) -> bool:
    if members is None:
        members = enumerate_members(spec)
    pts = spec.space.points
    for x, y in itertools.combinations(pts, 2):
        if not any(not f(x) == f(y) for f in members):
            return False
    return True


def random_member(spec: AlgebraSpec, rng: random.Random, **kw) -> FnTable:
    """Pick a free value per orbit and push it into the fixed field of g^|O| by a trace."""
    field = spec.field
    vals = {}
    for o in spec.tau.orbits():
        length = len(o)
        h = spec.g ** length
        b = random_element(field, rng, **kw)
        v = b
        if isinstance(field, FiniteField):
            while not h(v) == v:
                v = random_element(field, rng, **kw)
        else:
            cur = b
            for _ in range(ord_at(h, b) - 1):
                cur = h(cur)
                v = v + cur
        for z in o:
            vals[z] = v
            v = spec.g(v)
    f = FnTable.from_dict(spec.space, vals)
    if spec.valid and not is_member(f, spec):
        raise AssertionError("random member failed the membership check")
    return f


def implication_three_holds(spec: AlgebraSpec, members: list[FnTable]) -> bool:
    """When ord(tau) does not divide ord(g): f(x) = f(tau^ord(g)(x)) for every member."""
    shift = spec.tau.power(spec.g.order)
    return all(f(x) == f(shift(x)) for f in members for x in spec.space.points)


__all__ = [
    "InvalidSpec", "Separation", "separates", "separating_function", "enumerate_members",
    "member_count_formula", "separates_by_enumeration", "random_member",
    "implication_three_holds", "orbit_values", "element_of_order",
]
