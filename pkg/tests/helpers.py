"""Spec builders shared by the algebra tests."""

import itertools

from nonarch.extensions import GaloisAut
from nonarch.function_algebras import AlgebraSpec, Endo, StoneSpace


def all_specs(field, power=1, max_points=3):
    """Every (X, tau, g^power) with |X| <= max_points and tau a bijection."""
    for n in range(1, max_points + 1):
        space = StoneSpace(tuple(f"x{i}" for i in range(n)))
        for perm in itertools.permutations(space.points):
            yield AlgebraSpec(space, Endo(space, perm), GaloisAut(field, power))


def brute_members(spec):
    """Filter every table F^X by the defining identity, evaluated inline."""
    F = spec.field
    pts = spec.space.points
    idx = {x: i for i, x in enumerate(pts)}
    out = []
    for vals in itertools.product(list(F.elements()), repeat=len(pts)):
        if all(vals[idx[spec.tau(x)]] == F.frobenius(vals[idx[x]], spec.g.power)
               for x in pts):
            out.append(vals)
    return out
