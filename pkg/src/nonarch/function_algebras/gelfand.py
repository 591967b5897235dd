"""Characters and Gelfand transform for a cyclic extension L/F viewed as an F-algebra."""

from __future__ import annotations

from dataclasses import dataclass

from ..extensions.base import Field, GaloisAut


@dataclass(frozen=True)
class Character:
    index: int
    automorphism: GaloisAut  # x = ({0}, g^index)

    def __call__(self, a):
        return self.automorphism(a)


@dataclass(frozen=True)
class GelfandDemo:
    field: Field
    characters: tuple[Character, ...]
    transform: tuple          # a-hat(x_i) for each character
    isometric: bool           # min_i omega(a-hat(x_i)) == omega(a)
    equivariant: bool         # a-hat(g . x_i) == g(a-hat(x_i))
    constant: bool


def gelfand_demo(field: Field, a) -> GelfandDemo:
    if not field.contains(a):
        raise TypeError("element does not belong to the field")
    d = field.galois_order
    chars = tuple(Character(i, GaloisAut(field, i)) for i in range(d))
    values = tuple(c(a) for c in chars)
    g = GaloisAut(field, 1)
    iso = min(field.omega(v) for v in values) == field.omega(a)
    # g acts on characters by x_i -> x_(i+1)
    equi = all(values[(i + 1) % d] == g(values[i]) for i in range(d))
    const = all(v == values[0] for v in values)
    return GelfandDemo(field, chars, values, iso, equi, const)
