"""Finite extensions: Q_5(sqrt2), cyclotomic fields, finite fields and Galois data."""

from .base import (
    Field,
    GaloisAut,
    divisors,
    find_element_of_order,
    fixed_field_elements,
    ord_at,
    ord_of,
    ord_set,
)
from .cyclotomic import ZETA10, ZETA14, CycloElement, CyclotomicField, cyclo_apply, sqrt5
from .finite import F4, F16, F25, FFElement, FiniteField
from .quadratic import (
    Q2_ZETA3,
    Q5_SQRT2,
    QuadExtElement,
    QuadraticExtension,
    conjugate,
    extend_valuation,
    norm_map,
    omega,
    residue_field_descriptor,
    residue_reduce,
)
from .residue import (
    ResidueRepSet,
    StableRepsError,
    average_fixed_point,
    fixed_point_in_class,
    frobenius_fixed_point,
    stable_reps,
)

FIELDS = {
    "Q5_sqrt2": Q5_SQRT2,
    "Q2_zeta3": Q2_ZETA3,
    "zeta10": ZETA10,
    "zeta14": ZETA14,
    "F25": F25,
    "F4": F4,
    "F16": F16,
}


def field_by_name(name: str) -> Field:
    try:
        return FIELDS[name]
    except KeyError:
        raise KeyError(f"unknown field {name!r}; expected one of {sorted(FIELDS)}") from None


__all__ = [
    "Field", "GaloisAut", "divisors", "find_element_of_order", "fixed_field_elements",
    "ord_at", "ord_of", "ord_set", "ZETA10", "ZETA14", "CycloElement", "CyclotomicField",
    "cyclo_apply", "sqrt5", "F4", "F16", "F25", "FFElement", "FiniteField", "Q2_ZETA3",
    "Q5_SQRT2", "QuadExtElement", "QuadraticExtension", "conjugate", "extend_valuation",
    "norm_map", "omega", "residue_field_descriptor", "residue_reduce", "ResidueRepSet",
    "StableRepsError", "average_fixed_point", "fixed_point_in_class",
    "frobenius_fixed_point", "stable_reps", "FIELDS", "field_by_name",
]
