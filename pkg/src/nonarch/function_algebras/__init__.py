"""Basic function algebras C(X, tau, g) on finite Stone spaces."""

from .core import (
    AlgebraSpec,
    Endo,
    FnTable,
    InvalidSpec,
    Membership,
    SpecError,
    StoneSpace,
    is_member,
    sigma,
    spec_from_cycles,
    sup_omega,
)
from .gelfand import GelfandDemo, gelfand_demo
from .ideals import IdealView, in_J, in_My, in_O, in_O_units, maximality_witness
from .lattice import Lattice, LatticeNode, lattice
from .residue_algebra import Expansion, ResidueAlgebra, expand_function, residue_algebra
from .separation import (
    Separation,
    enumerate_members,
    implication_three_holds,
    member_count_formula,
    random_member,
    separates,
    separates_by_enumeration,
    separating_function,
)
from .unit_ball import OutsideUnitBall, RefuterVerdict, series_membership_refuter, tau1, tau2

__all__ = [
    "AlgebraSpec", "Endo", "FnTable", "InvalidSpec", "Membership", "SpecError", "StoneSpace",
    "is_member", "sigma", "spec_from_cycles", "sup_omega", "GelfandDemo", "gelfand_demo",
    "IdealView", "in_J", "in_My", "in_O", "in_O_units", "maximality_witness", "Lattice",
    "LatticeNode", "lattice", "Expansion", "ResidueAlgebra", "expand_function",
    "residue_algebra", "Separation", "enumerate_members", "implication_three_holds",
    "member_count_formula", "random_member", "separates", "separates_by_enumeration",
    "separating_function", "OutsideUnitBall", "RefuterVerdict", "series_membership_refuter",
    "tau1", "tau2",
]
