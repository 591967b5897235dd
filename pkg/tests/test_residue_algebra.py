import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from nonarch.extensions import F25, Q5_SQRT2, GaloisAut, ResidueRepSet, omega, stable_reps
from nonarch.function_algebras import (
    FnTable, enumerate_members, expand_function, in_J, is_member, random_member,
    residue_algebra, spec_from_cycles,
)
from nonarch.function_algebras.residue_algebra import RepsNotStable

L = Q5_SQRT2
gL = GaloisAut(L, 1)


@pytest.fixture(scope="module")
def reps():
    return stable_reps(gL)


@pytest.fixture(scope="module")
def ra():
    return residue_algebra(spec_from_cycles(["x", "y"], [["x", "y"]], gL))


def resum_error(f, exp):
    diff = f - exp.partial_sum()
    return min(omega(v) for v in diff.values)


def test_expand_sqrt2(reps):
    spec = spec_from_cycles(["x"], [], gL)
    f = spec.constant(L.theta())
    exp = expand_function(f, reps, depth=6)
    assert exp.start == 0
    assert exp.layers[0]("x") == reps.rep_of(L.residue(L.theta()))
    assert resum_error(f, exp) >= 6


def test_expand_three(reps):
    spec = spec_from_cycles(["x"], [], gL)
    exp = expand_function(spec.constant(L.from_int(3)), reps)
    assert exp.layers[0]("x") == L.from_int(3)
    assert all(layer("x").is_zero() for layer in exp.layers[1:])


@settings(max_examples=40)
@given(st.integers(0, 2 ** 32))
def test_expansion_layers_are_members(seed):
    rng = random.Random(seed)
    reps = stable_reps(gL)
    spec = spec_from_cycles(["a", "b", "c"], [["a", "b"]], gL)
    f = random_member(spec, rng, vmin=-2, vmax=3)
    exp = expand_function(f, reps, depth=5)
    for layer in exp.layers:
        assert is_member(layer, spec)
        assert all(reps.index_of(v) is not None for v in layer.values)
    assert resum_error(f, exp) >= exp.start + 5


def test_unstable_reps_rejected(reps):
    # drop closure by swapping in a rep that g sends outside the set
    elems = list(reps.elements)
    i = next(i for i, r in enumerate(elems) if not gL(r) == r)
    elems[i] = elems[i] + L.from_int(5)
    broken = ResidueRepSet(L, gL, tuple(elems), 5)
    spec = spec_from_cycles(["x"], [], gL)
    with pytest.raises(RepsNotStable):
        expand_function(spec.constant(L.one()), broken)


def test_phi_unital(ra):
    one = ra.spec.constant(L.one())
    assert ra.phi(one) == ra.residue_spec.constant(F25.one())


def test_residue_spec_uses_frobenius(ra):
    assert ra.residue_spec.field is F25
    assert ra.residue_spec.g.order == 2


def test_image_matches_enumeration(ra):
    target = enumerate_members(ra.residue_spec)
    assert len(target) == 25
    image = {ra.phi(ra.lift(fb)).key() for fb in target}
    assert image == {fb.key() for fb in target}
    rng = random.Random(5)
    for _ in range(50):
        f = random_member(ra.spec, rng, vmin=0, vmax=2)
        assert ra.phi(f).key() in image


def test_phi_homomorphism_and_kernel(ra):
    rng = random.Random(17)
    for _ in range(100):
        f = random_member(ra.spec, rng, vmin=0, vmax=2)
        h = random_member(ra.spec, rng, vmin=0, vmax=2)
        assert ra.phi(f + h) == ra.phi(f) + ra.phi(h)
        assert ra.phi(f * h) == ra.phi(f) * ra.phi(h)
        assert ra.in_kernel(f) == in_J(f, ra.spec)
        jf = f * 5
        assert ra.in_kernel(jf) and in_J(jf, ra.spec)


def test_phi_undefined_off_O(ra):
    f = ra.spec.constant(L.element(Fraction(1, 5)))
    with pytest.raises(ValueError):
        ra.phi(f)


def test_phi_injective_on_rep_valued(ra):
    seen = {}
    for fb in enumerate_members(ra.residue_spec):
        f = ra.lift(fb)
        k = ra.phi(f).key()
        assert k not in seen
        seen[k] = f
