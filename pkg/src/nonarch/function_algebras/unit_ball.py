"""Experiments on the closed unit ball of Q_5(sqrt2): tau_1, tau_2 and power series."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..extensions.quadratic import Q5_SQRT2, QuadExtElement, QuadraticExtension


class OutsideUnitBall(ValueError):
    pass


def _check_ball(x: QuadExtElement):
    if x.field.omega(x) < 0:
        raise OutsideUnitBall("outside unit ball")


def tau1(x: QuadExtElement) -> QuadExtElement:
    """The Galois conjugation restricted to the unit ball."""
    _check_ball(x)
    return x.field.conjugate(x)


def tau2(x: QuadExtElement) -> QuadExtElement:
    """5x when omega(x) is even, x/5 when it is odd, and 0 at 0."""
    _check_ball(x)
    if x.is_zero():
        return x
    if x.field.omega(x) % 2 == 0:
        return x * 5
    return x * Fraction(1, 5)


def evaluate(coeffs: Sequence[QuadExtElement], x: QuadExtElement) -> QuadExtElement:
    acc = x.field.zero()
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def default_samples(field: QuadraticExtension, degree: int) -> list[QuadExtElement]:
    """0, 1 and points of omega 0 and 1, then rational integers up to degree + 1.

    More than ``degree`` rational integers with distinct images under g make a
    witness certain whenever one exists, since f(tau_1 x) - g(f(x)) is a
    polynomial in g(x) of degree at most ``degree``.
    """
    th = field.theta()
    pts = [field.zero(), field.one(), th, field.one() + th, field.from_int(5), th * 5]
    pts += [field.from_int(j) for j in range(2, degree + 3)]
    return pts


@dataclass(frozen=True)
class RefuterVerdict:
    verdict: str  # "consistent" | "refuted"
    witness: QuadExtElement | None = None
    offending_index: int | None = None


def series_membership_refuter(coeffs: Sequence[QuadExtElement],
                              samples: Sequence[QuadExtElement] | None = None) -> RefuterVerdict:
    """Decide whether the truncated series can lie in C(Delta_L, tau_1, g).

    The decision is by coefficients: every coefficient must lie in Q_5.
    Sampling supplies the witness x with f(tau_1 x) != g(f(x)).
    """
    if not coeffs:
        return RefuterVerdict("consistent")
    field = coeffs[0].field
    bad = next((i for i, c in enumerate(coeffs) if not c.b.is_zero()), None)
    if samples is None:
        samples = default_samples(field, len(coeffs) - 1)
    for x in samples:
        lhs = evaluate(coeffs, tau1(x))
        rhs = field.conjugate(evaluate(coeffs, x))
        if not lhs == rhs:
            if bad is None:
                raise AssertionError("sampled violation with Q_5 coefficients")
            return RefuterVerdict("refuted", x, bad)
    if bad is not None:
        # coefficient criterion decides; no sampled witness at this precision
        return RefuterVerdict("refuted", None, bad)
    return RefuterVerdict("consistent")


__all__ = ["tau1", "tau2", "series_membership_refuter", "RefuterVerdict", "OutsideUnitBall",
           "evaluate", "default_samples", "Q5_SQRT2"]
